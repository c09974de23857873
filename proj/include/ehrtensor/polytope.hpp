#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ehrtensor/tensor.hpp"

namespace ehrtensor {

// Default cap on the ambient dimension accepted by the front ends.
inline constexpr int kMaxAmbientDim = 6;

// Supporting inequality normal . c <= offset in the intrinsic lattice
// coordinates of the affine hull (see LatticePolytope::to_local).
struct Facet {
  IntVec normal;
  long long offset = 0;
  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

// x -> matrix * x + translation with det(matrix) = +1.
struct UnimodularMap {
  IntMatrix matrix;
  IntVec translation;

  static UnimodularMap identity(int n);
  // Throws std::invalid_argument unless det(matrix) == 1.
  static UnimodularMap linear(IntMatrix matrix);

  IntVec apply(const IntVec& x) const;
  UnimodularMap inverse() const;
};

// Convex hull of finitely many integer points, stored canonically: vertices
// are the extreme points, sorted lexicographically.
//
// The affine hull is described by an origin and a basis of its lattice
// (aff(P) intersected with Z^n), so a d-dimensional polytope is handled as a
// full-dimensional polytope in Z^d. For full-dimensional polytopes the origin
// is 0 and the basis is the identity, so local and ambient coordinates agree.
class LatticePolytope {
 public:
  static LatticePolytope empty(int ambient_dim);
  // Empty input yields the empty polytope of the given ambient dimension.
  // Throws std::invalid_argument on mixed dimensions.
  static LatticePolytope from_points(std::span<const IntVec> points, int ambient_dim = -1);
  static LatticePolytope from_points(std::initializer_list<IntVec> points) {
    return from_points(std::span<const IntVec>(points.begin(), points.size()));
  }

  bool is_empty() const { return vertices_.empty(); }
  int ambient_dim() const { return ambient_dim_; }
  // Affine dimension; -1 for the empty polytope.
  int dim() const { return dim_; }

  const std::vector<IntVec>& vertices() const { return vertices_; }
  const IntVec& hull_origin() const { return origin_; }
  const std::vector<IntVec>& hull_basis() const { return basis_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::vector<IntVec> local_vertices() const;

  // Intrinsic coordinates of x, or nullopt if x is not a lattice point of
  // the affine hull.
  std::optional<IntVec> to_local(const IntVec& x) const;
  IntVec to_ambient(const IntVec& local) const;

  bool contains(const IntVec& x) const;
  bool contains_relint(const IntVec& x) const;

  friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  LatticePolytope() = default;

  int ambient_dim_ = 0;
  int dim_ = -1;
  std::vector<IntVec> vertices_;
  IntVec origin_;
  std::vector<IntVec> basis_;
  std::vector<IntVec> coord_rows_;
  std::vector<Facet> facets_;
};

// conv(0, e_1, ..., e_k) in R^n.
LatticePolytope standard_simplex(int k, int n);
// [0, side]^n.
LatticePolytope cube(int n, long long side = 1);

LatticePolytope dilate(const LatticePolytope& p, long long k);
LatticePolytope translate(const LatticePolytope& p, const IntVec& y);
LatticePolytope transform(const LatticePolytope& p, const UnimodularMap& phi);
LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope negate(const LatticePolytope& p);

// P + [0, e_n] for P inside the hyperplane x_n = 0.
LatticePolytope prism(const LatticePolytope& p);

// The n unimodular simplices S_1 = T_n and
// S_i = conv(e_0 + e_n, ..., e_{i-1} + e_n, e_{i-1}, ..., e_{n-1}), e_0 = 0,
// which dissect T_{n-1} + [0, e_n].
std::vector<LatticePolytope> dissect_prism(int n);

// All non-empty faces, including P, ordered by (dim, vertices).
std::vector<LatticePolytope> faces(const LatticePolytope& p);

struct HyperplaneSplit {
  LatticePolytope lower;  // P intersected with {a.x <= b}
  LatticePolytope upper;  // P intersected with {a.x >= b}
  LatticePolytope slice;  // P intersected with {a.x == b}
};

// Splits P by the hyperplane a.x = b when all three pieces are lattice
// polytopes and both halves are non-empty; nullopt otherwise.
std::optional<HyperplaneSplit> split(const LatticePolytope& p, const IntVec& a, long long b);

// Product of `steps` random elementary matrices and even coordinate
// permutations. Deterministic for a given seed.
UnimodularMap random_unimodular(int n, std::uint64_t seed, int steps);

// Hull of `count` random points in [0, bound]^n; may be lower-dimensional.
LatticePolytope random_polytope(std::uint64_t seed, int n, int count, long long bound);

long long determinant(const IntMatrix& m);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);

// Absolute value of det of the edge vectors from the first vertex, i.e. n!
// times the volume, for a polytope with exactly n+1 vertices in R^n.
long long normalized_simplex_volume(const LatticePolytope& simplex);

}  // namespace ehrtensor
