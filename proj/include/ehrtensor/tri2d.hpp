#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ehrtensor/polytope.hpp"
#include "ehrtensor/tensor.hpp"

namespace ehrtensor {

using Edge = std::pair<int, int>;  // point indices, first < second

// Triangulation of a lattice polygon using every lattice point as a vertex.
// Triangles are counter-clockwise index triples, rotated so the smallest
// index comes first, and kept sorted.
struct Triangulation2D {
  std::vector<IntVec> points;
  std::vector<std::array<int, 3>> triangles;
  // Edge -> indices of the (one or two) adjacent triangles.
  std::map<Edge, std::vector<int>> adjacency;

  void rebuild_adjacency();
  friend bool operator==(const Triangulation2D& a, const Triangulation2D& b) {
    return a.points == b.points && a.triangles == b.triangles;
  }
};

// Incremental lex-order insertion. Throws std::invalid_argument unless P is a
// 2-dimensional polygon in R^2.
Triangulation2D unimodular_triangulation(const LatticePolytope& p);

// Empty string when `t` is a unimodular triangulation of P, else the reason.
std::string validate(const Triangulation2D& t, const LatticePolytope& p);

std::vector<Edge> interior_edges(const Triangulation2D& t);
bool is_flippable(const Triangulation2D& t, Edge e);

// Replaces the diagonal `e` of the quadrilateral formed by its two triangles.
// Throws std::invalid_argument for boundary edges and for quadrilaterals that
// are not strictly convex.
Triangulation2D flip(const Triangulation2D& t, Edge e);

// `steps` uniformly chosen admissible flips, deterministic in `seed`.
Triangulation2D flip_walk(const Triangulation2D& t, std::uint64_t seed, int steps);

// L^3_1(S)^3 for a single lattice triangle S.
SymTensor n_contribution(const IntVec& a, const IntVec& b, const IntVec& c);

// N(P) = sum over the triangles S of L^3_1(S)^3; zero for dim(P) <= 1.
SymTensor valuation_n(const LatticePolytope& p);
SymTensor valuation_n(const Triangulation2D& t);

// sum_S W o psi_S^t where psi_S maps T_2 onto S - a, i.e. the simple,
// translation invariant valuation with value W on T_2 (if it exists).
SymTensor simple_valuation_from_seed(const Triangulation2D& t, const SymTensor& seed);

// Random lattice polygon: hull of `count` random points in [0, bound]^2,
// retried until 2-dimensional.
LatticePolytope random_polygon(std::uint64_t seed, int count, long long bound);

}  // namespace ehrtensor
