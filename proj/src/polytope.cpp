#include "ehrtensor/polytope.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>
#include <stdexcept>

#include "intlinalg.hpp"

namespace ehrtensor {

namespace {

long long dot(const IntVec& a, const IntVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec sub(const IntVec& a, const IntVec& b) {
  IntVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// Normal of the hyperplane through the d-1 difference vectors in Z^d
// (generalized cross product), or the zero vector if they are dependent.
IntVec cross_normal(const std::vector<IntVec>& diffs, int d) {
  IntVec normal(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    IntMatrix minor;
    for (const auto& v : diffs) {
      IntVec row;
      for (int c = 0; c < d; ++c)
        if (c != j) row.push_back(v[static_cast<std::size_t>(c)]);
      minor.push_back(std::move(row));
    }
    long long det = detail::determinant(minor);
    normal[static_cast<std::size_t>(j)] = (j % 2 == 0) ? det : -det;
  }
  long long g = detail::gcd_of(normal);
  if (g != 0)
    for (auto& x : normal) x /= g;
  return normal;
}

// Facets of conv(points) in Z^d, assuming the points affinely span Z^d.
std::vector<Facet> compute_facets(const std::vector<IntVec>& points, int d) {
  std::set<Facet> found;
  if (d == 0) return {};
  const std::size_t m = points.size();
  std::vector<std::size_t> pick(static_cast<std::size_t>(d));
  // Iterate over all d-subsets in lexicographic order.
  for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
  if (pick.size() > m) return {};
  while (true) {
    std::vector<IntVec> diffs;
    for (std::size_t i = 1; i < pick.size(); ++i) diffs.push_back(sub(points[pick[i]], points[pick[0]]));
    IntVec normal = cross_normal(diffs, d);
    if (detail::gcd_of(normal) != 0) {
      const long long base = dot(normal, points[pick[0]]);
      bool any_below = false, any_above = false;
      for (const auto& p : points) {
        long long s = dot(normal, p) - base;
        any_below |= s < 0;
        any_above |= s > 0;
      }
      if (!any_above) found.insert(Facet{normal, base});
      if (!any_below) {
        IntVec neg = normal;
        for (auto& x : neg) x = -x;
        found.insert(Facet{neg, -base});
      }
    }
    // advance combination
    std::size_t i = pick.size();
    while (i > 0 && pick[i - 1] == m - pick.size() + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

std::mt19937_64::result_type draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

UnimodularMap UnimodularMap::identity(int n) {
  IntMatrix m(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return UnimodularMap{m, IntVec(static_cast<std::size_t>(n), 0)};
}

UnimodularMap UnimodularMap::linear(IntMatrix matrix) {
  if (determinant(matrix) != 1) throw std::invalid_argument("matrix is not in SL_n(Z)");
  const auto n = matrix.size();
  return UnimodularMap{std::move(matrix), IntVec(n, 0)};
}

IntVec UnimodularMap::apply(const IntVec& x) const {
  IntVec out = translation;
  for (std::size_t i = 0; i < matrix.size(); ++i) out[i] += dot(matrix[i], x);
  return out;
}

UnimodularMap UnimodularMap::inverse() const {
  // Adjugate; det = 1 so the inverse is integral.
  const std::size_t n = matrix.size();
  IntMatrix inv(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        IntVec row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(matrix[r][c]);
        minor.push_back(std::move(row));
      }
      long long cof = detail::determinant(minor);
      inv[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }
  UnimodularMap out{inv, IntVec(n, 0)};
  IntVec t = out.apply(translation);
  for (auto& x : t) x = -x;
  out.translation = t;
  return out;
}

LatticePolytope LatticePolytope::empty(int ambient_dim) {
  LatticePolytope p;
  p.ambient_dim_ = std::max(ambient_dim, 0);
  return p;
}

LatticePolytope LatticePolytope::from_points(std::span<const IntVec> points, int ambient_dim) {
  if (points.empty()) return empty(ambient_dim);
  const int n = static_cast<int>(points.front().size());
  if (ambient_dim >= 0 && ambient_dim != n) throw std::invalid_argument("point dimension differs from ambient dimension");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != n) throw std::invalid_argument("points have mixed dimensions");
  }
  std::vector<IntVec> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  LatticePolytope poly;
  poly.ambient_dim_ = n;

  IntMatrix edges;
  for (std::size_t i = 1; i < pts.size(); ++i) edges.push_back(sub(pts[i], pts[0]));
  auto normal_space = detail::integer_kernel(edges, n);
  if (normal_space.basis.empty()) {
    poly.origin_ = IntVec(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      IntVec e(static_cast<std::size_t>(n), 0);
      e[static_cast<std::size_t>(i)] = 1;
      poly.basis_.push_back(e);
      poly.coord_rows_.push_back(e);
    }
  } else {
    poly.origin_ = pts[0];
    auto lattice = detail::integer_kernel(normal_space.basis, n);
    poly.basis_ = std::move(lattice.basis);
    poly.coord_rows_ = std::move(lattice.coordinates);
  }
  poly.dim_ = static_cast<int>(poly.basis_.size());

  std::vector<IntVec> local;
  local.reserve(pts.size());
  for (const auto& p : pts) local.push_back(*poly.to_local(p));
  poly.facets_ = compute_facets(local, poly.dim_);

  if (poly.dim_ == 0) {
    poly.vertices_ = pts;
    return poly;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    IntMatrix tight;
    for (const auto& f : poly.facets_)
      if (dot(f.normal, local[i]) == f.offset) tight.push_back(f.normal);
    if (detail::integer_rank(tight) == poly.dim_) poly.vertices_.push_back(pts[i]);
  }
  return poly;
}

std::vector<IntVec> LatticePolytope::local_vertices() const {
  std::vector<IntVec> out;
  for (const auto& v : vertices_) out.push_back(*to_local(v));
  return out;
}

std::optional<IntVec> LatticePolytope::to_local(const IntVec& x) const {
  if (dim_ < 0 || static_cast<int>(x.size()) != ambient_dim_) return std::nullopt;
  IntVec shifted = sub(x, origin_);
  IntVec c(coord_rows_.size());
  for (std::size_t i = 0; i < coord_rows_.size(); ++i) c[i] = dot(coord_rows_[i], shifted);
  if (to_ambient(c) != x) return std::nullopt;
  return c;
}

IntVec LatticePolytope::to_ambient(const IntVec& local) const {
  IntVec out = origin_;
  for (std::size_t j = 0; j < basis_.size(); ++j)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += local[j] * basis_[j][i];
  return out;
}

bool LatticePolytope::contains(const IntVec& x) const {
  auto c = to_local(x);
  if (!c) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, *c) <= f.offset; });
}

bool LatticePolytope::contains_relint(const IntVec& x) const {
  auto c = to_local(x);
  if (!c) return false;
  return std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, *c) < f.offset; });
}

LatticePolytope standard_simplex(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("standard_simplex requires 0 <= k <= n");
  std::vector<IntVec> pts{IntVec(static_cast<std::size_t>(n), 0)};
  for (int i = 0; i < k; ++i) {
    IntVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    pts.push_back(e);
  }
  return LatticePolytope::from_points(pts);
}

LatticePolytope cube(int n, long long side) {
  std::vector<IntVec> pts;
  for (int mask = 0; mask < (1 << n); ++mask) {
    IntVec v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = (mask >> i & 1) ? side : 0;
    pts.push_back(v);
  }
  return LatticePolytope::from_points(pts);
}

LatticePolytope dilate(const LatticePolytope& p, long long k) {
  if (k < 0) throw std::invalid_argument("dilation factor must be non-negative");
  std::vector<IntVec> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x *= k;
  return LatticePolytope::from_points(pts, p.ambient_dim());
}

LatticePolytope translate(const LatticePolytope& p, const IntVec& y) {
  if (static_cast<int>(y.size()) != p.ambient_dim()) throw std::invalid_argument("translate: dimension mismatch");
  std::vector<IntVec> pts = p.vertices();
  for (auto& v : pts)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += y[i];
  return LatticePolytope::from_points(pts, p.ambient_dim());
}

LatticePolytope transform(const LatticePolytope& p, const UnimodularMap& phi) {
  if (static_cast<int>(phi.matrix.size()) != p.ambient_dim()) throw std::invalid_argument("transform: dimension mismatch");
  std::vector<IntVec> pts;
  for (const auto& v : p.vertices()) pts.push_back(phi.apply(v));
  return LatticePolytope::from_points(pts, p.ambient_dim());
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("minkowski_sum: dimension mismatch");
  std::vector<IntVec> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      IntVec s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      pts.push_back(std::move(s));
    }
  }
  return LatticePolytope::from_points(pts, p.ambient_dim());
}

LatticePolytope negate(const LatticePolytope& p) {
  std::vector<IntVec> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x = -x;
  return LatticePolytope::from_points(pts, p.ambient_dim());
}

LatticePolytope prism(const LatticePolytope& p) {
  const int n = p.ambient_dim();
  std::vector<IntVec> pts;
  for (const auto& v : p.vertices()) {
    if (v.back() != 0) throw std::invalid_argument("prism: polytope must lie in the hyperplane x_n = 0");
    pts.push_back(v);
    IntVec top = v;
    top.back() = 1;
    pts.push_back(std::move(top));
  }
  return LatticePolytope::from_points(pts, n);
}

std::vector<LatticePolytope> dissect_prism(int n) {
  if (n < 2) throw std::invalid_argument("dissect_prism requires n >= 2");
  // e(0) is the origin, e(j) the j-th unit vector (1-based).
  auto e = [n](int j) {
    IntVec v(static_cast<std::size_t>(n), 0);
    if (j > 0) v[static_cast<std::size_t>(j - 1)] = 1;
    return v;
  };
  std::vector<LatticePolytope> out{standard_simplex(n, n)};
  for (int i = 2; i <= n; ++i) {
    std::vector<IntVec> pts;
    for (int j = 0; j <= i - 1; ++j) {
      IntVec v = e(j);
      v[static_cast<std::size_t>(n - 1)] += 1;
      pts.push_back(v);
    }
    for (int j = i - 1; j <= n - 1; ++j) pts.push_back(e(j));
    out.push_back(LatticePolytope::from_points(pts));
  }
  return out;
}

std::vector<LatticePolytope> faces(const LatticePolytope& p) {
  if (p.is_empty()) return {};
  const auto& verts = p.vertices();
  const auto local = p.local_vertices();
  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& f : p.facets()) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < local.size(); ++i)
      if (dot(f.normal, local[i]) == f.offset) s.push_back(i);
    facet_sets.push_back(std::move(s));
  }
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::deque<std::vector<std::size_t>> queue;
  for (const auto& s : facet_sets)
    if (seen.insert(s).second) queue.push_back(s);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (const auto& f : facet_sets) {
      std::vector<std::size_t> meet;
      std::set_intersection(cur.begin(), cur.end(), f.begin(), f.end(), std::back_inserter(meet));
      if (!meet.empty() && seen.insert(meet).second) queue.push_back(std::move(meet));
    }
  }
  std::vector<LatticePolytope> out;
  for (const auto& s : seen) {
    std::vector<IntVec> pts;
    for (auto i : s) pts.push_back(verts[i]);
    out.push_back(LatticePolytope::from_points(pts, p.ambient_dim()));
  }
  std::sort(out.begin(), out.end(), [](const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.vertices() < b.vertices();
  });
  return out;
}

std::optional<HyperplaneSplit> split(const LatticePolytope& p, const IntVec& a, long long b) {
  if (p.is_empty() || static_cast<int>(a.size()) != p.ambient_dim()) return std::nullopt;
  std::vector<IntVec> lower, upper, slice;
  for (const auto& v : p.vertices()) {
    long long s = dot(a, v);
    if (s <= b) lower.push_back(v);
    if (s >= b) upper.push_back(v);
    if (s == b) slice.push_back(v);
  }
  if (lower.size() == p.vertices().size() || upper.size() == p.vertices().size()) return std::nullopt;
  for (const auto& edge : faces(p)) {
    if (edge.dim() != 1) continue;
    const IntVec& u = edge.vertices()[0];
    const IntVec& w = edge.vertices()[1];
    long long su = dot(a, u) - b, sw = dot(a, w) - b;
    if ((su < 0 && sw > 0) || (su > 0 && sw < 0)) {
      // Crossing point u + t (w - u) with t = -su / (sw - su).
      long long den = sw - su;
      IntVec x(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) {
        long long num = -su * (w[i] - u[i]);
        if (num % den != 0) return std::nullopt;
        x[i] = u[i] + num / den;
      }
      lower.push_back(x);
      upper.push_back(x);
      slice.push_back(x);
    }
  }
  const int n = p.ambient_dim();
  return HyperplaneSplit{LatticePolytope::from_points(lower, n), LatticePolytope::from_points(upper, n),
                         LatticePolytope::from_points(slice, n)};
}

UnimodularMap random_unimodular(int n, std::uint64_t seed, int steps) {
  if (steps < 0) throw std::invalid_argument("random_unimodular: steps must be non-negative");
  std::mt19937_64 rng(seed);
  IntMatrix m = UnimodularMap::identity(n).matrix;
  for (int s = 0; s < steps && n > 1; ++s) {
    IntMatrix step = UnimodularMap::identity(n).matrix;
    if (n >= 3 && draw(rng, 4) == 0) {
      // 3-cycle on three distinct coordinates.
      std::vector<int> idx(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < 3; ++i) std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(i) + draw(rng, static_cast<std::uint64_t>(n - i))]);
      auto a = static_cast<std::size_t>(idx[0]), b = static_cast<std::size_t>(idx[1]), c = static_cast<std::size_t>(idx[2]);
      step[a][a] = step[b][b] = step[c][c] = 0;
      step[b][a] = step[c][b] = step[a][c] = 1;
    } else {
      auto j = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(n)));
      auto k = static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(n - 1)));
      if (k >= j) ++k;
      step[k][j] = draw(rng, 2) == 0 ? 1 : -1;  // e_j -> e_j +- e_k
    }
    m = matmul(step, m);
  }
  return UnimodularMap{m, IntVec(static_cast<std::size_t>(n), 0)};
}

LatticePolytope random_polytope(std::uint64_t seed, int n, int count, long long bound) {
  std::mt19937_64 rng(seed);
  std::vector<IntVec> pts(static_cast<std::size_t>(count), IntVec(static_cast<std::size_t>(n)));
  for (auto& x : pts)
    for (auto& c : x) c = static_cast<long long>(draw(rng, static_cast<std::uint64_t>(bound + 1)));
  return LatticePolytope::from_points(pts, n);
}

long long determinant(const IntMatrix& m) { return detail::determinant(m); }

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("matmul: shape mismatch");
  IntMatrix out(a.size(), IntVec(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

long long normalized_simplex_volume(const LatticePolytope& simplex) {
  const auto& v = simplex.vertices();
  if (static_cast<int>(v.size()) != simplex.ambient_dim() + 1) {
    throw std::invalid_argument("normalized_simplex_volume: not a full-dimensional simplex");
  }
  IntMatrix edges;
  for (std::size_t i = 1; i < v.size(); ++i) edges.push_back(sub(v[i], v[0]));
  long long d = determinant(edges);
  return d < 0 ? -d : d;
}

}  // namespace ehrtensor
