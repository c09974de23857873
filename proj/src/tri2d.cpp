#include "ehrtensor/tri2d.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "ehrtensor/ehrhart.hpp"
#include "ehrtensor/points.hpp"

namespace ehrtensor {

namespace {

long long orient(const IntVec& a, const IntVec& b, const IntVec& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

std::array<int, 3> canonical(const Triangulation2D& t, int a, int b, int c) {
  if (orient(t.points[static_cast<std::size_t>(a)], t.points[static_cast<std::size_t>(b)],
             t.points[static_cast<std::size_t>(c)]) < 0)
    std::swap(b, c);
  std::array<int, 3> tri{a, b, c};
  std::rotate(tri.begin(), std::min_element(tri.begin(), tri.end()), tri.end());
  return tri;
}

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

int opposite(const std::array<int, 3>& tri, Edge e) {
  for (int v : tri)
    if (v != e.first && v != e.second) return v;
  return -1;
}

void finish(Triangulation2D& t) {
  std::sort(t.triangles.begin(), t.triangles.end());
  t.rebuild_adjacency();
}

}  // namespace

void Triangulation2D::rebuild_adjacency() {
  adjacency.clear();
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    const auto& tri = triangles[i];
    for (int k = 0; k < 3; ++k) adjacency[make_edge(tri[static_cast<std::size_t>(k)], tri[static_cast<std::size_t>((k + 1) % 3)])].push_back(static_cast<int>(i));
  }
}

Triangulation2D unimodular_triangulation(const LatticePolytope& p) {
  if (p.ambient_dim() != 2 || p.dim() != 2)
    throw std::invalid_argument("unimodular_triangulation: need a 2-dimensional polygon in the plane");
  Triangulation2D t;
  t.points = lattice_points(p);
  const auto& pts = t.points;
  const int total = static_cast<int>(pts.size());
  auto pt = [&](int i) -> const IntVec& { return pts[static_cast<std::size_t>(i)]; };

  // Leading collinear chain; lex order keeps it sorted along its line.
  int first = 2;
  while (orient(pt(0), pt(1), pt(first)) == 0) ++first;
  std::vector<int> hull;
  for (int i = 0; i + 1 < first; ++i) t.triangles.push_back(canonical(t, i, i + 1, first));
  if (orient(pt(0), pt(first - 1), pt(first)) > 0) {
    for (int i = 0; i < first; ++i) hull.push_back(i);
  } else {
    for (int i = first - 1; i >= 0; --i) hull.push_back(i);
  }
  hull.push_back(first);

  for (int q = first + 1; q < total; ++q) {
    const std::size_t m = hull.size();
    std::vector<bool> visible(m);
    for (std::size_t i = 0; i < m; ++i) visible[i] = orient(pt(hull[i]), pt(hull[(i + 1) % m]), pt(q)) < 0;
    std::size_t start = 0;
    while (!(visible[start] && !visible[(start + m - 1) % m])) ++start;
    std::size_t end = start;
    while (visible[end % m]) {
      t.triangles.push_back(canonical(t, hull[end % m], hull[(end + 1) % m], q));
      ++end;
    }
    std::vector<int> next;
    for (std::size_t i = end % m;; i = (i + 1) % m) {
      next.push_back(hull[i]);
      if (i == start) break;
    }
    next.push_back(q);
    hull = std::move(next);
  }
  finish(t);
  return t;
}

std::string validate(const Triangulation2D& t, const LatticePolytope& p) {
  if (t.points != lattice_points(p)) return "vertex set differs from the lattice points of P";
  std::vector<bool> used(t.points.size());
  for (const auto& tri : t.triangles) {
    const long long det = orient(t.points[static_cast<std::size_t>(tri[0])], t.points[static_cast<std::size_t>(tri[1])],
                                 t.points[static_cast<std::size_t>(tri[2])]);
    if (det != 1) return "triangle is not unimodular and counter-clockwise";
    for (int v : tri) used[static_cast<std::size_t>(v)] = true;
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) return "unused lattice point";
  // Pick: 2 area = 2I + B - 2 triangles of area 1/2.
  const auto interior = static_cast<long long>(count_relint(p));
  const auto boundary = static_cast<long long>(t.points.size()) - interior;
  if (static_cast<long long>(t.triangles.size()) != 2 * interior + boundary - 2) return "area mismatch";
  for (const auto& [e, adj] : t.adjacency) {
    if (adj.size() > 2) return "edge shared by more than two triangles";
    if (adj.size() == 2) {
      const auto& a = t.points[static_cast<std::size_t>(e.first)];
      const auto& b = t.points[static_cast<std::size_t>(e.second)];
      const auto& c = t.points[static_cast<std::size_t>(opposite(t.triangles[static_cast<std::size_t>(adj[0])], e))];
      const auto& d = t.points[static_cast<std::size_t>(opposite(t.triangles[static_cast<std::size_t>(adj[1])], e))];
      if ((orient(a, b, c) > 0) == (orient(a, b, d) > 0)) return "overlapping triangles";
    }
  }
  return {};
}

std::vector<Edge> interior_edges(const Triangulation2D& t) {
  std::vector<Edge> out;
  for (const auto& [e, adj] : t.adjacency)
    if (adj.size() == 2) out.push_back(e);
  return out;
}

bool is_flippable(const Triangulation2D& t, Edge e) {
  e = make_edge(e.first, e.second);
  const auto it = t.adjacency.find(e);
  if (it == t.adjacency.end() || it->second.size() != 2) return false;
  const int c = opposite(t.triangles[static_cast<std::size_t>(it->second[0])], e);
  const int d = opposite(t.triangles[static_cast<std::size_t>(it->second[1])], e);
  const auto& pc = t.points[static_cast<std::size_t>(c)];
  const auto& pd = t.points[static_cast<std::size_t>(d)];
  const long long sa = orient(pc, pd, t.points[static_cast<std::size_t>(e.first)]);
  const long long sb = orient(pc, pd, t.points[static_cast<std::size_t>(e.second)]);
  return (sa > 0 && sb < 0) || (sa < 0 && sb > 0);
}

Triangulation2D flip(const Triangulation2D& t, Edge e) {
  e = make_edge(e.first, e.second);
  const auto it = t.adjacency.find(e);
  if (it == t.adjacency.end() || it->second.size() != 2) throw std::invalid_argument("flip: not an interior edge");
  if (!is_flippable(t, e)) throw std::invalid_argument("flip: quadrilateral is not strictly convex");
  const int i = it->second[0], j = it->second[1];
  const int c = opposite(t.triangles[static_cast<std::size_t>(i)], e);
  const int d = opposite(t.triangles[static_cast<std::size_t>(j)], e);
  Triangulation2D out = t;
  out.triangles[static_cast<std::size_t>(i)] = canonical(out, c, d, e.first);
  out.triangles[static_cast<std::size_t>(j)] = canonical(out, c, d, e.second);
  finish(out);
  return out;
}

Triangulation2D flip_walk(const Triangulation2D& t, std::uint64_t seed, int steps) {
  std::mt19937_64 rng(seed);
  Triangulation2D cur = t;
  for (int s = 0; s < steps; ++s) {
    std::vector<Edge> candidates;
    for (const auto& e : interior_edges(cur))
      if (is_flippable(cur, e)) candidates.push_back(e);
    if (candidates.empty()) break;
    cur = flip(cur, candidates[rng() % candidates.size()]);
  }
  return cur;
}

SymTensor n_contribution(const IntVec& a, const IntVec& b, const IntVec& c) {
  const auto s = LatticePolytope::from_points({a, b, c});
  const SymTensor l31 = ehrhart_tensors(s, 3).coefficients[1];
  return sym_product(sym_product(l31, l31), l31);
}

SymTensor valuation_n(const LatticePolytope& p) {
  if (p.ambient_dim() != 2) throw std::invalid_argument("valuation_n: polygon must lie in the plane");
  if (p.dim() <= 1) return SymTensor(2, 9);
  return valuation_n(unimodular_triangulation(p));
}

SymTensor valuation_n(const Triangulation2D& t) {
  // L^3_1 is translation invariant, so triangles are cached by their shape.
  std::map<std::vector<IntVec>, SymTensor> cache;
  SymTensor total(2, 9);
  for (const auto& tri : t.triangles) {
    const auto& a = t.points[static_cast<std::size_t>(tri[0])];
    std::vector<IntVec> shape;
    for (int v : tri) {
      const auto& x = t.points[static_cast<std::size_t>(v)];
      shape.push_back({x[0] - a[0], x[1] - a[1]});
    }
    auto it = cache.find(shape);
    if (it == cache.end()) it = cache.emplace(shape, n_contribution(shape[0], shape[1], shape[2])).first;
    total += it->second;
  }
  return total;
}

SymTensor simple_valuation_from_seed(const Triangulation2D& t, const SymTensor& seed) {
  if (seed.dim() != 2) throw std::invalid_argument("simple_valuation_from_seed: seed must live on R^2");
  SymTensor total(2, seed.rank());
  for (const auto& tri : t.triangles) {
    const auto& a = t.points[static_cast<std::size_t>(tri[0])];
    const auto& b = t.points[static_cast<std::size_t>(tri[1])];
    const auto& c = t.points[static_cast<std::size_t>(tri[2])];
    // Columns b - a and c - a; counter-clockwise order makes det = 1.
    const IntMatrix psi{{b[0] - a[0], c[0] - a[0]}, {b[1] - a[1], c[1] - a[1]}};
    total += apply_linear(seed, psi);
  }
  return total;
}

LatticePolytope random_polygon(std::uint64_t seed, int count, long long bound) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<IntVec> pts;
    for (int i = 0; i < count; ++i)
      pts.push_back({static_cast<long long>(rng() % static_cast<std::uint64_t>(bound + 1)),
                     static_cast<long long>(rng() % static_cast<std::uint64_t>(bound + 1))});
    auto p = LatticePolytope::from_points(pts);
    if (p.dim() == 2) return p;
  }
}

}  // namespace ehrtensor
