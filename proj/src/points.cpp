#include "ehrtensor/points.hpp"

#include <algorithm>

namespace ehrtensor {

namespace {

// Scans the bounding box of the local vertices and keeps lattice points that
// satisfy every facet inequality (strictly when `strict`).
std::vector<IntVec> scan(const LatticePolytope& p, bool strict) {
  if (p.is_empty()) return {};
  if (p.dim() == 0) return p.vertices();
  const auto local = p.local_vertices();
  const auto d = static_cast<std::size_t>(p.dim());
  IntVec lo = local.front(), hi = local.front();
  for (const auto& v : local) {
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  }
  std::vector<IntVec> out;
  IntVec c = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : p.facets()) {
      long long s = 0;
      for (std::size_t i = 0; i < d; ++i) s += f.normal[i] * c[i];
      if (strict ? s >= f.offset : s > f.offset) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(p.to_ambient(c));
    std::size_t i = 0;
    while (i < d && c[i] == hi[i]) {
      c[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<IntVec> lattice_points(const LatticePolytope& p) { return scan(p, false); }

std::vector<IntVec> relint_lattice_points(const LatticePolytope& p) { return scan(p, true); }

std::uint64_t count(const LatticePolytope& p) { return lattice_points(p).size(); }

std::uint64_t count_relint(const LatticePolytope& p) { return relint_lattice_points(p).size(); }

}  // namespace ehrtensor
