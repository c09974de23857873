#pragma once

#include <cstdint>
#include <vector>

#include "ehrtensor/polytope.hpp"

namespace ehrtensor {

// P intersected with Z^n, in lexicographic order. Empty for the empty polytope.
std::vector<IntVec> lattice_points(const LatticePolytope& p);

// Lattice points of the relative interior (strict inequalities relative to the
// affine hull). The relative interior of a point is the point itself.
std::vector<IntVec> relint_lattice_points(const LatticePolytope& p);

std::uint64_t count(const LatticePolytope& p);
std::uint64_t count_relint(const LatticePolytope& p);

}  // namespace ehrtensor
