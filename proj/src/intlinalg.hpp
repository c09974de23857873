#pragma once

// Small exact integer linear algebra used by the polytope code.

#include <vector>

#include "ehrtensor/tensor.hpp"

namespace ehrtensor::detail {

// Basis of the integer kernel {x in Z^n : A x = 0} together with the rows of
// the inverse unimodular transform that produce coordinates in that basis.
struct IntegerKernel {
  std::vector<IntVec> basis;        // k vectors of length n
  std::vector<IntVec> coordinates;  // k rows of length n; coordinates[i] . x
};

IntegerKernel integer_kernel(const IntMatrix& a, int ncols);

// Exact determinant of a square integer matrix (fraction-free elimination).
long long determinant(const IntMatrix& m);

// Rank over Q of an integer matrix.
int integer_rank(const IntMatrix& m);

long long gcd_of(const IntVec& v);

}  // namespace ehrtensor::detail
