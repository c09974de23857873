#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ehrtensor/polytope.hpp"
#include "ehrtensor/tensor.hpp"

namespace ehrtensor {

// Coefficients L^r_0(P), ..., L^r_{n+r}(P) of k -> L^r(kP).
struct EhrhartTensorExpansion {
  int rank = 0;
  std::vector<SymTensor> coefficients;

  // sum_i coefficients[i] k^i
  SymTensor evaluate(long long k) const;
};

// (1/r!) sum of x^r over the given points.
SymTensor moment_of_points(const std::vector<IntVec>& points, int dim, int r);

// L^r(P) = (1/r!) sum_{x in P cap Z^n} x^r; zero tensor for the empty polytope.
SymTensor discrete_moment(const LatticePolytope& p, int r);
SymTensor discrete_moment_relint(const LatticePolytope& p, int r);

// Exact interpolation of L^r(kP) at k = 0..n+r. Throws std::invalid_argument
// for the empty polytope.
EhrhartTensorExpansion ehrhart_tensors(const LatticePolytope& p, int r);

// M^r(P) = (1/r!) int_P x^r dx via a fan triangulation and the closed-form
// monomial integrals over simplices. Throws std::domain_error unless
// dim(P) = n.
SymTensor moment_tensor(const LatticePolytope& p, int r);

// Full-dimensional simplices (as vertex lists) of a pulling triangulation.
std::vector<std::vector<IntVec>> fan_triangulation(const LatticePolytope& p);

struct CheckFailure {
  std::string relation;
  int index = -1;  // homogeneity degree i (or l) where applicable
  MultiIndex coordinate;
  Rational lhs;
  Rational rhs;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  std::vector<std::string> checked;
  std::optional<CheckFailure> failure;
};

// First coordinate where a and b differ, if any.
std::optional<std::pair<MultiIndex, std::pair<Rational, Rational>>> first_difference(const SymTensor& a,
                                                                                       const SymTensor& b);

// L^r(relint P) against the alternating sum of Ehrhart tensors, against the
// face sum over all non-empty faces, and Z°(P) = (-1)^i Z(-P) for every
// homogeneous component Z = L^r_i.
CheckReport check_reciprocity(const LatticePolytope& p, int r);

// L^r_l(P + y) = sum_{j=0..l} L^{r-j}_{l-j}(P) y^j / j! for every l.
CheckReport check_translation_covariance(const LatticePolytope& p, int r, const IntVec& y);

// L^r(phi P) = L^r(P) o phi^t, and the same for every coefficient L^r_i.
CheckReport check_equivariance(const LatticePolytope& p, int r, const IntMatrix& phi);

// L^r_{n+r}(P) = M^r(P) when dim(P) = n, and L^r_{i+r}(P) = 0 for
// dim(P) < i <= n.
CheckReport check_leading_coefficients(const LatticePolytope& p, int r);

}  // namespace ehrtensor
