#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ehrtensor/rational.hpp"

namespace ehrtensor {

using IntVec = std::vector<long long>;
using IntMatrix = std::vector<IntVec>;  // row-major
using RatVec = std::vector<Rational>;

// Exponent vector alpha = (alpha_1..alpha_n); |alpha| is the tensor rank.
using MultiIndex = std::vector<int>;

int degree(const MultiIndex& alpha);

// All multi-indices of length n and degree r in ascending lexicographic order.
std::vector<MultiIndex> multi_indices(int n, int r);

// Sparse linear functional on rank-r coordinates.
using CoordinateRow = std::map<MultiIndex, Rational>;

// Symmetric rank-r tensor on R^n. Coordinates are the values
// T(e_1[alpha_1], ..., e_n[alpha_n]); absent keys are zero.
class SymTensor {
 public:
  SymTensor(int dim, int rank);

  static SymTensor scalar(int dim, const Rational& value);
  // Rank-one basis tensor e_i (0-based i).
  static SymTensor basis_vector(int dim, int i);

  int dim() const { return dim_; }
  int rank() const { return rank_; }
  bool is_zero() const { return coords_.empty(); }

  Rational get(const MultiIndex& alpha) const;
  void set(const MultiIndex& alpha, const Rational& value);
  void add(const MultiIndex& alpha, const Rational& value);

  // Non-zero entries in lexicographic key order.
  const std::map<MultiIndex, Rational>& coords() const { return coords_; }

  // Dense coordinate vector in multi_indices(dim, rank) order.
  RatVec dense() const;
  static SymTensor from_dense(int dim, int rank, const RatVec& values);

  SymTensor& operator+=(const SymTensor& o);
  SymTensor& operator-=(const SymTensor& o);
  SymTensor& operator*=(const Rational& c);
  friend SymTensor operator+(SymTensor a, const SymTensor& b) { return a += b; }
  friend SymTensor operator-(SymTensor a, const SymTensor& b) { return a -= b; }
  friend SymTensor operator*(SymTensor a, const Rational& c) { return a *= c; }
  friend SymTensor operator*(const Rational& c, SymTensor a) { return a *= c; }
  SymTensor operator-() const { return *this * Rational(-1); }

  friend bool operator==(const SymTensor& a, const SymTensor& b) = default;

 private:
  void check_index(const MultiIndex& alpha) const;

  int dim_;
  int rank_;
  std::map<MultiIndex, Rational> coords_;
};

// v^r with (v^r)_alpha = prod_i v_i^{alpha_i}; v^0 = 1.
SymTensor sym_power(std::span<const long long> v, int r);
SymTensor sym_power(std::span<const Rational> v, int r);

// Symmetric (permutation-averaged) product. Throws std::invalid_argument on
// dimension mismatch.
SymTensor sym_product(const SymTensor& a, const SymTensor& b);

// T o M^t, i.e. (v_1..v_r) -> T(M^t v_1, ..., M^t v_r).
SymTensor apply_linear(const SymTensor& t, const IntMatrix& m);

// Multilinear evaluation T(v_1, ..., v_r).
Rational evaluate(const SymTensor& t, std::span<const RatVec> vectors);

// The functional L with evaluate(T, vectors) = sum_alpha L(alpha) T_alpha for
// every rank-r tensor T, where r = vectors.size().
CoordinateRow coordinate_row(std::span<const IntVec> vectors, int dim);
CoordinateRow coordinate_row(std::span<const RatVec> vectors, int dim);

// Applies a coordinate row to a tensor of matching rank.
Rational apply_row(const CoordinateRow& row, const SymTensor& t);

// "a1,a2,...,an" key used by the JSON format.
std::string index_key(const MultiIndex& alpha);
MultiIndex parse_index_key(const std::string& key);

std::ostream& operator<<(std::ostream& os, const SymTensor& t);

}  // namespace ehrtensor
