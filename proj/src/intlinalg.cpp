#include "intlinalg.hpp"

#include <numeric>
#include <stdexcept>

namespace ehrtensor::detail {

namespace {

using BigMatrix = std::vector<std::vector<BigInt>>;

long long to_ll(const BigInt& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer linear algebra: value exceeds 64 bits");
  return v.get_si();
}

BigInt big(long long v) { return BigInt(std::to_string(v), 10); }

}  // namespace

IntegerKernel integer_kernel(const IntMatrix& a, int ncols) {
  const auto n = static_cast<std::size_t>(ncols);
  BigMatrix m(a.size(), std::vector<BigInt>(n));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != n) throw std::invalid_argument("integer_kernel: ragged matrix");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = big(a[i][j]);
  }
  BigMatrix u(n, std::vector<BigInt>(n, 0));
  BigMatrix uinv(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = uinv[i][i] = 1;

  // Column operations on m are mirrored on u (columns) and uinv (rows).
  auto swap_cols = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (auto& row : m) std::swap(row[p], row[q]);
    for (auto& row : u) std::swap(row[p], row[q]);
    std::swap(uinv[p], uinv[q]);
  };
  auto sub_col = [&](std::size_t target, std::size_t src, const BigInt& q) {  // col_target -= q col_src
    for (auto& row : m) row[target] -= q * row[src];
    for (auto& row : u) row[target] -= q * row[src];
    for (std::size_t k = 0; k < n; ++k) uinv[src][k] += q * uinv[target][k];
  };

  std::size_t pivot = 0;
  for (std::size_t i = 0; i < m.size() && pivot < n; ++i) {
    while (true) {
      std::size_t best = n;
      for (std::size_t j = pivot; j < n; ++j) {
        if (m[i][j] != 0 && (best == n || abs(m[i][j]) < abs(m[i][best]))) best = j;
      }
      if (best == n) break;
      swap_cols(pivot, best);
      bool done = true;
      for (std::size_t j = pivot + 1; j < n; ++j) {
        if (m[i][j] == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), m[i][j].get_mpz_t(), m[i][pivot].get_mpz_t());
        sub_col(j, pivot, q);
        if (m[i][j] != 0) done = false;
      }
      if (done) break;
    }
    if (m[i][pivot] != 0) ++pivot;
  }

  IntegerKernel out;
  for (std::size_t j = pivot; j < n; ++j) {
    IntVec col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = to_ll(u[k][j]);
    out.basis.push_back(std::move(col));
    IntVec row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = to_ll(uinv[j][k]);
    out.coordinates.push_back(std::move(row));
  }
  return out;
}

long long determinant(const IntMatrix& input) {
  const std::size_t n = input.size();
  if (n == 0) return 1;
  BigMatrix m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (input[i].size() != n) throw std::invalid_argument("determinant: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m[i][j] = big(input[i][j]);
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * to_ll(m[n - 1][n - 1]);
}

int integer_rank(const IntMatrix& input) {
  if (input.empty()) return 0;
  const std::size_t cols = input[0].size();
  BigMatrix m(input.size(), std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < input.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = big(input[i][j]);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    for (std::size_t i = row + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      BigInt f = m[i][c], g = m[row][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * g - m[row][j] * f;
    }
    ++row;
    ++rank;
  }
  return rank;
}

long long gcd_of(const IntVec& v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x);
  return g;
}

}  // namespace ehrtensor::detail
