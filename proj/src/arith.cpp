#include "ehrtensor/arith.hpp"

#include <mutex>
#include <numeric>

namespace ehrtensor {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt multinomial(std::span<const int> alpha) {
  int total = std::accumulate(alpha.begin(), alpha.end(), 0);
  BigInt out = factorial(static_cast<unsigned>(total));
  for (int a : alpha) out /= factorial(static_cast<unsigned>(a));
  return out;
}

Rational bernoulli(unsigned m) {
  static std::mutex mu;
  static std::vector<Rational> table{Rational(1)};
  std::lock_guard lock(mu);
  // sum_{j=0..i} C(i+1, j) B_j = 0  =>  B_i = -(1/(i+1)) sum_{j<i} C(i+1, j) B_j
  while (table.size() <= m) {
    const long i = static_cast<long>(table.size());
    Rational acc;
    for (long j = 0; j < i; ++j) acc += Rational(binomial(i + 1, j)) * table[static_cast<std::size_t>(j)];
    table.push_back(-acc / Rational(i + 1));
  }
  return table[m];
}

std::vector<Rational> power_sum_polynomial(unsigned r) {
  std::vector<Rational> coeffs(r + 1);
  const Rational scale = Rational(1) / Rational(static_cast<long>(r) + 1);
  for (unsigned l = 0; l <= r; ++l) {
    Rational term = Rational(binomial(r + 1, l)) * bernoulli(l) * scale;
    if (l % 2 == 1) term = -term;
    coeffs[r - l] += term;  // multiplies k^{r+1-l}
  }
  return coeffs;
}

Rational faulhaber_sum(unsigned long k, unsigned r) {
  const auto coeffs = power_sum_polynomial(r);
  // Horner from the top coefficient down to k^1.
  Rational acc;
  const Rational kk(BigInt(std::to_string(k), 10));
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc + *it) * kk;
  return acc;
}

}  // namespace ehrtensor
