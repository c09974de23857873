#pragma once

#include <span>
#include <vector>

#include "ehrtensor/rational.hpp"

namespace ehrtensor {

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

// r! / (alpha_1! ... alpha_n!) with r = |alpha|.
BigInt multinomial(std::span<const int> alpha);

// B_m with the convention B_1 = -1/2. Values are cached in a process-wide
// table guarded by a mutex.
Rational bernoulli(unsigned m);

// sum_{i=1..k} i^r evaluated through Faulhaber's closed form.
Rational faulhaber_sum(unsigned long k, unsigned r);

// Coefficients c_1..c_{r+1} (element j-1 multiplies k^j) of the polynomial
// k -> sum_{i=1..k} i^r. The constant term is zero and is not stored.
std::vector<Rational> power_sum_polynomial(unsigned r);

}  // namespace ehrtensor
