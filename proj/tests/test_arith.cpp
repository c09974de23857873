#include <gtest/gtest.h>

#include "ehrtensor/arith.hpp"

using namespace ehrtensor;

TEST(Rational, CanonicalForm) {
  Rational q(BigInt(6), BigInt(-4));
  EXPECT_EQ(q.to_string(), "-3/2");
  EXPECT_EQ(Rational(4, 2).to_string(), "2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_THROW(Rational::parse("10/-4"), std::invalid_argument);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ExactArithmetic) {
  Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
}

TEST(Bernoulli, MinusHalfConvention) {
  EXPECT_EQ(bernoulli(0), Rational(1));
  EXPECT_EQ(bernoulli(1), Rational(-1, 2));
  EXPECT_EQ(bernoulli(2), Rational(1, 6));
  EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
  for (unsigned i = 1; i < 15; ++i) EXPECT_TRUE(bernoulli(2 * i + 1).is_zero());
}

TEST(Bernoulli, DefiningRecurrence) {
  for (unsigned m = 1; m <= 30; ++m) {
    Rational sum;
    for (unsigned j = 0; j <= m; ++j) sum += Rational(binomial(m + 1, j)) * bernoulli(j);
    EXPECT_TRUE(sum.is_zero()) << "m=" << m;
  }
}

TEST(Bernoulli, EulerConvolution) {
  for (long n = 1; n <= 20; ++n) {
    Rational lhs;
    for (long i = 0; i <= n; ++i)
      lhs += Rational(binomial(n, i)) * bernoulli(static_cast<unsigned>(i)) * bernoulli(static_cast<unsigned>(n - i));
    const Rational rhs = Rational(-n) * bernoulli(static_cast<unsigned>(n - 1)) - Rational(n - 1) * bernoulli(static_cast<unsigned>(n));
    EXPECT_EQ(lhs, rhs) << "n=" << n;
  }
}

TEST(Faulhaber, SmallValues) {
  EXPECT_EQ(faulhaber_sum(3, 2), Rational(14));
  for (unsigned long k : {0UL, 1UL, 5UL}) EXPECT_EQ(faulhaber_sum(k, 0), Rational(static_cast<long>(k)));
  EXPECT_EQ(faulhaber_sum(10, 3), Rational(3025));
}

TEST(Faulhaber, BruteForce) {
  for (unsigned r = 0; r <= 10; ++r) {
    BigInt acc = 0;
    for (unsigned long k = 0; k <= 50; ++k) {
      if (k > 0) {
        BigInt term = 1;
        for (unsigned e = 0; e < r; ++e) term *= static_cast<unsigned long>(k);
        acc += term;
      }
      EXPECT_EQ(faulhaber_sum(k, r), Rational(acc)) << "k=" << k << " r=" << r;
    }
  }
}

TEST(Faulhaber, PolynomialCoefficients) {
  EXPECT_EQ(power_sum_polynomial(0), (std::vector<Rational>{1}));
  EXPECT_EQ(power_sum_polynomial(1), (std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(power_sum_polynomial(2), (std::vector<Rational>{Rational(1, 6), Rational(1, 2), Rational(1, 3)}));
  for (unsigned r = 0; r <= 10; ++r) {
    const auto c = power_sum_polynomial(r);
    ASSERT_EQ(c.size(), r + 1);
    for (long k = 0; k <= 20; ++k) {
      Rational value, power(k);
      for (const auto& coeff : c) {
        value += coeff * power;
        power *= Rational(k);
      }
      EXPECT_EQ(value, faulhaber_sum(static_cast<unsigned long>(k), r));
    }
  }
}

TEST(Combinatorics, BinomialAndMultinomial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(5, -1), 0);
  EXPECT_EQ(factorial(0), 1);
  const std::vector<int> alpha{2, 1, 1};
  EXPECT_EQ(multinomial(alpha), 12);
}
