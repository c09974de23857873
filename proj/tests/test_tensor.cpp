#include <gtest/gtest.h>

#include <random>

#include "ehrtensor/polytope.hpp"
#include "ehrtensor/tensor.hpp"

using namespace ehrtensor;

namespace {

SymTensor random_tensor(std::mt19937_64& rng, int dim, int rank) {
  SymTensor t(dim, rank);
  for (const auto& alpha : multi_indices(dim, rank))
    t.set(alpha, Rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
  return t;
}

IntMatrix random_matrix(std::mt19937_64& rng, int n) {
  IntMatrix m(static_cast<std::size_t>(n), IntVec(static_cast<std::size_t>(n)));
  for (auto& row : m)
    for (auto& x : row) x = static_cast<long long>(rng() % 5) - 2;
  return m;
}

}  // namespace

TEST(MultiIndices, LexOrderAndCount) {
  const auto idx = multi_indices(2, 3);
  ASSERT_EQ(idx.size(), 4u);
  EXPECT_EQ(idx.front(), (MultiIndex{0, 3}));
  EXPECT_EQ(idx.back(), (MultiIndex{3, 0}));
  EXPECT_EQ(multi_indices(3, 8).size(), 45u);
  EXPECT_EQ(multi_indices(7, 8).size(), 3003u);
}

TEST(SymPower, Examples) {
  const IntVec e1{1, 0};
  EXPECT_EQ(sym_power(e1, 3).coords(), (std::map<MultiIndex, Rational>{{{3, 0}, 1}}));
  const IntVec ones{1, 1};
  const auto t = sym_power(ones, 2);
  EXPECT_EQ(t.get({2, 0}), Rational(1));
  EXPECT_EQ(t.get({1, 1}), Rational(1));
  EXPECT_EQ(t.get({0, 2}), Rational(1));
  const IntVec v{2, 3};
  const auto u = sym_power(v, 2);
  EXPECT_EQ(u.get({2, 0}), Rational(4));
  EXPECT_EQ(u.get({1, 1}), Rational(6));
  EXPECT_EQ(u.get({0, 2}), Rational(9));
  EXPECT_EQ(sym_power(v, 0), SymTensor::scalar(2, Rational(1)));
}

TEST(SymProduct, Examples) {
  const IntVec v{1, 2};
  EXPECT_EQ(sym_product(sym_power(v, 1), sym_power(v, 1)), sym_power(v, 2));
  const auto prod = sym_product(SymTensor::basis_vector(2, 0), SymTensor::basis_vector(2, 1));
  EXPECT_EQ(prod.coords(), (std::map<MultiIndex, Rational>{{{1, 1}, Rational(1, 2)}}));
  std::mt19937_64 rng(5);
  const auto a = random_tensor(rng, 3, 2);
  EXPECT_EQ(sym_product(a, SymTensor::scalar(3, Rational(5, 3))), a * Rational(5, 3));
  EXPECT_THROW(sym_product(a, SymTensor(2, 1)), std::invalid_argument);
}

TEST(SymProduct, AlgebraicLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto a = random_tensor(rng, n, static_cast<int>(rng() % 3));
    const auto b = random_tensor(rng, n, static_cast<int>(rng() % 3));
    const auto c = random_tensor(rng, n, static_cast<int>(rng() % 2));
    EXPECT_EQ(sym_product(a, b), sym_product(b, a));
    EXPECT_EQ(sym_product(sym_product(a, b), c), sym_product(a, sym_product(b, c)));
    const auto b2 = random_tensor(rng, n, b.rank());
    EXPECT_EQ(sym_product(a, b + b2 * Rational(2)), sym_product(a, b) + sym_product(a, b2) * Rational(2));
  }
}

TEST(ApplyLinear, IdentityAndHandExample) {
  std::mt19937_64 rng(3);
  const auto t = random_tensor(rng, 3, 3);
  EXPECT_EQ(apply_linear(t, IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), t);
  // T = e_1 (as a functional v -> v_1); (T o M^t)(v) = (M^t v)_1 = -v_2 + ... with
  // M = [[0,-1],[1,-1]]: M^t e_1 = (0,-1), M^t e_2 = (1,-1).
  SymTensor e1(2, 1);
  e1.set({1, 0}, 1);
  const auto img = apply_linear(e1, IntMatrix{{0, -1}, {1, -1}});
  EXPECT_EQ(img.get({1, 0}), Rational(0));
  EXPECT_EQ(img.get({0, 1}), Rational(1));
}

TEST(ApplyLinear, PowersAndComposition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int r = static_cast<int>(rng() % 4);
    IntVec x(static_cast<std::size_t>(n));
    for (auto& c : x) c = static_cast<long long>(rng() % 7) - 3;
    const auto m = random_matrix(rng, n);
    const auto k = random_matrix(rng, n);
    IntVec mx(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) mx[static_cast<std::size_t>(i)] += m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
    EXPECT_EQ(apply_linear(sym_power(x, r), m), sym_power(mx, r));
    const auto t = random_tensor(rng, n, r);
    EXPECT_EQ(apply_linear(apply_linear(t, m), k), apply_linear(t, matmul(k, m)));
  }
}

TEST(Evaluate, DiagonalBasisAndSymmetry) {
  const IntVec x{1, 2};
  const RatVec v{Rational(3), Rational(1)};
  const std::vector<RatVec> args{v, v};
  EXPECT_EQ(evaluate(sym_power(x, 2), args), Rational(25));

  std::mt19937_64 rng(13);
  const auto t = random_tensor(rng, 3, 3);
  for (const auto& alpha : multi_indices(3, 3)) {
    std::vector<RatVec> basis;
    for (int i = 0; i < 3; ++i)
      for (int e = 0; e < alpha[static_cast<std::size_t>(i)]; ++e) {
        RatVec b(3);
        b[static_cast<std::size_t>(i)] = 1;
        basis.push_back(b);
      }
    EXPECT_EQ(evaluate(t, basis), t.get(alpha));
  }
  std::vector<RatVec> vs;
  for (int k = 0; k < 3; ++k) vs.push_back({Rational(static_cast<long>(rng() % 5)), Rational(-1, 2), Rational(static_cast<long>(rng() % 3))});
  const Rational base = evaluate(t, vs);
  std::vector<RatVec> perm{vs[2], vs[0], vs[1]};
  EXPECT_EQ(evaluate(t, perm), base);
  EXPECT_THROW(evaluate(t, std::vector<RatVec>{vs[0]}), std::invalid_argument);
}

TEST(CoordinateRow, MatchesEvaluate) {
  const std::vector<IntVec> basis{{1, 0}, {0, 1}, {0, 1}};
  EXPECT_EQ(coordinate_row(basis, 2), (CoordinateRow{{{1, 2}, Rational(1)}}));
  const std::vector<IntVec> diag{{1, 1}};
  EXPECT_EQ(coordinate_row(diag, 2), (CoordinateRow{{{1, 0}, Rational(1)}, {{0, 1}, Rational(1)}}));

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 2);
    const int r = 1 + static_cast<int>(rng() % 4);
    std::vector<IntVec> vecs;
    std::vector<RatVec> rvecs;
    for (int k = 0; k < r; ++k) {
      IntVec v(static_cast<std::size_t>(n));
      RatVec rv;
      for (auto& c : v) {
        c = static_cast<long long>(rng() % 5) - 2;
        rv.emplace_back(c);
      }
      vecs.push_back(v);
      rvecs.push_back(rv);
    }
    const auto row = coordinate_row(vecs, n);
    const auto t = random_tensor(rng, n, r);
    EXPECT_EQ(apply_row(row, t), evaluate(t, rvecs));
    IntVec x{1, -2, 3};
    x.resize(static_cast<std::size_t>(n));
    Rational prod(1);
    for (const auto& v : vecs) {
      long long dot = 0;
      for (std::size_t i = 0; i < v.size(); ++i) dot += v[i] * x[i];
      prod *= Rational(dot);
    }
    EXPECT_EQ(apply_row(row, sym_power(x, r)), prod);
  }
}

TEST(IndexKey, RoundTrip) {
  EXPECT_EQ(index_key({2, 0, 1}), "2,0,1");
  EXPECT_EQ(parse_index_key("2,0,1"), (MultiIndex{2, 0, 1}));
  EXPECT_THROW(parse_index_key("2,x"), std::invalid_argument);
}
