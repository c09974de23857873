#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "ehrtensor/arith.hpp"
#include "ehrtensor/classify.hpp"
#include "ehrtensor/ehrhart.hpp"
#include "ehrtensor/tri2d.hpp"

using namespace ehrtensor;

namespace {

const LatticePolytope kT2 = standard_simplex(2, 2);

ConstraintSystem shuffled(const ConstraintSystem& s, std::uint64_t seed) {
  auto rows = s.rows();
  std::mt19937_64 rng(seed);
  std::shuffle(rows.begin(), rows.end(), rng);
  ConstraintSystem out(s.dim(), s.rank());
  for (auto& row : rows) out.add_row(row.coeffs, row.tag);
  return out;
}

ConstraintSystem stacked(const ConstraintSystem& a, const ConstraintSystem& b) {
  ConstraintSystem out = a;
  out.append(b);
  return out;
}

}  // namespace

TEST(Rank, TrivialMatrices) {
  ConstraintSystem zero(2, 3);
  EXPECT_EQ(rank(zero), 0u);
  EXPECT_EQ(kernel_basis(zero).size(), 4u);
  ConstraintSystem id(2, 3);
  for (const auto& alpha : id.unknowns()) id.add_row({{alpha, Rational(1)}}, "identity");
  EXPECT_EQ(rank(id), 4u);
  EXPECT_TRUE(kernel_basis(id).empty());
}

TEST(Rank, UnionFindHandlesInconsistentCycles) {
  ConstraintSystem s(2, 2);
  s.add_row({{{2, 0}, Rational(1)}, {{1, 1}, Rational(-1)}}, "a");
  s.add_row({{{1, 1}, Rational(1)}, {{0, 2}, Rational(-2)}}, "b");
  s.add_row({{{0, 2}, Rational(1)}, {{2, 0}, Rational(-1)}}, "c");  // forces everything to 0
  EXPECT_EQ(rank(s), 3u);
  EXPECT_EQ(rank(s, RankStrategy::DenseBareiss), 3u);
}

TEST(Planar, PlusParityRankAndKernel) {
  for (int r : {3, 5, 7}) {
    const auto s = planar_system(r, 1);
    EXPECT_EQ(rank(s), static_cast<std::size_t>(r));
    const auto kernel = kernel_basis(s);
    ASSERT_EQ(kernel.size(), 1u);
    const auto l = ehrhart_tensors(kT2, r).coefficients[1];
    EXPECT_TRUE(s.annihilates(l));
    EXPECT_EQ(bareiss_rank({kernel[0].dense(), l.dense()}, s.unknowns().size()), 1u);
  }
}

TEST(Planar, LinearCoefficientSatisfiesRows) {
  for (int r = 3; r <= 9; r += 2) EXPECT_TRUE(planar_system(r, 1).annihilates(ehrhart_tensors(kT2, r).coefficients[1]));
}

TEST(Planar, PrintedRecurrenceMatchesGeneratedRowsForPlusParity) {
  for (int r = 2; r <= 19; ++r) {
    const auto gen = planar_system(r, 1);
    const auto printed = planar_transcription(r, 1);
    EXPECT_EQ(rank(gen), rank(printed)) << r;
    EXPECT_EQ(rank(stacked(gen, printed)), rank(gen)) << r;
  }
}

TEST(Planar, PrintedRecurrenceForMinusParityIsStricter) {
  // The printed minus rows force x = 0, but the rows generated from the
  // relation leave a one-dimensional kernel for odd r.
  for (int r : {3, 5, 7}) {
    EXPECT_EQ(rank(planar_transcription(r, -1)), static_cast<std::size_t>(r + 1));
    EXPECT_EQ(rank(planar_system(r, -1)), static_cast<std::size_t>(r));
  }
  // Swapping which parity of j carries the extra 2 reproduces the generated rows.
  for (int r = 3; r <= 15; r += 2) {
    ConstraintSystem swapped(2, r);
    swapped.add_row({{{0, r}, Rational(1)}, {{r, 0}, Rational(1)}}, "swapped");
    for (int j = 1; j <= r; ++j) {
      CoordinateRow row;
      for (int i = 0; i < j; ++i) row[{i, r - i}] += Rational(binomial(j, i));
      if (j % 2 == 0) row[{j, r - j}] += Rational(2);
      swapped.add_row(std::move(row), "swapped");
    }
    for (int a = 0; a <= r; ++a) swapped.add_row({{{a, r - a}, Rational(1)}, {{r - a, a}, Rational(1)}}, "theta");
    const auto gen = planar_system(r, -1);
    EXPECT_EQ(rank(swapped), rank(gen)) << r;
    EXPECT_EQ(rank(stacked(gen, swapped)), rank(gen)) << r;
  }
}

TEST(Planar, MinusParityKernelIsAGenuineValuation) {
  // Seed the kernel vector on T_2 and extend it as a simple valuation through
  // unimodular triangulations: the result does not depend on the
  // triangulation and is SL_2(Z) equivariant, so the kernel is not spurious.
  for (int r : {3, 5}) {
    const auto kernel = kernel_basis(planar_system(r, -1));
    ASSERT_EQ(kernel.size(), 1u);
    const SymTensor w = kernel[0];
    if (r == 3) {
      EXPECT_EQ(w.get({0, 3}), Rational(0));
      EXPECT_EQ(w.get({1, 2}), -w.get({2, 1}));
    }
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto p = random_polygon(seed, 6, 4);
      const auto t = unimodular_triangulation(p);
      const auto value = simple_valuation_from_seed(t, w);
      for (std::uint64_t walk = 0; walk < 4; ++walk)
        EXPECT_EQ(simple_valuation_from_seed(flip_walk(t, walk, 20), w), value);
      const auto phi = random_unimodular(2, seed, 5);
      EXPECT_EQ(simple_valuation_from_seed(unimodular_triangulation(transform(p, phi)), w), apply_linear(value, phi.matrix));
      // Swapping the axes flips the sign: Z(theta P) = -Z(P) o theta^t.
      const IntMatrix theta{{0, 1}, {1, 0}};
      std::vector<IntVec> swapped;
      for (const auto& v : p.vertices()) swapped.push_back({v[1], v[0]});
      EXPECT_EQ(simple_valuation_from_seed(unimodular_triangulation(LatticePolytope::from_points(swapped)), w),
                -apply_linear(value, theta));
      for (long long k = 2; k <= 3; ++k)
        EXPECT_EQ(simple_valuation_from_seed(unimodular_triangulation(dilate(p, k)), w), value * Rational(k));
      for (long long b = 1; b <= 3; ++b) {
        const auto cut = split(p, {1, 0}, b);
        if (!cut || cut->lower.dim() < 2 || cut->upper.dim() < 2) continue;
        EXPECT_EQ(simple_valuation_from_seed(unimodular_triangulation(cut->lower), w) +
                      simple_valuation_from_seed(unimodular_triangulation(cut->upper), w),
                  value);
      }
    }
  }
}

TEST(Planar, EvenRankVanishesWithSquareRelation) {
  for (int r : {2, 4, 6, 8}) {
    for (int parity : {1, -1}) {
      auto s = planar_system(r, parity);
      add_square_relation(s);
      EXPECT_TRUE(kernel_basis(s).empty()) << r;
    }
  }
}

TEST(Prism, MapImages) {
  const auto id = prism_map_transpose_images(3, 1);
  EXPECT_EQ(id, (std::vector<IntVec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  const auto phi2 = prism_map_transpose_images(3, 2);
  EXPECT_EQ(phi2, (std::vector<IntVec>{{1, 0, 1}, {0, 1, 0}, {-1, -1, 0}}));
  const auto phi3 = prism_map_transpose_images(3, 3);
  EXPECT_EQ(phi3, (std::vector<IntVec>{{1, 0, 0}, {0, 1, 1}, {0, -1, 0}}));
}

TEST(Prism, MapsCarryTheSimplexOntoThePieces) {
  // Row m of phi_i is phi_i^t e_m, and S_i - e_n = phi_i T_n for i >= 2.
  for (int n = 2; n <= 5; ++n) {
    const auto pieces = dissect_prism(n);
    IntVec en(static_cast<std::size_t>(n), 0);
    en.back() = 1;
    for (int i = 1; i <= n; ++i) {
      const IntMatrix phi = prism_map_transpose_images(n, i);
      EXPECT_EQ(determinant(phi), 1);
      auto image = transform(standard_simplex(n, n), UnimodularMap::linear(phi));
      if (i > 1) image = translate(image, en);
      EXPECT_TRUE(image == pieces[static_cast<std::size_t>(i - 1)]) << "n=" << n << " i=" << i;
    }
  }
}

TEST(Prism, FullRankCases) {
  struct Case {
    int n, r;
    CoordinateFilter filter;
  };
  const std::vector<Case> cases{
      {3, 4, CoordinateFilter::All},     {3, 5, CoordinateFilter::All},     {4, 5, CoordinateFilter::All},
      {3, 3, CoordinateFilter::LastOdd}, {3, 5, CoordinateFilter::LastOdd}, {3, 7, CoordinateFilter::LastOdd},
      {3, 2, CoordinateFilter::LastEven}, {3, 4, CoordinateFilter::LastEven}, {3, 6, CoordinateFilter::LastEven},
      {3, 8, CoordinateFilter::LastEven}, {3, 2, CoordinateFilter::All},     {3, 3, CoordinateFilter::All},
      {4, 3, CoordinateFilter::All},     {4, 4, CoordinateFilter::All}};
  for (const auto& c : cases) {
    const auto s = prism_system(c.n, c.r, c.filter);
    EXPECT_EQ(rank(s), s.unknowns().size()) << c.n << "," << c.r;
  }
}

TEST(Prism, ZeroVectorAlwaysSolves) {
  const auto s = prism_system(3, 4, CoordinateFilter::All);
  EXPECT_TRUE(s.annihilates(SymTensor(3, 4)));
}

TEST(Rank, StrategyAndRowOrderIndependence) {
  std::vector<ConstraintSystem> systems{planar_system(5, 1), planar_system(9, -1), planar_system(6, 0),
                                        prism_system(3, 4, CoordinateFilter::LastOdd),
                                        prism_system(3, 3, CoordinateFilter::All), planar_transcription(7, -1)};
  auto sq = planar_system(4, 1);
  add_square_relation(sq);
  systems.push_back(sq);
  for (const auto& s : systems) {
    const auto k = rank(s);
    EXPECT_EQ(rank(s, RankStrategy::DenseBareiss), k);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto t = shuffled(s, seed);
      EXPECT_EQ(rank(t), k);
      EXPECT_EQ(rank(t, RankStrategy::DenseBareiss), k);
      EXPECT_EQ(kernel_basis(t), kernel_basis(s));
    }
    const auto kernel = kernel_basis(s);
    EXPECT_EQ(k + kernel.size(), s.unknowns().size());
    for (const auto& v : kernel) EXPECT_TRUE(s.annihilates(v));
  }
}

TEST(Survey, QuotedRanks) {
  const auto report = high_rank_survey({9, 15});
  EXPECT_TRUE(report.designated_match());
  for (const auto& row : report.rows) {
    if (!row.designated) continue;
    EXPECT_EQ(row.rank, row.r == 9 ? 8u : 13u);
  }
  ASSERT_TRUE(report.r9.has_value());
  EXPECT_EQ(report.r9->kernel_dim, 2u);
  EXPECT_TRUE(report.r9->l9_in_kernel);
  EXPECT_TRUE(report.r9->n_in_kernel);
  EXPECT_TRUE(report.r9->independent);
}
