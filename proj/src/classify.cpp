#include "ehrtensor/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ehrtensor/arith.hpp"
#include "ehrtensor/ehrhart.hpp"
#include "ehrtensor/polytope.hpp"
#include "ehrtensor/tri2d.hpp"

namespace ehrtensor {

ConstraintSystem::ConstraintSystem(int dim, int rank) : dim_(dim), rank_(rank), unknowns_(multi_indices(dim, rank)) {}

std::size_t ConstraintSystem::column(const MultiIndex& alpha) const {
  const auto it = std::lower_bound(unknowns_.begin(), unknowns_.end(), alpha);
  if (it == unknowns_.end() || *it != alpha) throw std::invalid_argument("ConstraintSystem: unknown multi-index");
  return static_cast<std::size_t>(it - unknowns_.begin());
}

void ConstraintSystem::add_row(CoordinateRow coeffs, std::string tag) {
  std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  if (coeffs.empty()) return;
  for (const auto& [alpha, c] : coeffs) column(alpha);
  rows_.push_back({std::move(coeffs), std::move(tag)});
}

void ConstraintSystem::append(const ConstraintSystem& other) {
  if (other.dim_ != dim_ || other.rank_ != rank_) throw std::invalid_argument("ConstraintSystem::append: shape mismatch");
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

bool ConstraintSystem::annihilates(const SymTensor& t) const {
  return std::all_of(rows_.begin(), rows_.end(), [&](const ConstraintRow& row) { return apply_row(row.coeffs, t).is_zero(); });
}

namespace {

MultiIndex planar_index(int r, int a) { return {a, r - a}; }

void add_symmetry_rows(ConstraintSystem& s, int parity) {
  const int r = s.rank();
  for (int a = 0; a <= r; ++a) {
    CoordinateRow row;
    row[planar_index(r, a)] += Rational(1);
    row[planar_index(r, r - a)] -= Rational(parity);
    s.add_row(std::move(row), "theta");
  }
}

// Rows x_a of the linear map Z -> Z o M^t, given the images M^t e_1, M^t e_2.
std::vector<CoordinateRow> pullback_rows(int r, const IntVec& f1, const IntVec& f2) {
  std::vector<CoordinateRow> out;
  for (int a = 0; a <= r; ++a) {
    std::vector<IntVec> vectors(static_cast<std::size_t>(a), f1);
    vectors.insert(vectors.end(), static_cast<std::size_t>(r - a), f2);
    out.push_back(coordinate_row(vectors, 2));
  }
  return out;
}

// x_i = weight[i] * x_parent[i]
struct WeightedUnionFind {
  std::vector<std::size_t> parent;
  std::vector<Rational> weight;

  explicit WeightedUnionFind(std::size_t n) : parent(n), weight(n, Rational(1)) { std::iota(parent.begin(), parent.end(), 0); }

  std::pair<std::size_t, Rational> find(std::size_t i) {
    if (parent[i] == i) return {i, Rational(1)};
    auto [root, w] = find(parent[i]);
    weight[i] *= w;
    parent[i] = root;
    return {root, weight[i]};
  }
};

struct Reduction {
  WeightedUnionFind classes;
  std::size_t unions = 0;
  std::vector<std::map<std::size_t, Rational>> residual;  // over class roots
};

// Two-term rows x_a = k x_b are eliminated by merging classes; every other
// row, and every inconsistent cycle, is rewritten over the class roots.
Reduction reduce(const ConstraintSystem& s) {
  Reduction red{WeightedUnionFind(s.unknowns().size()), 0, {}};
  std::vector<std::map<std::size_t, Rational>> pending;
  for (const auto& row : s.rows()) {
    std::map<std::size_t, Rational> r;
    for (const auto& [alpha, c] : row.coeffs) r[s.column(alpha)] += c;
    if (r.size() != 2) {
      pending.push_back(std::move(r));
      continue;
    }
    auto it = r.begin();
    const auto [a, ca] = *it++;
    const auto [b, cb] = *it;
    const Rational k = -cb / ca;
    auto [ra, wa] = red.classes.find(a);
    auto [rb, wb] = red.classes.find(b);
    if (ra != rb) {
      red.classes.parent[ra] = rb;
      red.classes.weight[ra] = k * wb / wa;
      ++red.unions;
    } else if (wa != k * wb) {
      pending.push_back({{ra, Rational(1)}});
    }
  }
  for (const auto& row : pending) {
    std::map<std::size_t, Rational> sub;
    for (const auto& [j, c] : row) {
      auto [root, w] = red.classes.find(j);
      sub[root] += c * w;
    }
    std::erase_if(sub, [](const auto& kv) { return kv.second.is_zero(); });
    if (!sub.empty()) red.residual.push_back(std::move(sub));
  }
  return red;
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<RatVec>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < ncols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[row], m[p]);
    const Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c].is_zero()) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

}  // namespace

ConstraintSystem planar_system(int r, int parity) {
  if (r < 2) throw std::invalid_argument("planar_system: r must be at least 2");
  if (parity < -1 || parity > 1) throw std::invalid_argument("planar_system: parity must be -1, 0 or +1");
  ConstraintSystem s(2, r);
  const auto images = pullback_rows(r, {0, 1}, {-1, -1});
  for (int a = 0; a <= r; ++a) {
    CoordinateRow row = images[static_cast<std::size_t>(a)];
    for (auto& [alpha, c] : row) c = -c;
    row[planar_index(r, a)] += Rational(1);
    s.add_row(std::move(row), "relation");
  }
  if (parity != 0) add_symmetry_rows(s, parity);
  return s;
}

ConstraintSystem planar_transcription(int r, int parity) {
  if (r < 2) throw std::invalid_argument("planar_transcription: r must be at least 2");
  if (parity != 1 && parity != -1) throw std::invalid_argument("planar_transcription: parity must be -1 or +1");
  ConstraintSystem s(2, r);
  if (parity == -1) s.add_row({{planar_index(r, 0), Rational(1)}, {planar_index(r, r), Rational(1)}}, "transcription");
  for (int j = 1; j <= r; ++j) {
    CoordinateRow row;
    for (int i = 0; i < j; ++i) row[planar_index(r, i)] += Rational(binomial(j, i));
    if (j % 2 == 1) row[planar_index(r, j)] += Rational(2);
    s.add_row(std::move(row), "transcription");
  }
  add_symmetry_rows(s, parity);
  return s;
}

void add_square_relation(ConstraintSystem& s) {
  if (s.dim() != 2) throw std::invalid_argument("add_square_relation: planar systems only");
  const int r = s.rank();
  if (r % 2 == 0) {
    for (int a = 0; a <= r; ++a) s.add_row({{planar_index(r, a), Rational(2)}}, "negation");
  }
  const auto lower = pullback_rows(r, {1, 1}, {0, 1});
  const auto upper = pullback_rows(r, {1, 0}, {1, 1});
  for (int a = 0; a <= r; ++a) {
    CoordinateRow row = lower[static_cast<std::size_t>(a)];
    for (const auto& [alpha, c] : upper[static_cast<std::size_t>(a)]) row[alpha] += c;
    s.add_row(std::move(row), "square");
  }
}

std::vector<IntVec> prism_map_transpose_images(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("prism_map_transpose_images: i out of range");
  const auto un = static_cast<std::size_t>(n);
  std::vector<IntVec> out(un, IntVec(un, 0));
  for (std::size_t m = 0; m < un; ++m) out[m][m] = 1;
  if (i == 1) return out;
  out[static_cast<std::size_t>(i - 2)][un - 1] = 1;
  out[un - 1] = IntVec(un, 0);
  for (std::size_t k = static_cast<std::size_t>(i - 2); k + 1 < un; ++k) out[un - 1][k] = -1;
  return out;
}

ConstraintSystem prism_system(int n, int r, CoordinateFilter filter) {
  if (n < 2 || r < 1) throw std::invalid_argument("prism_system: need n >= 2 and r >= 1");
  ConstraintSystem s(n, r);
  std::vector<std::vector<IntVec>> images;
  for (int i = 1; i <= n; ++i) images.push_back(prism_map_transpose_images(n, i));
  for (const auto& alpha : s.unknowns()) {
    const int last = alpha.back();
    if (filter == CoordinateFilter::LastOdd && last % 2 == 0) continue;
    if (filter == CoordinateFilter::LastEven && last % 2 != 0) continue;
    CoordinateRow total;
    for (const auto& img : images) {
      std::vector<IntVec> vectors;
      for (std::size_t m = 0; m < alpha.size(); ++m) vectors.insert(vectors.end(), static_cast<std::size_t>(alpha[m]), img[m]);
      for (const auto& [beta, c] : coordinate_row(vectors, n)) total[beta] += c;
    }
    s.add_row(std::move(total), "dissection");
  }
  // A 3-cycle together with an n-cycle (n odd) or an (n-1)-cycle (n even)
  // generates the alternating group.
  std::vector<std::vector<int>> generators;
  if (n >= 3) {
    std::vector<int> three(static_cast<std::size_t>(n));
    std::iota(three.begin(), three.end(), 0);
    std::rotate(three.begin(), three.begin() + 1, three.begin() + 3);
    generators.push_back(three);
    std::vector<int> cycle(static_cast<std::size_t>(n));
    std::iota(cycle.begin(), cycle.end(), 0);
    if (n % 2 == 1)
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
    else
      std::rotate(cycle.begin() + 1, cycle.begin() + 2, cycle.end());
    generators.push_back(cycle);
  }
  for (const auto& alpha : s.unknowns()) {
    for (const auto& g : generators) {
      MultiIndex image(alpha.size());
      for (std::size_t j = 0; j < alpha.size(); ++j) image[j] = alpha[static_cast<std::size_t>(g[j])];
      if (image == alpha) continue;
      s.add_row({{alpha, Rational(1)}, {image, Rational(-1)}}, "symmetry");
    }
  }
  return s;
}

std::size_t bareiss_rank(const std::vector<RatVec>& rows, std::size_t ncols) {
  std::vector<std::vector<BigInt>> m;
  for (const auto& row : rows) {
    BigInt scale = 1;
    for (const auto& x : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.raw().get_den_mpz_t());
    std::vector<BigInt> ints(ncols);
    bool nonzero = false;
    for (std::size_t j = 0; j < ncols; ++j) {
      ints[j] = row[j].raw().get_num() * (scale / row[j].raw().get_den());
      nonzero = nonzero || ints[j] != 0;
    }
    if (nonzero) m.push_back(std::move(ints));
  }
  std::size_t k = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < ncols && k < m.size(); ++c) {
    std::size_t p = k;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[k], m[p]);
    for (std::size_t i = k + 1; i < m.size(); ++i) {
      for (std::size_t j = c + 1; j < ncols; ++j) {
        m[i][j] = m[k][c] * m[i][j] - m[i][c] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      m[i][c] = 0;
    }
    prev = m[k][c];
    ++k;
  }
  return k;
}

std::size_t rank(const ConstraintSystem& s, RankStrategy strategy) {
  const std::size_t u = s.unknowns().size();
  if (strategy == RankStrategy::DenseBareiss) {
    std::vector<RatVec> dense;
    for (const auto& row : s.rows()) {
      RatVec v(u);
      for (const auto& [alpha, c] : row.coeffs) v[s.column(alpha)] += c;
      dense.push_back(std::move(v));
    }
    return bareiss_rank(dense, u);
  }
  Reduction red = reduce(s);
  std::map<std::size_t, std::size_t> col;
  for (const auto& row : red.residual)
    for (const auto& [j, c] : row) col.emplace(j, 0);
  std::size_t next = 0;
  for (auto& [j, idx] : col) idx = next++;
  std::vector<RatVec> dense;
  for (const auto& row : red.residual) {
    RatVec v(col.size());
    for (const auto& [j, c] : row) v[col[j]] = c;
    dense.push_back(std::move(v));
  }
  return red.unions + bareiss_rank(dense, col.size());
}

std::vector<SymTensor> kernel_basis(const ConstraintSystem& s) {
  const std::size_t u = s.unknowns().size();
  Reduction red = reduce(s);
  std::vector<std::size_t> roots;
  for (std::size_t j = 0; j < u; ++j)
    if (red.classes.find(j).first == j) roots.push_back(j);
  std::map<std::size_t, std::size_t> col;
  for (std::size_t k = 0; k < roots.size(); ++k) col[roots[k]] = k;
  std::vector<RatVec> m;
  for (const auto& row : red.residual) {
    RatVec v(roots.size());
    for (const auto& [j, c] : row) v[col[j]] = c;
    m.push_back(std::move(v));
  }
  const auto pivots = rref(m, roots.size());
  std::vector<bool> is_pivot(roots.size());
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (std::size_t f = 0; f < roots.size(); ++f) {
    if (is_pivot[f]) continue;
    RatVec on_roots(roots.size());
    on_roots[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) on_roots[pivots[i]] = -m[i][f];
    RatVec full(u);
    for (std::size_t j = 0; j < u; ++j) {
      auto [root, w] = red.classes.find(j);
      full[j] = w * on_roots[col[root]];
    }
    basis.push_back(std::move(full));
  }
  rref(basis, u);
  std::vector<SymTensor> out;
  for (const auto& v : basis) out.push_back(SymTensor::from_dense(s.dim(), s.rank(), v));
  return out;
}

std::optional<std::size_t> quoted_survey_rank(int r) {
  if (r == 9 || r == 11 || r == 13) return static_cast<std::size_t>(r - 1);
  if (r == 15 || r == 17 || r == 19) return static_cast<std::size_t>(r - 2);
  return std::nullopt;
}

bool SurveyReport::designated_match() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const SurveyRow& row) { return !row.designated || !row.expected || *row.expected == row.rank; });
}

SurveyReport high_rank_survey(const std::vector<int>& r_list) {
  SurveyReport report;
  for (int r : r_list) {
    std::vector<std::pair<std::string, ConstraintSystem>> assemblies;
    assemblies.emplace_back("relation", planar_system(r, 0));
    assemblies.emplace_back("relation+theta(+1)", planar_system(r, 1));
    assemblies.emplace_back("relation+theta(-1)", planar_system(r, -1));
    ConstraintSystem both = planar_system(r, 1);
    add_symmetry_rows(both, -1);
    assemblies.emplace_back("relation+theta(both)", std::move(both));
    assemblies.emplace_back("transcription(+1)", planar_transcription(r, 1));
    for (const auto& [name, system] : assemblies) {
      SurveyRow row;
      row.r = r;
      row.assembly = name;
      row.unknowns = system.unknowns().size();
      row.rank = rank(system);
      row.expected = quoted_survey_rank(r);
      row.designated = name == "relation+theta(+1)";
      report.rows.push_back(std::move(row));
    }
    if (r == 9) {
      const ConstraintSystem system = planar_system(9, 1);
      const SymTensor l9 = ehrhart_tensors(standard_simplex(2, 2), 9).coefficients[1];
      const SymTensor nt = valuation_n(standard_simplex(2, 2));
      SurveyKernelCheck check;
      check.kernel_dim = kernel_basis(system).size();
      check.l9_in_kernel = system.annihilates(l9);
      check.n_in_kernel = system.annihilates(nt);
      check.independent = bareiss_rank({l9.dense(), nt.dense()}, system.unknowns().size()) == 2;
      report.r9 = check;
    }
  }
  return report;
}

}  // namespace ehrtensor
