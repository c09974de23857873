#include "ehrtensor/ehrhart.hpp"

#include <stdexcept>

#include "ehrtensor/arith.hpp"
#include "ehrtensor/points.hpp"

namespace ehrtensor {

namespace {

// Inverse of the Vandermonde matrix V[k][i] = k^i on nodes k = 0..degree,
// by Gauss-Jordan elimination.
std::vector<RatVec> inverse_vandermonde(int degree) {
  const auto size = static_cast<std::size_t>(degree + 1);
  std::vector<RatVec> a(size, RatVec(2 * size));
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) a[k][i] = pow(Rational(static_cast<long>(k)), static_cast<unsigned>(i));
    a[k][size + k] = 1;
  }
  for (std::size_t c = 0; c < size; ++c) {
    std::size_t p = c;
    while (a[p][c].is_zero()) ++p;  // nodes are distinct, a pivot always exists
    std::swap(a[c], a[p]);
    const Rational inv = Rational(1) / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < size; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < 2 * size; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<RatVec> inv(size, RatVec(size));
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t j = 0; j < size; ++j) inv[r][j] = a[r][size + j];
  return inv;
}

Rational sign_power(int e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }

void record(CheckReport& report, const std::string& relation, int index, const SymTensor& lhs, const SymTensor& rhs) {
  report.checked.push_back(relation + (index >= 0 ? " [" + std::to_string(index) + "]" : ""));
  if (report.failure) return;
  if (auto diff = first_difference(lhs, rhs)) {
    report.passed = false;
    report.failure = CheckFailure{relation, index, diff->first, diff->second.first, diff->second.second};
  }
}

}  // namespace

SymTensor EhrhartTensorExpansion::evaluate(long long k) const {
  SymTensor acc = coefficients.front() * Rational(0);
  Rational power(1);
  for (const auto& c : coefficients) {
    acc += c * power;
    power *= Rational(k);
  }
  return acc;
}

SymTensor moment_of_points(const std::vector<IntVec>& points, int dim, int r) {
  const auto keys = multi_indices(dim, r);
  std::vector<BigInt> sums(keys.size(), 0);
  std::vector<std::vector<BigInt>> powers(static_cast<std::size_t>(dim), std::vector<BigInt>(static_cast<std::size_t>(r) + 1));
  for (const auto& x : points) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) {
      powers[i][0] = 1;
      for (std::size_t e = 1; e <= static_cast<std::size_t>(r); ++e) powers[i][e] = powers[i][e - 1] * static_cast<long>(x[i]);
    }
    for (std::size_t k = 0; k < keys.size(); ++k) {
      BigInt term = 1;
      for (std::size_t i = 0; i < static_cast<std::size_t>(dim); ++i) term *= powers[i][static_cast<std::size_t>(keys[k][i])];
      sums[k] += term;
    }
  }
  SymTensor out(dim, r);
  const BigInt fact = factorial(static_cast<unsigned>(r));
  for (std::size_t k = 0; k < keys.size(); ++k) out.set(keys[k], Rational(sums[k], fact));
  return out;
}

SymTensor discrete_moment(const LatticePolytope& p, int r) {
  return moment_of_points(lattice_points(p), p.ambient_dim(), r);
}

SymTensor discrete_moment_relint(const LatticePolytope& p, int r) {
  return moment_of_points(relint_lattice_points(p), p.ambient_dim(), r);
}

EhrhartTensorExpansion ehrhart_tensors(const LatticePolytope& p, int r) {
  if (p.is_empty()) throw std::invalid_argument("ehrhart_tensors: empty polytope");
  const int n = p.ambient_dim();
  const int degree = n + r;
  std::vector<SymTensor> values;
  for (int k = 0; k <= degree; ++k) values.push_back(discrete_moment(dilate(p, k), r));
  const auto inv = inverse_vandermonde(degree);
  EhrhartTensorExpansion out;
  out.rank = r;
  for (int i = 0; i <= degree; ++i) {
    SymTensor c(n, r);
    for (int k = 0; k <= degree; ++k) {
      const Rational& w = inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
      if (!w.is_zero()) c += values[static_cast<std::size_t>(k)] * w;
    }
    out.coefficients.push_back(std::move(c));
  }
  return out;
}

std::vector<std::vector<IntVec>> fan_triangulation(const LatticePolytope& p) {
  if (p.is_empty()) return {};
  if (p.dim() == 0) return {p.vertices()};
  const IntVec& apex = p.vertices().front();
  std::vector<std::vector<IntVec>> out;
  for (const auto& f : faces(p)) {
    if (f.dim() != p.dim() - 1 || f.contains(apex)) continue;
    for (auto s : fan_triangulation(f)) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
  return out;
}

SymTensor moment_tensor(const LatticePolytope& p, int r) {
  const int n = p.ambient_dim();
  if (p.dim() != n) throw std::domain_error("moment_tensor: polytope must be full-dimensional");
  const auto keys = multi_indices(n, r);
  const Rational scale = Rational(1) / Rational(factorial(static_cast<unsigned>(r + n)) * factorial(static_cast<unsigned>(r)));
  SymTensor out(n, r);
  for (const auto& simplex : fan_triangulation(p)) {
    IntMatrix edges;
    for (std::size_t i = 1; i < simplex.size(); ++i) {
      IntVec e(simplex[i].size());
      for (std::size_t j = 0; j < e.size(); ++j) e[j] = simplex[i][j] - simplex[0][j];
      edges.push_back(std::move(e));
    }
    long long vol = determinant(edges);
    if (vol < 0) vol = -vol;
    // Barycentric substitution x_j = sum_i lambda_i w_i[j]; the Dirichlet
    // integral of lambda^beta over the standard simplex is prod beta_i! / (|beta| + n)!.
    std::vector<IntVec> columns(static_cast<std::size_t>(n), IntVec(simplex.size()));
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j)
      for (std::size_t i = 0; i < simplex.size(); ++i) columns[j][i] = simplex[i][j];
    for (const auto& alpha : keys) {
      std::vector<IntVec> forms;
      for (std::size_t j = 0; j < alpha.size(); ++j)
        for (int e = 0; e < alpha[j]; ++e) forms.push_back(columns[j]);
      const auto expansion = coordinate_row(forms, static_cast<int>(simplex.size()));
      Rational integral;
      for (const auto& [beta, c] : expansion) {
        BigInt weight = 1;
        for (int b : beta) weight *= factorial(static_cast<unsigned>(b));
        integral += c * Rational(weight);
      }
      out.add(alpha, integral * Rational(vol) * scale);
    }
  }
  return out;
}

std::optional<std::pair<MultiIndex, std::pair<Rational, Rational>>> first_difference(const SymTensor& a,
                                                                                       const SymTensor& b) {
  if (a.dim() != b.dim() || a.rank() != b.rank()) throw std::invalid_argument("first_difference: shape mismatch");
  for (const auto& alpha : multi_indices(a.dim(), a.rank())) {
    Rational x = a.get(alpha), y = b.get(alpha);
    if (x != y) return std::make_pair(alpha, std::make_pair(x, y));
  }
  return std::nullopt;
}

CheckReport check_reciprocity(const LatticePolytope& p, int r) {
  if (p.is_empty()) throw std::invalid_argument("check_reciprocity: empty polytope");
  CheckReport report;
  report.name = "reciprocity";
  const int n = p.ambient_dim();
  const int m = p.dim();
  const auto expansion = ehrhart_tensors(p, r);
  const SymTensor direct = discrete_moment_relint(p, r);

  SymTensor alternating(n, r);
  for (int i = 0; i <= m + r; ++i) alternating += expansion.coefficients[static_cast<std::size_t>(i)] * sign_power(i);
  alternating *= sign_power(m + r);
  record(report, "relint = (-1)^(m+r) sum_i (-1)^i L_i(P)", -1, direct, alternating);

  const auto all_faces = faces(p);
  SymTensor face_sum(n, r);
  std::vector<EhrhartTensorExpansion> face_expansions;
  for (const auto& f : all_faces) {
    face_sum += discrete_moment(f, r) * sign_power(f.dim());
    face_expansions.push_back(ehrhart_tensors(f, r));
  }
  face_sum *= sign_power(m);
  record(report, "relint = (-1)^m sum_F (-1)^dim(F) L(F)", -1, direct, face_sum);

  const auto negated = ehrhart_tensors(negate(p), r);
  for (int i = 0; i <= n + r; ++i) {
    SymTensor dual(n, r);
    for (std::size_t f = 0; f < all_faces.size(); ++f)
      dual += face_expansions[f].coefficients[static_cast<std::size_t>(i)] * sign_power(all_faces[f].dim());
    record(report, "Z°(P) = (-1)^i Z(-P) for Z = L_i", i, dual,
           negated.coefficients[static_cast<std::size_t>(i)] * sign_power(i));
  }
  return report;
}

CheckReport check_translation_covariance(const LatticePolytope& p, int r, const IntVec& y) {
  if (p.is_empty()) throw std::invalid_argument("check_translation_covariance: empty polytope");
  CheckReport report;
  report.name = "translation covariance";
  const int n = p.ambient_dim();
  std::vector<EhrhartTensorExpansion> lower;  // lower[s] = expansion of L^s(P)
  for (int s = 0; s <= r; ++s) lower.push_back(ehrhart_tensors(p, s));
  const auto shifted = ehrhart_tensors(translate(p, y), r);
  for (int l = 0; l <= n + r; ++l) {
    SymTensor rhs(n, r);
    for (int j = 0; j <= std::min(l, r); ++j) {
      const SymTensor& base = lower[static_cast<std::size_t>(r - j)].coefficients[static_cast<std::size_t>(l - j)];
      rhs += sym_product(base, sym_power(y, j)) * Rational(BigInt(1), factorial(static_cast<unsigned>(j)));
    }
    record(report, "L_l(P+y) = sum_j L^(r-j)_(l-j)(P) y^j/j!", l, shifted.coefficients[static_cast<std::size_t>(l)], rhs);
  }
  return report;
}

CheckReport check_equivariance(const LatticePolytope& p, int r, const IntMatrix& phi) {
  if (p.is_empty()) throw std::invalid_argument("check_equivariance: empty polytope");
  CheckReport report;
  report.name = "SL_n(Z) equivariance";
  const auto map = UnimodularMap::linear(phi);
  const auto image = transform(p, map);
  record(report, "L(phi P) = L(P) o phi^t", -1, discrete_moment(image, r), apply_linear(discrete_moment(p, r), phi));
  const auto before = ehrhart_tensors(p, r);
  const auto after = ehrhart_tensors(image, r);
  for (std::size_t i = 0; i < before.coefficients.size(); ++i) {
    record(report, "L_i(phi P) = L_i(P) o phi^t", static_cast<int>(i), after.coefficients[i],
           apply_linear(before.coefficients[i], phi));
  }
  return report;
}

CheckReport check_leading_coefficients(const LatticePolytope& p, int r) {
  if (p.is_empty()) throw std::invalid_argument("check_leading_coefficients: empty polytope");
  CheckReport report;
  report.name = "leading coefficients";
  const int n = p.ambient_dim();
  const auto expansion = ehrhart_tensors(p, r);
  if (p.dim() == n) {
    record(report, "L_(n+r)(P) = M^r(P)", n + r, expansion.coefficients[static_cast<std::size_t>(n + r)],
           moment_tensor(p, r));
  }
  for (int i = p.dim() + 1; i <= n; ++i) {
    record(report, "L_(i+r)(P) = 0 for dim(P) < i <= n", i + r, expansion.coefficients[static_cast<std::size_t>(i + r)],
           SymTensor(n, r));
  }
  return report;
}

}  // namespace ehrtensor
