#include "ehrtensor/tensor.hpp"

#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ehrtensor/arith.hpp"

namespace ehrtensor {

namespace {

// Homogeneous polynomial in n variables keyed by exponent vector.
using Poly = std::map<MultiIndex, Rational>;

Poly poly_one(int n) { return Poly{{MultiIndex(static_cast<std::size_t>(n), 0), Rational(1)}}; }

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ka, va] : a) {
    for (const auto& [kb, vb] : b) {
      MultiIndex k(ka.size());
      for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
      auto [it, inserted] = out.try_emplace(std::move(k), va * vb);
      if (!inserted) it->second += va * vb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

template <typename Scalar>
Poly linear_form(std::span<const Scalar> v) {
  Poly out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rational c(v[j]);
    if (c.is_zero()) continue;
    MultiIndex k(v.size(), 0);
    k[j] = 1;
    out.emplace(std::move(k), c);
  }
  return out;
}

// Diagonal polynomial p_T(v) = T(v, ..., v) = sum_alpha C(r; alpha) T_alpha v^alpha.
Poly to_poly(const SymTensor& t) {
  Poly out;
  for (const auto& [alpha, value] : t.coords()) out.emplace(alpha, Rational(multinomial(alpha)) * value);
  return out;
}

SymTensor from_poly(int dim, int rank, const Poly& p) {
  SymTensor out(dim, rank);
  for (const auto& [alpha, value] : p) out.set(alpha, value / Rational(multinomial(alpha)));
  return out;
}

template <typename Vec>
CoordinateRow coordinate_row_impl(std::span<const Vec> vectors, int dim) {
  Poly acc = poly_one(dim);
  for (const auto& v : vectors) {
    if (static_cast<int>(v.size()) != dim) throw std::invalid_argument("coordinate_row: vector dimension mismatch");
    acc = poly_mul(acc, linear_form(std::span(v.data(), v.size())));
  }
  return acc;
}

}  // namespace

int degree(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

std::vector<MultiIndex> multi_indices(int n, int r) {
  std::vector<MultiIndex> out;
  if (n <= 0) {
    if (r == 0) out.emplace_back();
    return out;
  }
  MultiIndex cur(static_cast<std::size_t>(n), 0);
  // Enumerate in ascending lex order: the first coordinate varies slowest.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = 0; a <= left; ++a) {
      cur[static_cast<std::size_t>(pos)] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, r);
  return out;
}

SymTensor::SymTensor(int dim, int rank) : dim_(dim), rank_(rank) {
  if (dim < 1) throw std::invalid_argument("tensor dimension must be positive");
  if (rank < 0) throw std::invalid_argument("tensor rank must be non-negative");
}

SymTensor SymTensor::scalar(int dim, const Rational& value) {
  SymTensor t(dim, 0);
  t.set(MultiIndex(static_cast<std::size_t>(dim), 0), value);
  return t;
}

SymTensor SymTensor::basis_vector(int dim, int i) {
  SymTensor t(dim, 1);
  MultiIndex alpha(static_cast<std::size_t>(dim), 0);
  alpha.at(static_cast<std::size_t>(i)) = 1;
  t.set(alpha, Rational(1));
  return t;
}

void SymTensor::check_index(const MultiIndex& alpha) const {
  if (static_cast<int>(alpha.size()) != dim_ || degree(alpha) != rank_) {
    throw std::invalid_argument("multi-index " + index_key(alpha) + " does not match tensor of dim " +
                                std::to_string(dim_) + " rank " + std::to_string(rank_));
  }
  for (int a : alpha) {
    if (a < 0) throw std::invalid_argument("negative exponent in multi-index");
  }
}

Rational SymTensor::get(const MultiIndex& alpha) const {
  check_index(alpha);
  auto it = coords_.find(alpha);
  return it == coords_.end() ? Rational() : it->second;
}

void SymTensor::set(const MultiIndex& alpha, const Rational& value) {
  check_index(alpha);
  if (value.is_zero()) {
    coords_.erase(alpha);
  } else {
    coords_[alpha] = value;
  }
}

void SymTensor::add(const MultiIndex& alpha, const Rational& value) {
  check_index(alpha);
  if (value.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(alpha, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

RatVec SymTensor::dense() const {
  RatVec out;
  for (const auto& alpha : multi_indices(dim_, rank_)) out.push_back(get(alpha));
  return out;
}

SymTensor SymTensor::from_dense(int dim, int rank, const RatVec& values) {
  SymTensor t(dim, rank);
  auto keys = multi_indices(dim, rank);
  if (keys.size() != values.size()) throw std::invalid_argument("from_dense: wrong number of coordinates");
  for (std::size_t i = 0; i < keys.size(); ++i) t.set(keys[i], values[i]);
  return t;
}

SymTensor& SymTensor::operator+=(const SymTensor& o) {
  if (o.dim_ != dim_ || o.rank_ != rank_) throw std::invalid_argument("tensor shape mismatch in addition");
  for (const auto& [alpha, value] : o.coords_) add(alpha, value);
  return *this;
}

SymTensor& SymTensor::operator-=(const SymTensor& o) {
  if (o.dim_ != dim_ || o.rank_ != rank_) throw std::invalid_argument("tensor shape mismatch in subtraction");
  for (const auto& [alpha, value] : o.coords_) add(alpha, -value);
  return *this;
}

SymTensor& SymTensor::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coords_.clear();
    return *this;
  }
  for (auto& [alpha, value] : coords_) value *= c;
  return *this;
}

SymTensor sym_power(std::span<const long long> v, int r) {
  RatVec q(v.begin(), v.end());
  return sym_power(std::span<const Rational>(q), r);
}

SymTensor sym_power(std::span<const Rational> v, int r) {
  const int n = static_cast<int>(v.size());
  SymTensor out(n, r);
  for (const auto& alpha : multi_indices(n, r)) {
    Rational value(1);
    for (int i = 0; i < n; ++i) value *= pow(v[static_cast<std::size_t>(i)], static_cast<unsigned>(alpha[static_cast<std::size_t>(i)]));
    out.set(alpha, value);
  }
  return out;
}

SymTensor sym_product(const SymTensor& a, const SymTensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sym_product: dimension mismatch");
  return from_poly(a.dim(), a.rank() + b.rank(), poly_mul(to_poly(a), to_poly(b)));
}

SymTensor apply_linear(const SymTensor& t, const IntMatrix& m) {
  const int n = t.dim();
  if (static_cast<int>(m.size()) != n) throw std::invalid_argument("apply_linear: matrix size mismatch");
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("apply_linear: matrix is not square");
  }
  // p_{T o M^t}(v) = p_T(M^t v); coordinate i of M^t v is (column i of M) . v.
  std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    IntVec column(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) column[static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    Poly form = linear_form(std::span<const long long>(column));
    auto& pw = powers[static_cast<std::size_t>(i)];
    pw.push_back(poly_one(n));
    for (int k = 1; k <= t.rank(); ++k) pw.push_back(poly_mul(pw.back(), form));
  }
  Poly result;
  for (const auto& [beta, value] : t.coords()) {
    Poly term{{MultiIndex(static_cast<std::size_t>(n), 0), Rational(multinomial(beta)) * value}};
    for (int i = 0; i < n; ++i) term = poly_mul(term, powers[static_cast<std::size_t>(i)][static_cast<std::size_t>(beta[static_cast<std::size_t>(i)])]);
    for (const auto& [k, c] : term) {
      auto [it, inserted] = result.try_emplace(k, c);
      if (!inserted) it->second += c;
    }
  }
  std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
  return from_poly(n, t.rank(), result);
}

CoordinateRow coordinate_row(std::span<const IntVec> vectors, int dim) {
  return coordinate_row_impl(vectors, dim);
}

CoordinateRow coordinate_row(std::span<const RatVec> vectors, int dim) {
  return coordinate_row_impl(vectors, dim);
}

Rational apply_row(const CoordinateRow& row, const SymTensor& t) {
  Rational acc;
  for (const auto& [alpha, c] : row) acc += c * t.get(alpha);
  return acc;
}

Rational evaluate(const SymTensor& t, std::span<const RatVec> vectors) {
  if (static_cast<int>(vectors.size()) != t.rank()) {
    throw std::invalid_argument("evaluate: expected " + std::to_string(t.rank()) + " vectors, got " +
                                std::to_string(vectors.size()));
  }
  if (t.rank() == 0) return t.get(MultiIndex(static_cast<std::size_t>(t.dim()), 0));
  return apply_row(coordinate_row(vectors, t.dim()), t);
}

std::string index_key(const MultiIndex& alpha) {
  std::string out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(alpha[i]);
  }
  return out;
}

MultiIndex parse_index_key(const std::string& key) {
  MultiIndex out;
  std::stringstream ss(key);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t used = 0;
    int v = std::stoi(part, &used);
    if (used != part.size() || v < 0) throw std::invalid_argument("bad multi-index key: " + key);
    out.push_back(v);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const SymTensor& t) {
  os << "SymTensor(dim=" << t.dim() << ", rank=" << t.rank() << ", {";
  bool first = true;
  for (const auto& [alpha, value] : t.coords()) {
    if (!first) os << ", ";
    first = false;
    os << "(" << index_key(alpha) << "): " << value;
  }
  return os << "})";
}

}  // namespace ehrtensor
