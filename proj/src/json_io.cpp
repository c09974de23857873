#include "ehrtensor/json_io.hpp"

#include <limits>

namespace ehrtensor {

namespace {

// Keeps the exact arithmetic of the scans and determinants inside 64 bits.
constexpr long long kMaxCoordinate = 1'000'000;

}  // namespace

Json rational_to_json(const Rational& q) { return q.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError("expected a rational as \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw InputError(std::string("bad rational: ") + e.what());
  }
}

Json tensor_to_json(const SymTensor& t) {
  Json coords = Json::object();
  for (const auto& [alpha, value] : t.coords()) coords[index_key(alpha)] = rational_to_json(value);
  return Json{{"dim", t.dim()}, {"rank", t.rank()}, {"coords", coords}};
}

SymTensor tensor_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rank") || !j.contains("coords"))
    throw InputError("tensor JSON needs dim, rank and coords");
  if (!j["dim"].is_number_integer() || !j["rank"].is_number_integer() || !j["coords"].is_object())
    throw InputError("tensor JSON: bad field types");
  const int dim = j["dim"].get<int>(), rank = j["rank"].get<int>();
  if (dim < 1 || rank < 0) throw InputError("tensor JSON: dim must be positive and rank non-negative");
  SymTensor t(dim, rank);
  for (const auto& [key, value] : j["coords"].items()) {
    MultiIndex alpha;
    try {
      alpha = parse_index_key(key);
      t.set(alpha, rational_from_json(value));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError("tensor JSON: bad coordinate '" + key + "': " + e.what());
    }
  }
  return t;
}

Json polytope_to_json(const LatticePolytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices()) vertices.push_back(v);
  return Json{{"vertices", vertices}};
}

LatticePolytope polytope_from_json(const Json& j, int max_dim) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw InputError("polytope JSON needs a \"vertices\" array");
  std::vector<IntVec> points;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array() || v.empty()) throw InputError("each vertex must be a non-empty array of integers");
    IntVec x;
    for (const auto& c : v) {
      if (!c.is_number_integer()) throw InputError("vertex coordinates must be integers");
      const auto value = c.get<long long>();
      if (value > kMaxCoordinate || value < -kMaxCoordinate) throw InputError("vertex coordinate out of range");
      x.push_back(value);
    }
    if (!points.empty() && x.size() != points.front().size()) throw InputError("vertices have different dimensions");
    points.push_back(std::move(x));
  }
  int dim = points.empty() ? -1 : static_cast<int>(points.front().size());
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) throw InputError("\"dim\" must be an integer");
    const int given = j["dim"].get<int>();
    if (dim >= 0 && given != dim) throw InputError("\"dim\" disagrees with the vertices");
    dim = given;
  }
  if (dim < 1) throw InputError("ambient dimension must be at least 1");
  if (dim > max_dim) throw InputError("ambient dimension " + std::to_string(dim) + " exceeds the cap " + std::to_string(max_dim));
  return LatticePolytope::from_points(points, dim);
}

Json report_to_json(const CheckReport& report) {
  Json out{{"check", report.name}, {"passed", report.passed}, {"checked", report.checked}};
  if (report.failure) {
    const auto& f = *report.failure;
    out["counterexample"] = Json{{"relation", f.relation},
                                 {"index", f.index},
                                 {"coordinate", index_key(f.coordinate)},
                                 {"lhs", rational_to_json(f.lhs)},
                                 {"rhs", rational_to_json(f.rhs)}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

}  // namespace ehrtensor
