#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "ehrtensor/ehrhart.hpp"
#include "ehrtensor/polytope.hpp"
#include "ehrtensor/tensor.hpp"

namespace ehrtensor {

// Objects keep insertion order, so tensor keys come out in multi-index order.
using Json = nlohmann::ordered_json;

// Malformed or out-of-range user input.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json rational_to_json(const Rational& q);
// Accepts "p/q" strings and JSON integers.
Rational rational_from_json(const Json& j);

// {"dim": n, "rank": r, "coords": {"a1,...,an": "p/q"}} with zero entries
// omitted and keys in lexicographic multi-index order.
Json tensor_to_json(const SymTensor& t);
SymTensor tensor_from_json(const Json& j);

// {"vertices": [[...], ...]}
Json polytope_to_json(const LatticePolytope& p);
// Throws InputError on malformed input or when the ambient dimension exceeds
// max_dim. An empty vertex list needs "dim" to fix the ambient dimension.
LatticePolytope polytope_from_json(const Json& j, int max_dim = kMaxAmbientDim);

Json report_to_json(const CheckReport& report);

}  // namespace ehrtensor
