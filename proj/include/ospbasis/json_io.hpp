#pragma once

// JSON forms of the library's values. Integers of unbounded size travel as
// decimal strings. Top-level documents carry "schema_version".

#include "json.hpp"

#include "ospbasis/action.hpp"
#include "ospbasis/basis.hpp"
#include "ospbasis/clifford.hpp"
#include "ospbasis/combinatorics.hpp"
#include "ospbasis/polynomial.hpp"

namespace ospbasis {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// Wraps a payload object with the schema version and a document kind.
Json document(const std::string& kind, Json payload);

Json to_json(const SsytTableau& a);                 // [[1,1,2],[2]]
SsytTableau tableau_from_json(const Json& j, int n);
Json to_json(const Partition& lambda);
Json to_json(const WeightVector& mu);
Json to_json(const CliffordMonomial& m);            // {"sign": 1, "parity": [1,0,1]}
Json to_json(const ExponentMatrix& gamma);          // row-major nested list
ExponentMatrix exponent_matrix_from_json(const Json& j);
Json integer_to_json(const Integer& z);             // "123"
Integer integer_from_json(const Json& j);

// [{"gamma": [[...]], "eta": [0,1], "coeff": "-2"}, ...]
Json to_json(const CliffordPoly& f);
CliffordPoly poly_from_json(const Json& j, int n, int p);

Json to_json(const TableauVector& v);
Json to_json(const ActionTable& t);
ActionTable action_table_from_json(const Json& j, int n);
Json to_json(const IntMatrix& u);
Json to_json(const IntVector& v);

// Versioned bundle of a context: tableaux, U and the normalized vectors.
Json context_bundle(const BasisContext& ctx);
// Rebuilds the context named by a bundle and checks it against the stored data;
// throws consistency_error on any difference.
std::shared_ptr<const BasisContext> context_from_bundle(const Json& bundle);

} // namespace ospbasis
