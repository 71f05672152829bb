#pragma once

#include <json.hpp>

#include "ncribbon/element.hpp"
#include "ncribbon/structured.hpp"

namespace ncribbon {

using Json = nlohmann::ordered_json;

/// [{"exponents": {"q": 3, "t": -1}, "coefficient": "5"}, ...]; coefficients
/// travel as decimal strings so arbitrary precision survives the trip.
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j, VarFamily family);

/// {"degree", "basis", "flavor", "inverted_t", "level"?, "terms": [...]}.
Json to_json(const NcsfElement& e);
NcsfElement element_from_json(const Json& j);

/// {"degree", "ordering", "factors": [{"descent", "rows", "cols", "entries"}]}.
Json to_json(const StructuredOperator& op);

}  // namespace ncribbon
