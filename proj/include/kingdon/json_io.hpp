#pragma once

#include "kingdon/algebra.hpp"
#include "kingdon/structure.hpp"

#include <json.hpp>

namespace kingdon {

// Schema: { "name": str, "basis": [names], "table": dim x dim array of
// coefficient vectors, rationals as canonical strings "p" / "p/q" }.
// Serialization is canonical, so emitted documents round-trip bit-exactly.
nlohmann::json algebra_to_json(const Algebra& a);
AlgebraPtr algebra_from_json(const nlohmann::json& j);  // throws ParseError

// Symmetric matrix from a JSON array of rows; entries are integers or
// rational strings.
Matrix gram_from_json(const nlohmann::json& j);  // throws ParseError

nlohmann::json structure_report_to_json(const StructureReport& rep);

}  // namespace kingdon
