#pragma once

#include "virc1/characters.hpp"
#include "virc1/sector.hpp"

#include <json.hpp>

namespace virc1 {

// Deterministic JSON: object keys keep insertion order, rationals are
// canonical "p" or "p/q" strings, never floating point.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const sector::Dim& d);
sector::Dim dim_from_json(const Json& j);

Json to_json(const characters::Character& ch);
characters::Character character_from_json(const Json& j);

Json to_json(const characters::BranchingResult& br);
characters::BranchingResult branching_from_json(const Json& j);

Json to_json(const sector::Verdict& v);
sector::Verdict verdict_from_json(const Json& j);

} // namespace virc1
