#pragma once

#include "json.hpp"

#include "demazure/charring.hpp"
#include "demazure/harness.hpp"

// Canonical JSON form of a character:
//   {"rank": n, "terms": [{"weight": [..], "coeff": "<decimal>"}, ...]}
// with terms sorted lexicographically by weight and coefficients as decimal
// strings (they are arbitrary-precision).  Parsing accepts integer
// coefficients as well; serialization always emits the canonical form, so
// parse-then-serialize is the identity on canonical documents.

namespace demazure {

nlohmann::json char_to_json(const LaurentChar& f);
LaurentChar char_from_json(const nlohmann::json& doc);  // throws MalformedInput

std::string char_to_string(const LaurentChar& f);       // char_to_json(...).dump(2)
LaurentChar char_from_string(const std::string& text);

nlohmann::json weyl_to_json(const WeylElt& w);
nlohmann::json suite_report_to_json(const SuiteReport& report);

}  // namespace demazure
