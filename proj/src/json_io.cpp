#include "demazure/json_io.hpp"

#include "demazure/errors.hpp"

namespace demazure {

using nlohmann::json;

json char_to_json(const LaurentChar& f) {
  json terms = json::array();
  for (const auto& [w, c] : f.terms()) {
    json term;
    term["weight"] = w.coords;
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  return json{{"rank", f.rank()}, {"terms", std::move(terms)}};
}

LaurentChar char_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("terms"))
    throw MalformedInput("character document must be an object with rank and terms");
  if (!doc["rank"].is_number_integer())
    throw MalformedInput("rank must be an integer");
  int rank = doc["rank"].get<int>();
  if (rank < 1) throw MalformedInput("rank must be positive");
  if (!doc["terms"].is_array()) throw MalformedInput("terms must be an array");

  LaurentChar f(rank);
  for (const json& term : doc["terms"]) {
    if (!term.is_object() || !term.contains("weight") || !term.contains("coeff"))
      throw MalformedInput("each term needs a weight and a coeff");
    const json& jw = term["weight"];
    if (!jw.is_array() || static_cast<int>(jw.size()) != rank)
      throw MalformedInput("weight must be an array of rank " + std::to_string(rank));
    Weight w = Weight::zero(rank);
    for (int k = 0; k < rank; ++k) {
      if (!jw[static_cast<std::size_t>(k)].is_number_integer())
        throw MalformedInput("weight coordinates must be integers");
      w.coords[static_cast<std::size_t>(k)] = jw[static_cast<std::size_t>(k)].get<std::int64_t>();
    }
    const json& jc = term["coeff"];
    Int c;
    if (jc.is_string()) {
      try {
        c = Int(jc.get<std::string>());
      } catch (const std::exception&) {
        throw MalformedInput("coeff is not a decimal integer: " + jc.get<std::string>());
      }
    } else if (jc.is_number_integer()) {
      c = Int(jc.get<std::int64_t>());
    } else {
      throw MalformedInput("coeff must be a decimal string or an integer");
    }
    if (f.coeff(w) != 0) throw MalformedInput("duplicate weight in terms");
    f.add_term(w, c);
  }
  return f;
}

std::string char_to_string(const LaurentChar& f) { return char_to_json(f).dump(2); }

LaurentChar char_from_string(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw MalformedInput("invalid JSON");
  return char_from_json(doc);
}

json weyl_to_json(const WeylElt& w) {
  json rows = json::array();
  for (int i = 0; i < w.rank; ++i) {
    json row = json::array();
    for (int j = 0; j < w.rank; ++j)
      row.push_back(w.mat[static_cast<std::size_t>(i) * w.rank + j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

json suite_report_to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry;
    entry["identity"] = c.identity;
    entry["cases"] = c.cases;
    entry["passed"] = c.passed;
    entry["counterexample"] = c.passed ? json(nullptr) : json(c.counterexample);
    checks.push_back(std::move(entry));
  }
  return json{{"suite", report.suite}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

}  // namespace demazure
