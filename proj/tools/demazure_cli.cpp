// Command-line frontend: exact Weyl/braid combinatorics, Demazure operators
// on character rings, descent membership, and the verification suites.
//
// Exit codes: 0 success (or positive verdict), 1 negative verdict or failed
// verification, 2 malformed input, 3 rank mismatch, 4 domain violation
// (non-dominant weight, group enumeration bound, failed exact division).

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "demazure/demazure.hpp"
#include "demazure/errors.hpp"
#include "demazure/harness.hpp"
#include "demazure/json_io.hpp"

using nlohmann::json;
using namespace demazure;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitRankMismatch = 3;
constexpr int kExitDomain = 4;

std::size_t group_bound() {
  if (const char* env = std::getenv("DEMAZURE_MAX_GROUP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0)
      throw MalformedInput("DEMAZURE_MAX_GROUP must be a positive integer, got \"" +
                           std::string(env) + "\"");
    return static_cast<std::size_t>(v);
  }
  return kDefaultGroupBound;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  for (char c : text) cleaned += (c == ',' || c == '[' || c == ']') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<std::int64_t> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw MalformedInput("expected an integer, got \"" + tok + "\"");
    }
  }
  return out;
}

Word parse_word(const RootDatum& datum, const std::string& text) {
  Word word;
  for (std::int64_t v : parse_int_list(text)) {
    if (v < 1 || v > datum.rank)
      throw MalformedInput("letter " + std::to_string(v) + " out of range 1.." +
                           std::to_string(datum.rank));
    word.letters.push_back(static_cast<int>(v));
  }
  return word;
}

Weight parse_weight(const RootDatum& datum, const std::string& text) {
  std::vector<std::int64_t> coords = parse_int_list(text);
  if (static_cast<int>(coords.size()) != datum.rank)
    throw RankMismatch("weight has " + std::to_string(coords.size()) + " coordinates, type " +
                       type_code(datum) + " has rank " + std::to_string(datum.rank));
  return Weight(std::move(coords));
}

LaurentChar read_char_stdin(const RootDatum& datum) {
  std::ostringstream buf;
  buf << std::cin.rdbuf();
  LaurentChar f = char_from_string(buf.str());
  if (f.rank() != datum.rank)
    throw RankMismatch("character has rank " + std::to_string(f.rank()) + ", type " +
                       type_code(datum) + " has rank " + std::to_string(datum.rank));
  return f;
}

std::string word_plain(const Word& word) {
  std::string s;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(word.letters[k]);
  }
  return s;
}

json word_to_json(const Word& word) { return json(word.letters); }

void print_char(const LaurentChar& f, bool plain) {
  if (!plain) {
    std::cout << char_to_string(f) << "\n";
    return;
  }
  for (const auto& [w, c] : f.terms()) {
    std::cout << c.str() << " * e^[";
    for (int k = 0; k < w.rank(); ++k) std::cout << (k ? "," : "") << w[k];
    std::cout << "]\n";
  }
  if (f.is_zero()) std::cout << "0\n";
}

void print_element(const RootDatum& datum, const WeylElt& w, bool plain) {
  Word word = canonical_word(datum, w);
  if (plain) {
    std::cout << "word: " << word_plain(word) << "\n";
    std::cout << "length: " << w.len << "\n";
    return;
  }
  json out{{"word", word_to_json(word)}, {"length", w.len}, {"matrix", weyl_to_json(w)}};
  std::cout << out.dump(2) << "\n";
}

int cmd_reduce(const std::string& type, const std::string& word_text, bool plain) {
  RootDatum datum = build_root_datum(type);
  WeylElt w = word_to_element(datum, parse_word(datum, word_text));
  print_element(datum, w, plain);
  return 0;
}

int cmd_demazure_product(const std::string& type, const std::string& word_text, bool plain) {
  RootDatum datum = build_root_datum(type);
  WeylElt w = demazure_product(datum, parse_word(datum, word_text));
  print_element(datum, w, plain);
  return 0;
}

int cmd_demazure(const std::string& type, const std::string& word_text,
                 const std::string& elt_text, bool use_elt, bool plain) {
  RootDatum datum = build_root_datum(type);
  LaurentChar f = read_char_stdin(datum);
  LaurentChar out = use_elt
                        ? demazure_elt(datum, word_to_element(datum, parse_word(datum, elt_text)), f)
                        : demazure_word(datum, parse_word(datum, word_text), f);
  print_char(out, plain);
  return 0;
}

int cmd_descent_check(const std::string& type, bool plain) {
  RootDatum datum = build_root_datum(type);
  LaurentChar f = read_char_stdin(datum);
  std::optional<int> witness = descent_witness(datum, f);
  if (plain) {
    std::cout << "member: " << (witness ? "false" : "true") << "\n";
    if (witness) std::cout << "witness: " << *witness << "\n";
  } else {
    json out{{"member", !witness.has_value()},
             {"witness", witness ? json(*witness) : json(nullptr)}};
    std::cout << out.dump(2) << "\n";
  }
  return witness ? kExitNegative : 0;
}

int cmd_weyl_char(const std::string& type, const std::string& weight_text, bool plain) {
  RootDatum datum = build_root_datum(type);
  Weight lambda = parse_weight(datum, weight_text);
  LaurentChar chi = weyl_character(datum, lambda, group_bound());
  Int dim = weyl_dimension(datum, lambda);
  if (plain) {
    print_char(chi, true);
    std::cout << "dimension: " << dim.str() << "\n";
  } else {
    json out = char_to_json(chi);
    out["dimension"] = dim.str();
    std::cout << out.dump(2) << "\n";
  }
  return 0;
}

int cmd_bruhat(const std::string& type, const std::string& u_text, const std::string& w_text,
               bool plain) {
  RootDatum datum = build_root_datum(type);
  WeylElt u = word_to_element(datum, parse_word(datum, u_text));
  WeylElt w = word_to_element(datum, parse_word(datum, w_text));
  bool leq = bruhat_leq(datum, u, w);
  if (plain)
    std::cout << "leq: " << (leq ? "true" : "false") << "\n";
  else
    std::cout << json{{"leq", leq}}.dump(2) << "\n";
  return leq ? 0 : kExitNegative;
}

int cmd_reduced_words(const std::string& type, const std::string& word_text, bool plain) {
  RootDatum datum = build_root_datum(type);
  WeylElt w = word_to_element(datum, parse_word(datum, word_text));
  std::vector<Word> words = all_reduced_words(datum, w);
  if (plain) {
    for (const Word& word : words) std::cout << word_plain(word) << "\n";
  } else {
    json arr = json::array();
    for (const Word& word : words) arr.push_back(word_to_json(word));
    std::cout << json{{"count", words.size()}, {"words", arr}}.dump(2) << "\n";
  }
  return 0;
}

int cmd_braid_equal(const std::string& type, const std::string& a_text,
                    const std::string& b_text, bool plain) {
  RootDatum datum = build_root_datum(type);
  BraidWord a(parse_word(datum, a_text).letters);
  BraidWord b(parse_word(datum, b_text).letters);
  bool equal = braid_equal(datum, a, b);
  if (plain)
    std::cout << "equal: " << (equal ? "true" : "false") << "\n";
  else
    std::cout << json{{"equal", equal}}.dump(2) << "\n";
  return equal ? 0 : kExitNegative;
}

int cmd_verify(const std::string& type, const std::string& suite_text, int radius,
               std::uint64_t seed, std::size_t samples, bool plain) {
  RootDatum datum = build_root_datum(type);
  std::vector<Suite> suites;
  if (suite_text == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(suite_text)) {
    suites.push_back(*s);
  } else {
    throw MalformedInput("unknown suite \"" + suite_text +
                         "\" (expected coproj|braid|words|descent|garside|collapse|all)");
  }

  HarnessOptions options;
  options.radius = radius;
  options.seed = seed;
  options.samples = samples;
  options.max_group = group_bound();

  bool all_passed = true;
  json reports = json::array();
  for (Suite s : suites) {
    SuiteReport report = run_suite(datum, s, options);
    all_passed = all_passed && report.passed();
    if (plain) {
      for (const CheckResult& check : report.checks) {
        std::cout << (check.passed ? "ok   " : "FAIL ") << report.suite << "/" << check.identity
                  << "  cases=" << check.cases;
        if (!check.passed) std::cout << "  counterexample: " << check.counterexample;
        std::cout << "\n";
      }
    } else {
      reports.push_back(suite_report_to_json(report));
    }
  }
  if (plain)
    std::cout << (all_passed ? "all checks passed" : "verification FAILED") << "\n";
  else
    std::cout << json{{"passed", all_passed}, {"suites", reports}}.dump(2) << "\n";
  return all_passed ? 0 : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact character-ring computations for Weyl groups: Demazure operators,"
               " braid monoid normal forms, descent membership, verification suites."};
  app.require_subcommand(1);

  bool plain = false;
  std::function<int()> action;

  auto add_common = [&plain](CLI::App* cmd) {
    auto* j = cmd->add_flag("--json", "JSON output (default)");
    cmd->add_flag("--plain", plain, "plain text output")->excludes(j);
  };

  std::string type, word_text, elt_text, a_text, b_text, weight_text;
  std::string suite_text = "all";
  int radius = -1;
  std::uint64_t seed = 0;
  std::size_t samples = 200;

  auto* reduce = app.add_subcommand("reduce", "multiply a word and print the canonical"
                                              " reduced word of the product");
  reduce->add_option("--type", type, "Cartan type, e.g. A2")->required();
  reduce->add_option("word", word_text, "generator letters, e.g. \"1 2 1 1\"");
  add_common(reduce);
  reduce->callback([&] { action = [&] { return cmd_reduce(type, word_text, plain); }; });

  auto* dem = app.add_subcommand("demazure", "apply Demazure operators to the character"
                                             " read from stdin (JSON)");
  dem->add_option("--type", type, "Cartan type")->required();
  auto* wopt = dem->add_option("--word", word_text, "operator composition, leftmost outermost");
  auto* eopt = dem->add_option("--elt", elt_text, "group element given as a word; applies the"
                                                  " operator of its canonical reduced word");
  wopt->excludes(eopt);
  add_common(dem);
  dem->callback([&, eopt] {
    bool use_elt = eopt->count() > 0;
    action = [&, use_elt] { return cmd_demazure(type, word_text, elt_text, use_elt, plain); };
  });

  auto* descent = app.add_subcommand("descent-check", "test whether the character from stdin"
                                                      " is fixed by every Demazure operator");
  descent->add_option("--type", type, "Cartan type")->required();
  add_common(descent);
  descent->callback([&] { action = [&] { return cmd_descent_check(type, plain); }; });

  auto* wchar = app.add_subcommand("weyl-char", "irreducible character of a dominant weight,"
                                                " with its dimension");
  wchar->add_option("--type", type, "Cartan type")->required();
  wchar->add_option("weight", weight_text, "fundamental-weight coordinates, e.g. \"1 1\"")
      ->required();
  add_common(wchar);
  wchar->callback([&] { action = [&] { return cmd_weyl_char(type, weight_text, plain); }; });

  auto* bruhat = app.add_subcommand("bruhat", "Bruhat order comparison of two products");
  bruhat->add_option("--type", type, "Cartan type")->required();
  bruhat->add_option("u", a_text, "word for the smaller element")->required();
  bruhat->add_option("w", b_text, "word for the larger element")->required();
  add_common(bruhat);
  bruhat->callback([&] { action = [&] { return cmd_bruhat(type, a_text, b_text, plain); }; });

  auto* rwords = app.add_subcommand("reduced-words", "all reduced words of a product");
  rwords->add_option("--type", type, "Cartan type")->required();
  rwords->add_option("word", word_text, "generator letters");
  add_common(rwords);
  rwords->callback([&] { action = [&] { return cmd_reduced_words(type, word_text, plain); }; });

  auto* dprod = app.add_subcommand("demazure-product", "0-Hecke fold of a word");
  dprod->add_option("--type", type, "Cartan type")->required();
  dprod->add_option("word", word_text, "generator letters");
  add_common(dprod);
  dprod->callback([&] { action = [&] { return cmd_demazure_product(type, word_text, plain); }; });

  auto* bequal = app.add_subcommand("braid-equal", "word problem in the positive braid monoid");
  bequal->add_option("--type", type, "Cartan type")->required();
  bequal->add_option("a", a_text, "first word")->required();
  bequal->add_option("b", b_text, "second word")->required();
  add_common(bequal);
  bequal->callback([&] { action = [&] { return cmd_braid_equal(type, a_text, b_text, plain); }; });

  auto* verify = app.add_subcommand("verify", "run the identity verification suites");
  verify->add_option("--type", type, "Cartan type")->required();
  verify->add_option("--suite", suite_text, "coproj|braid|words|descent|garside|collapse|all");
  verify->add_option("--radius", radius, "monomial box radius (-1: per-rank default)");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--samples", samples, "random samples per check");
  add_common(verify);
  verify->callback([&] {
    action = [&] { return cmd_verify(type, suite_text, radius, seed, samples, plain); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  try {
    return action();
  } catch (const MalformedInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const UnsupportedType& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const RankMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRankMismatch;
  } catch (const NotDominant& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const GroupTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NotDivisible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
}
