#include "demazure/harness.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace demazure {

namespace {

std::string weight_str(const Weight& w) {
  std::string s = "[";
  for (int k = 0; k < w.rank(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s + "]";
}

std::string letters_str(const std::vector<int>& letters) {
  std::string s = "[";
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(letters[k]);
  }
  return s + "]";
}

int effective_radius(const RootDatum& datum, const HarnessOptions& opt) {
  if (opt.radius >= 0) return opt.radius;
  return datum.rank <= 2 ? 2 : 1;
}

int effective_garside_len(const RootDatum& datum, const HarnessOptions& opt) {
  if (opt.garside_len > 0) return opt.garside_len;
  return datum.rank <= 2 ? 6 : 4;
}

// All words over the alphabet 1..rank with length <= max_len, shortest
// first, lexicographic within a length.
std::vector<BraidWord> words_up_to(int rank, int max_len) {
  std::vector<BraidWord> out;
  out.emplace_back();
  std::size_t level_begin = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t level_end = out.size();
    for (std::size_t k = level_begin; k < level_end; ++k)
      for (int i = 1; i <= rank; ++i) {
        BraidWord w = out[k];
        w.letters.push_back(i);
        out.push_back(std::move(w));
      }
    level_begin = level_end;
  }
  return out;
}

CheckResult check_coprojector(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "D_i D_i = D_i on the monomial box"};
  for (int i = 1; i <= datum.rank; ++i)
    for (const Weight& lambda : weight_box(datum.rank, effective_radius(datum, opt))) {
      LaurentChar once = demazure_simple(datum, i, LaurentChar::monomial(lambda));
      ++r.cases;
      if (demazure_simple(datum, i, once) != once) {
        r.passed = false;
        r.counterexample = "i=" + std::to_string(i) + " lambda=" + weight_str(lambda);
        return r;
      }
    }
  return r;
}

CheckResult check_two_routes(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "closed form agrees with the division route"};
  for (int i = 1; i <= datum.rank; ++i)
    for (const Weight& lambda : weight_box(datum.rank, effective_radius(datum, opt))) {
      LaurentChar m = LaurentChar::monomial(lambda);
      ++r.cases;
      if (demazure_simple(datum, i, m) != demazure_simple_via_division(datum, i, m)) {
        r.passed = false;
        r.counterexample = "i=" + std::to_string(i) + " lambda=" + weight_str(lambda);
        return r;
      }
    }
  return r;
}

CheckResult check_braid_action(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "D_w1 D_w2 = D_w1w2 for length-additive pairs"};
  const auto box = weight_box(datum.rank, effective_radius(datum, opt));
  const auto group = enumerate_group(datum, opt.max_group);
  for (const WeylElt& w1 : group)
    for (const WeylElt& w2 : group) {
      if (!lengths_add(datum, w1, w2)) continue;
      WeylElt w12 = multiply(datum, w1, w2);
      for (const Weight& lambda : box) {
        LaurentChar m = LaurentChar::monomial(lambda);
        ++r.cases;
        if (demazure_elt(datum, w1, demazure_elt(datum, w2, m)) != demazure_elt(datum, w12, m)) {
          r.passed = false;
          r.counterexample = "w1=" + letters_str(canonical_word(datum, w1).letters) +
                             " w2=" + letters_str(canonical_word(datum, w2).letters) +
                             " lambda=" + weight_str(lambda);
          return r;
        }
      }
    }
  return r;
}

CheckResult check_orbit_collapse(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "orbit_class(w1) . orbit_class(w2) = orbit_class(w1w2) when lengths add"};
  const int radius = effective_radius(datum, opt);
  const auto group = enumerate_group(datum, opt.max_group);
  for (const WeylElt& w1 : group)
    for (const WeylElt& w2 : group) {
      if (!lengths_add(datum, w1, w2)) continue;
      ++r.cases;
      OpExpr composed = op_compose(orbit_class(datum, w1), orbit_class(datum, w2));
      OpExpr direct = orbit_class(datum, multiply(datum, w1, w2));
      if (!op_equal_sampled(datum, composed, direct, radius)) {
        r.passed = false;
        r.counterexample = "w1=" + letters_str(canonical_word(datum, w1).letters) +
                           " w2=" + letters_str(canonical_word(datum, w2).letters);
        return r;
      }
    }
  return r;
}

CheckResult check_reduced_words(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "all reduced words of w give the same operator"};
  const auto box = weight_box(datum.rank, effective_radius(datum, opt));
  for (const WeylElt& w : enumerate_group(datum, opt.max_group)) {
    std::vector<Word> words = all_reduced_words(datum, w);
    for (std::size_t k = 1; k < words.size(); ++k)
      for (const Weight& lambda : box) {
        LaurentChar m = LaurentChar::monomial(lambda);
        ++r.cases;
        if (demazure_word(datum, words[k], m) != demazure_word(datum, words[0], m)) {
          r.passed = false;
          r.counterexample = "words " + letters_str(words[0].letters) + " vs " +
                             letters_str(words[k].letters) + " lambda=" + weight_str(lambda);
          return r;
        }
      }
  }
  return r;
}

CheckResult check_descent_symmetrized(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "symmetrized characters are descent members"};
  SplitMix64 rng(opt.seed ^ 0xD5C4u);
  for (std::size_t n = 0; n < opt.samples; ++n) {
    LaurentChar sym = symmetrize(datum, random_char(rng, datum.rank), opt.max_group);
    ++r.cases;
    if (!is_descent_member(datum, sym) || !descent_via_w0(datum, sym)) {
      r.passed = false;
      r.counterexample = "sample " + std::to_string(n);
      return r;
    }
  }
  return r;
}

CheckResult check_descent_predicates(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "is_descent_member = is_invariant = descent_via_w0"};
  SplitMix64 rng(opt.seed ^ 0xA93Eu);
  for (std::size_t n = 0; n < opt.samples; ++n) {
    LaurentChar f = random_char(rng, datum.rank);
    for (const LaurentChar& g : {f, symmetrize(datum, f, opt.max_group)}) {
      bool member = is_descent_member(datum, g);
      ++r.cases;
      if (member != is_invariant(datum, g) || member != descent_via_w0(datum, g)) {
        r.passed = false;
        r.counterexample = "sample " + std::to_string(n);
        return r;
      }
    }
  }
  return r;
}

CheckResult check_garside_word_problem(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "braid_equal agrees with rewrite closure on short words"};
  const auto words = words_up_to(datum.rank, effective_garside_len(datum, opt));

  // Classes by closure, then every pair cross-checked against braid_equal.
  std::map<BraidWord, std::size_t> class_of;
  std::size_t next_class = 0;
  for (const BraidWord& w : words)
    if (!class_of.count(w)) {
      for (const BraidWord& u : braid_rewrite_class(datum, w)) class_of[u] = next_class;
      ++next_class;
    }

  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      ++r.cases;
      bool by_closure = class_of[words[a]] == class_of[words[b]];
      if (braid_equal(datum, words[a], words[b]) != by_closure) {
        r.passed = false;
        r.counterexample = letters_str(words[a].letters) + " vs " + letters_str(words[b].letters);
        return r;
      }
    }
  return r;
}

CheckResult check_garside_form(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "normal forms are left-greedy and preserve length and image"};
  SplitMix64 rng(opt.seed ^ 0x6A25u);
  for (std::size_t n = 0; n < opt.samples; ++n) {
    Word raw = random_word(rng, datum.rank, opt.max_word_len);
    BraidWord word(raw.letters);
    NormalForm nf = braid_normal_form(datum, word);
    std::size_t total = 0;
    for (const WeylElt& factor : nf.factors) total += static_cast<std::size_t>(factor.len);
    ++r.cases;
    bool ok = is_left_greedy(datum, nf) && total == word.size() &&
              word_to_element(datum, Word(to_braid_word(datum, nf).letters)) ==
                  word_to_element(datum, raw) &&
              braid_equal(datum, word, to_braid_word(datum, nf));
    if (!ok) {
      r.passed = false;
      r.counterexample = "word " + letters_str(word.letters);
      return r;
    }
  }
  return r;
}

CheckResult check_word_collapse(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "demazure_word = demazure_elt after demazure_product"};
  const auto box = weight_box(datum.rank, effective_radius(datum, opt));
  SplitMix64 rng(opt.seed ^ 0xC011u);
  for (std::size_t n = 0; n < opt.samples; ++n) {
    Word word = random_word(rng, datum.rank, opt.max_word_len);
    WeylElt folded = demazure_product(datum, word);
    for (const Weight& lambda : box) {
      LaurentChar m = LaurentChar::monomial(lambda);
      ++r.cases;
      if (demazure_word(datum, word, m) != demazure_elt(datum, folded, m)) {
        r.passed = false;
        r.counterexample = "word " + letters_str(word.letters) + " lambda=" + weight_str(lambda);
        return r;
      }
    }
  }
  return r;
}

CheckResult check_expr_collapse(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "Dem-atom composites collapse to orbit_class of the fold"};
  const int radius = effective_radius(datum, opt);
  SplitMix64 rng(opt.seed ^ 0xE849u);
  std::size_t rounds = std::max<std::size_t>(1, opt.samples / 10);
  for (std::size_t n = 0; n < rounds; ++n) {
    Word word = random_word(rng, datum.rank, opt.max_word_len);
    OpExpr chain;
    for (int i : word.letters) chain.atoms.push_back(DemAtom{i});
    ++r.cases;
    if (!op_equal_sampled(datum, chain, orbit_class(datum, demazure_product(datum, word)),
                          radius)) {
      r.passed = false;
      r.counterexample = "word " + letters_str(word.letters);
      return r;
    }
  }
  return r;
}

CheckResult check_mult_collapse(const RootDatum& datum, const HarnessOptions& opt) {
  CheckResult r{.identity = "Mult(c) Mult(d) = Mult(cd) and the unit is neutral"};
  const int radius = effective_radius(datum, opt);
  SplitMix64 rng(opt.seed ^ 0x3B1Du);
  std::size_t rounds = std::max<std::size_t>(1, opt.samples / 10);
  for (std::size_t n = 0; n < rounds; ++n) {
    LaurentChar c = random_char(rng, datum.rank);
    LaurentChar d = random_char(rng, datum.rank);
    OpExpr unit = orbit_class(datum, identity_element(datum));
    OpExpr chain = op_compose(mult_op(c), mult_op(d));
    ++r.cases;
    bool ok = op_equal_sampled(datum, chain, mult_op(char_mul(c, d)), radius) &&
              op_equal_sampled(datum, op_compose(unit, chain), chain, radius) &&
              op_equal_sampled(datum, op_compose(chain, unit), chain, radius);
    if (!ok) {
      r.passed = false;
      r.counterexample = "sample " + std::to_string(n);
      return r;
    }
  }
  return r;
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "coproj") return Suite::Coprojector;
  if (name == "braid") return Suite::BraidAction;
  if (name == "words") return Suite::ReducedWords;
  if (name == "descent") return Suite::Descent;
  if (name == "garside") return Suite::Garside;
  if (name == "collapse") return Suite::Collapse;
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::Coprojector: return "coproj";
    case Suite::BraidAction: return "braid";
    case Suite::ReducedWords: return "words";
    case Suite::Descent: return "descent";
    case Suite::Garside: return "garside";
    case Suite::Collapse: return "collapse";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::Coprojector, Suite::BraidAction, Suite::ReducedWords,
          Suite::Descent,     Suite::Garside,     Suite::Collapse};
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

SuiteReport run_suite(const RootDatum& datum, Suite suite, const HarnessOptions& options) {
  SuiteReport report;
  report.suite = suite_name(suite);
  switch (suite) {
    case Suite::Coprojector:
      report.checks.push_back(check_coprojector(datum, options));
      report.checks.push_back(check_two_routes(datum, options));
      break;
    case Suite::BraidAction:
      report.checks.push_back(check_braid_action(datum, options));
      report.checks.push_back(check_orbit_collapse(datum, options));
      break;
    case Suite::ReducedWords:
      report.checks.push_back(check_reduced_words(datum, options));
      break;
    case Suite::Descent:
      report.checks.push_back(check_descent_symmetrized(datum, options));
      report.checks.push_back(check_descent_predicates(datum, options));
      break;
    case Suite::Garside:
      report.checks.push_back(check_garside_word_problem(datum, options));
      report.checks.push_back(check_garside_form(datum, options));
      break;
    case Suite::Collapse:
      report.checks.push_back(check_word_collapse(datum, options));
      report.checks.push_back(check_expr_collapse(datum, options));
      report.checks.push_back(check_mult_collapse(datum, options));
      break;
  }
  return report;
}

Word random_word(SplitMix64& rng, int rank, int max_len) {
  Word word;
  std::size_t len = rng.below(static_cast<std::uint64_t>(max_len) + 1);
  word.letters.reserve(len);
  for (std::size_t k = 0; k < len; ++k)
    word.letters.push_back(1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(rank))));
  return word;
}

LaurentChar random_char(SplitMix64& rng, int rank) {
  LaurentChar f(rank);
  std::size_t terms = 1 + rng.below(6);
  for (std::size_t t = 0; t < terms; ++t) {
    Weight w = Weight::zero(rank);
    for (int k = 0; k < rank; ++k)
      w.coords[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(rng.below(7)) - 3;
    std::int64_t c = static_cast<std::int64_t>(rng.below(11)) - 5;
    if (c == 0) c = 1;
    // Repeated weights would accumulate past the documented coefficient
    // range, so later draws at an occupied weight are dropped.
    if (f.coeff(w) == 0) f.add_term(w, c);
  }
  return f;
}

std::vector<BraidWord> braid_rewrite_class(const RootDatum& datum, const BraidWord& word) {
  auto alternating = [](int i, int j, int m) {
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) out[static_cast<std::size_t>(k)] = (k % 2 == 0) ? i : j;
    return out;
  };

  std::set<BraidWord> seen{word};
  std::deque<BraidWord> queue{word};
  while (!queue.empty()) {
    BraidWord w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t p = 0; p < w.size(); ++p) {
      int i = w.letters[p];
      for (int j = 1; j <= datum.rank; ++j) {
        if (j == i) continue;
        int m = datum.coxeter_order(i, j);
        if (p + static_cast<std::size_t>(m) > w.size()) continue;
        if (w.letters[p] != i) continue;
        std::vector<int> lhs = alternating(i, j, m);
        if (!std::equal(lhs.begin(), lhs.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(p)))
          continue;
        BraidWord u = w;
        std::vector<int> rhs = alternating(j, i, m);
        std::copy(rhs.begin(), rhs.end(), u.letters.begin() + static_cast<std::ptrdiff_t>(p));
        if (seen.insert(u).second) queue.push_back(std::move(u));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace demazure
