#include "demazure/demazure.hpp"

#include <algorithm>

#include "demazure/errors.hpp"

namespace demazure {

namespace {

void check_index(const RootDatum& datum, int i) {
  if (i < 1 || i > datum.rank)
    throw RankMismatch("generator index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(datum.rank));
}

void check_rank(const RootDatum& datum, const LaurentChar& f) {
  if (f.rank() != datum.rank)
    throw RankMismatch("character has rank " + std::to_string(f.rank()) + ", datum has rank " +
                       std::to_string(datum.rank));
}

std::string weight_str(const Weight& w) {
  std::string s = "[";
  for (int k = 0; k < w.rank(); ++k) {
    if (k) s += ",";
    s += std::to_string(w[k]);
  }
  return s + "]";
}

std::string word_str(const Word& word) {
  std::string s = "[";
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) s += " ";
    s += std::to_string(word.letters[k]);
  }
  return s + "]";
}

}  // namespace

LaurentChar demazure_simple(const RootDatum& datum, int i, const LaurentChar& f) {
  check_index(datum, i);
  check_rank(datum, f);
  const Weight alpha = datum.simple_root(i);
  LaurentChar out(datum.rank);
  for (const auto& [lambda, c] : f.terms()) {
    std::int64_t m = lambda[i - 1];
    if (m >= 0) {
      Weight w = lambda;
      for (std::int64_t k = 0; k <= m; ++k) {
        out.add_term(w, c);
        w = w - alpha;
      }
    } else if (m <= -2) {
      Weight w = lambda + alpha;
      for (std::int64_t k = 1; k <= -m - 1; ++k) {
        out.add_term(w, -c);
        w = w + alpha;
      }
    }
    // m == -1 contributes nothing.
  }
  return out;
}

LaurentChar demazure_simple_via_division(const RootDatum& datum, int i, const LaurentChar& f) {
  check_index(datum, i);
  check_rank(datum, f);
  const Weight alpha = datum.simple_root(i);
  LaurentChar shifted = char_mul(LaurentChar::monomial(-alpha),
                                 char_act(simple_reflection(datum, i), f));
  return exact_divide(datum, char_sub(f, shifted), i);
}

LaurentChar demazure_word(const RootDatum& datum, const Word& word, const LaurentChar& f) {
  LaurentChar out = f;
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
    out = demazure_simple(datum, *it, out);
  return out;
}

LaurentChar demazure_elt(const RootDatum& datum, const WeylElt& w, const LaurentChar& f) {
  return demazure_word(datum, canonical_word(datum, w), f);
}

std::optional<int> descent_witness(const RootDatum& datum, const LaurentChar& f) {
  check_rank(datum, f);
  for (int i = 1; i <= datum.rank; ++i)
    if (demazure_simple(datum, i, f) != f) return i;
  return std::nullopt;
}

bool is_descent_member(const RootDatum& datum, const LaurentChar& f) {
  return !descent_witness(datum, f).has_value();
}

bool descent_via_w0(const RootDatum& datum, const LaurentChar& f) {
  return demazure_elt(datum, longest_element(datum), f) == f;
}

LaurentChar weyl_character(const RootDatum& datum, const Weight& lambda, std::size_t max_group) {
  if (lambda.rank() != datum.rank)
    throw RankMismatch("weight has rank " + std::to_string(lambda.rank()) + ", datum has rank " +
                       std::to_string(datum.rank));
  for (int k = 0; k < datum.rank; ++k)
    if (lambda[k] < 0)
      throw NotDominant("weight " + weight_str(lambda) + " has a negative coordinate");

  const Weight rho(std::vector<std::int64_t>(static_cast<std::size_t>(datum.rank), 1));
  LaurentChar numerator(datum.rank);
  for (const WeylElt& w : enumerate_group(datum, max_group))
    numerator.add_term(apply(w, lambda + rho), (w.len % 2) ? Int(-1) : Int(1));

  LaurentChar f = char_mul(numerator, LaurentChar::monomial(-rho));
  for (const auto& beta : datum.pos_roots) f = exact_divide_by_positive_root(datum, f, beta);
  return f;
}

Int weyl_dimension(const RootDatum& datum, const Weight& lambda) {
  if (lambda.rank() != datum.rank)
    throw RankMismatch("weight has rank " + std::to_string(lambda.rank()) + ", datum has rank " +
                       std::to_string(datum.rank));
  for (int k = 0; k < datum.rank; ++k)
    if (lambda[k] < 0)
      throw NotDominant("weight " + weight_str(lambda) + " has a negative coordinate");

  Int num = 1, den = 1;
  for (const auto& beta : datum.pos_roots) {
    Int np = 0, dp = 0;
    for (int k = 0; k < datum.rank; ++k) {
      np += Int(beta.coroot_coords[static_cast<std::size_t>(k)]) * (lambda[k] + 1);
      dp += Int(beta.coroot_coords[static_cast<std::size_t>(k)]);
    }
    num *= np;
    den *= dp;
  }
  return num / den;
}

DescentReport verify_descent_data(const RootDatum& datum, int radius, std::size_t max_group) {
  DescentReport report;
  const std::vector<Weight> box = weight_box(datum.rank, radius);
  const std::vector<WeylElt> group = enumerate_group(datum, max_group);

  auto fail = [&](std::string why) {
    report.passed = false;
    report.first_failure = std::move(why);
  };

  for (int i = 1; i <= datum.rank && report.passed; ++i)
    for (const Weight& lambda : box) {
      LaurentChar once = demazure_simple(datum, i, LaurentChar::monomial(lambda));
      if (demazure_simple(datum, i, once) != once) {
        fail("D_" + std::to_string(i) + " not idempotent at e^" + weight_str(lambda));
        break;
      }
      ++report.coprojector_cases;
    }

  for (const WeylElt& w1 : group) {
    if (!report.passed) break;
    for (const WeylElt& w2 : group) {
      if (!report.passed) break;
      if (!lengths_add(datum, w1, w2)) continue;
      WeylElt w12 = multiply(datum, w1, w2);
      for (const Weight& lambda : box) {
        LaurentChar m = LaurentChar::monomial(lambda);
        if (demazure_elt(datum, w1, demazure_elt(datum, w2, m)) != demazure_elt(datum, w12, m)) {
          fail("D_w1 D_w2 != D_w1w2 for words " + word_str(canonical_word(datum, w1)) + ", " +
               word_str(canonical_word(datum, w2)) + " at e^" + weight_str(lambda));
          break;
        }
        ++report.braid_cases;
      }
    }
  }

  for (const WeylElt& w : group) {
    if (!report.passed) break;
    std::vector<Word> words = all_reduced_words(datum, w);
    for (std::size_t k = 1; k < words.size() && report.passed; ++k)
      for (const Weight& lambda : box) {
        LaurentChar m = LaurentChar::monomial(lambda);
        if (demazure_word(datum, words[k], m) != demazure_word(datum, words[0], m)) {
          fail("reduced words " + word_str(words[0]) + " and " + word_str(words[k]) +
               " disagree at e^" + weight_str(lambda));
          break;
        }
        ++report.word_cases;
      }
  }

  return report;
}

}  // namespace demazure
