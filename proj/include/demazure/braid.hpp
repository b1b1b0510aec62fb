#pragma once

#include "demazure/weyl.hpp"

// Positive braid monoid of a Weyl group.  Elements enter as words in the
// Artin generators (same 1-based letters as Word); the complete invariant is
// the left-greedy normal form, whose factors are Weyl group elements (every
// element of a finite Weyl group is a Garside simple).

namespace demazure {

struct BraidWord {
  std::vector<int> letters;

  BraidWord() = default;
  explicit BraidWord(std::vector<int> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;
};

struct NormalForm {
  std::vector<WeylElt> factors;  // non-identity, left-greedy

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// 0-Hecke fold: x * s_i when that gains length, otherwise x.  Every reduced
// word of w folds to w, and the fold only depends on the braid class.
WeylElt demazure_product(const RootDatum& datum, const Word& word);
WeylElt demazure_product(const RootDatum& datum, const WeylElt& start, const Word& word);

// Left-greedy normalization: slide generators left across factor borders
// while some s satisfies len(x*s) > len(x) and len(s*y) < len(y), then drop
// identity factors.
NormalForm braid_normal_form(const RootDatum& datum, const BraidWord& word);

// Adjacent factors (x, y) admit no leftward slide.
bool is_left_greedy(const RootDatum& datum, const NormalForm& nf);

// Word problem: equality of normal forms.
bool braid_equal(const RootDatum& datum, const BraidWord& a, const BraidWord& b);

// Concatenation; the monoid product.
BraidWord braid_multiply(const BraidWord& a, const BraidWord& b);

// The generator T_w for an arbitrary group element, expanded along
// canonical_word(w).
BraidWord braid_generator(const RootDatum& datum, const WeylElt& w);

// Re-expansion of a normal form as a word (canonical words of the factors,
// concatenated).
BraidWord to_braid_word(const RootDatum& datum, const NormalForm& nf);

}  // namespace demazure
