#include "demazure/braid.hpp"

#include "demazure/errors.hpp"

namespace demazure {

namespace {

void check_letters(const RootDatum& datum, const std::vector<int>& letters) {
  for (int i : letters)
    if (i < 1 || i > datum.rank)
      throw RankMismatch("letter " + std::to_string(i) + " out of range 1.." +
                         std::to_string(datum.rank));
}

// Smallest s with len(x*s) > len(x) and len(s*y) < len(y), or 0.
int slide_letter(const RootDatum& datum, const WeylElt& x, const WeylElt& y) {
  for (int i = 1; i <= datum.rank; ++i) {
    WeylElt s = simple_reflection(datum, i);
    if (multiply(datum, x, s).len > x.len && multiply(datum, s, y).len < y.len) return i;
  }
  return 0;
}

}  // namespace

WeylElt demazure_product(const RootDatum& datum, const WeylElt& start, const Word& word) {
  check_letters(datum, word.letters);
  WeylElt x = start;
  for (int i : word.letters) {
    WeylElt xs = multiply(datum, x, simple_reflection(datum, i));
    if (xs.len > x.len) x = std::move(xs);
  }
  return x;
}

WeylElt demazure_product(const RootDatum& datum, const Word& word) {
  return demazure_product(datum, identity_element(datum), word);
}

NormalForm braid_normal_form(const RootDatum& datum, const BraidWord& word) {
  check_letters(datum, word.letters);
  NormalForm nf;
  nf.factors.reserve(word.size());
  for (int i : word.letters) nf.factors.push_back(simple_reflection(datum, i));

  // Each slide moves one unit of length left, so the pass loop terminates.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < nf.factors.size(); ++p) {
      WeylElt& x = nf.factors[p];
      WeylElt& y = nf.factors[p + 1];
      for (int i; (i = slide_letter(datum, x, y)) != 0;) {
        WeylElt s = simple_reflection(datum, i);
        x = multiply(datum, x, s);
        y = multiply(datum, s, y);
        changed = true;
      }
    }
    std::erase_if(nf.factors, [](const WeylElt& w) { return w.is_identity(); });
  }
  return nf;
}

bool is_left_greedy(const RootDatum& datum, const NormalForm& nf) {
  for (const WeylElt& w : nf.factors)
    if (w.is_identity()) return false;
  for (std::size_t p = 0; p + 1 < nf.factors.size(); ++p)
    if (slide_letter(datum, nf.factors[p], nf.factors[p + 1]) != 0) return false;
  return true;
}

bool braid_equal(const RootDatum& datum, const BraidWord& a, const BraidWord& b) {
  return braid_normal_form(datum, a) == braid_normal_form(datum, b);
}

BraidWord braid_multiply(const BraidWord& a, const BraidWord& b) {
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord braid_generator(const RootDatum& datum, const WeylElt& w) {
  return BraidWord(canonical_word(datum, w).letters);
}

BraidWord to_braid_word(const RootDatum& datum, const NormalForm& nf) {
  BraidWord out;
  for (const WeylElt& w : nf.factors) {
    Word letters = canonical_word(datum, w);
    out.letters.insert(out.letters.end(), letters.letters.begin(), letters.letters.end());
  }
  return out;
}

}  // namespace demazure
