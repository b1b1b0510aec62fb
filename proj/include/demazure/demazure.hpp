#pragma once

#include <optional>

#include "demazure/charring.hpp"

// Demazure operators on the character ring, in the isobaric normalization
//
//     D_i f = (f - e^{-alpha_i} s_i.f) / (1 - e^{-alpha_i}),
//
// so D_i(1) = 1 and D_i D_i = D_i.  Compositions along reduced words depend
// only on the group element, which makes D_w well defined; the fixed points
// of the whole family are exactly the invariant characters ("descent"
// membership below).

namespace demazure {

// Closed form per monomial: with m = <lambda, alpha_i^vee>,
//   m >= 0:  sum_{k=0..m} e^{lambda - k alpha_i}
//   m = -1:  0
//   m <= -2: -sum_{k=1..-m-1} e^{lambda + k alpha_i}
LaurentChar demazure_simple(const RootDatum& datum, int i, const LaurentChar& f);

// Same operator through char_act and exact_divide; kept as an independent
// evaluation route for cross-checking.
LaurentChar demazure_simple_via_division(const RootDatum& datum, int i, const LaurentChar& f);

// D_w: demazure_simple composed along canonical_word(w), leftmost letter
// applied last.
LaurentChar demazure_elt(const RootDatum& datum, const WeylElt& w, const LaurentChar& f);

// Composition along an arbitrary word (not necessarily reduced), same
// convention.  Equals demazure_elt at the demazure_product of the word.
LaurentChar demazure_word(const RootDatum& datum, const Word& word, const LaurentChar& f);

// Membership in the decategorified descent class: D_i f = f for all i.
bool is_descent_member(const RootDatum& datum, const LaurentChar& f);

// Least i with D_i f != f, if any.
std::optional<int> descent_witness(const RootDatum& datum, const LaurentChar& f);

// Single-operator criterion: D_{w0} f = f.
bool descent_via_w0(const RootDatum& datum, const LaurentChar& f);

// Irreducible character for a dominant highest weight, computed from the
// alternating sum over the group divided by the factored denominator
// e^rho prod_{beta > 0} (1 - e^{-beta}).  Independent of the Demazure
// operators by construction.
LaurentChar weyl_character(const RootDatum& datum, const Weight& lambda,
                           std::size_t max_group = kDefaultGroupBound);

// Product formula prod_{beta > 0} <lambda + rho, beta^vee> / <rho, beta^vee>.
Int weyl_dimension(const RootDatum& datum, const Weight& lambda);

// The operator family w -> D_w packaged with its datum.
struct DescentDatum {
  RootDatum datum;

  explicit DescentDatum(RootDatum rd) : datum(std::move(rd)) {}
  LaurentChar apply(const WeylElt& w, const LaurentChar& f) const {
    return demazure_elt(datum, w, f);
  }
  LaurentChar apply_simple(int i, const LaurentChar& f) const {
    return demazure_simple(datum, i, f);
  }
};

struct DescentReport {
  bool passed = true;
  std::size_t coprojector_cases = 0;
  std::size_t braid_cases = 0;
  std::size_t word_cases = 0;
  std::string first_failure;  // empty iff passed
};

// Exhaustive check, on every monomial of the radius box, of the three
// structural identities behind the family: D_i idempotent, D_w1 D_w2 = D_w1w2
// for length-additive pairs, and independence of the reduced word.  Stops at
// the first counterexample.
DescentReport verify_descent_data(const RootDatum& datum, int radius,
                                  std::size_t max_group = kDefaultGroupBound);

}  // namespace demazure
