#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "demazure/weyl.hpp"

// Character ring Z[weight lattice]: finite formal sums of monomials e^lambda
// with arbitrary-precision integer coefficients.  Terms are kept in a map
// ordered lexicographically by coordinates, so iteration (and hence
// serialization) is deterministic.  Invariant: no stored coefficient is zero.

namespace demazure {

using Int = boost::multiprecision::cpp_int;

class LaurentChar {
 public:
  LaurentChar() = default;
  explicit LaurentChar(int rank) : rank_(rank) {}

  static LaurentChar zero(int rank) { return LaurentChar(rank); }
  static LaurentChar one(int rank) { return monomial(Weight::zero(rank)); }
  static LaurentChar monomial(const Weight& w, const Int& coeff = 1);

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Weight, Int>& terms() const { return terms_; }
  Int coeff(const Weight& w) const;

  // Accumulates c * e^w, erasing the term if the sum cancels.
  void add_term(const Weight& w, const Int& c);

  friend bool operator==(const LaurentChar&, const LaurentChar&) = default;

 private:
  int rank_ = 0;
  std::map<Weight, Int> terms_;
};

LaurentChar char_add(const LaurentChar& f, const LaurentChar& g);
LaurentChar char_sub(const LaurentChar& f, const LaurentChar& g);
LaurentChar char_mul(const LaurentChar& f, const LaurentChar& g);
LaurentChar char_act(const WeylElt& w, const LaurentChar& f);

inline LaurentChar operator+(const LaurentChar& f, const LaurentChar& g) { return char_add(f, g); }
inline LaurentChar operator-(const LaurentChar& f, const LaurentChar& g) { return char_sub(f, g); }
inline LaurentChar operator*(const LaurentChar& f, const LaurentChar& g) { return char_mul(f, g); }

// Exact division by 1 - e^{-alpha_i}.  Greedy cancellation: repeatedly peel
// the term whose pairing <., alpha_i^vee> is maximal.  Throws NotDivisible
// when a nonzero remainder cannot be part of any quotient.
LaurentChar exact_divide(const RootDatum& datum, const LaurentChar& f, int i);

// Same cancellation scheme against 1 - e^{-beta} for an arbitrary positive
// root beta; the pairing functional is <., beta^vee>.
LaurentChar exact_divide_by_positive_root(const RootDatum& datum, const LaurentChar& f,
                                          const RootDatum::PosRoot& beta);

// Sum of w.f over the full group; requires enumeration, so the usual bound
// applies.  Output is invariant by construction.
LaurentChar symmetrize(const RootDatum& datum, const LaurentChar& f,
                       std::size_t max_group = kDefaultGroupBound);

// True iff s_i.f == f for every generator; the simple reflections generate,
// so no enumeration is needed.
bool is_invariant(const RootDatum& datum, const LaurentChar& f);

// Sum of all coefficients, i.e. the evaluation at e^lambda -> 1.
Int dimension(const LaurentChar& f);

// All weights with every coordinate in [-radius, radius], in lexicographic
// order.  The shared sampling domain for exhaustive operator checks.
std::vector<Weight> weight_box(int rank, int radius);

}  // namespace demazure
