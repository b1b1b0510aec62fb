#pragma once

#include <variant>

#include "demazure/demazure.hpp"

// Formal composites of the two operator species acting on the character
// ring: multiplication by a fixed character and the Demazure operators.
// Expressions compose by concatenation and are compared by sampled
// evaluation on monomial boxes (sound for refutation; radius is the
// caller's precision knob).

namespace demazure {

struct MultAtom {
  LaurentChar factor;
  friend bool operator==(const MultAtom&, const MultAtom&) = default;
};

struct DemAtom {
  int index = 0;
  friend bool operator==(const DemAtom&, const DemAtom&) = default;
};

using OpAtom = std::variant<MultAtom, DemAtom>;

struct OpExpr {
  std::vector<OpAtom> atoms;  // applied right to left
  friend bool operator==(const OpExpr&, const OpExpr&) = default;
};

OpExpr mult_op(LaurentChar factor);
OpExpr demazure_op(int i);

// The class of the orbit closure attached to w: Dem atoms along
// canonical_word(w).  The identity gives the empty (unit) expression.
OpExpr orbit_class(const RootDatum& datum, const WeylElt& w);

LaurentChar op_apply(const RootDatum& datum, const OpExpr& expr, const LaurentChar& f);

// a after b: op_apply(op_compose(a, b), f) == op_apply(a, op_apply(b, f)).
OpExpr op_compose(OpExpr a, const OpExpr& b);

// Agreement on every monomial of the radius box.
bool op_equal_sampled(const RootDatum& datum, const OpExpr& a, const OpExpr& b, int radius);

}  // namespace demazure
