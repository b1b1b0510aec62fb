#include "demazure/heckecat.hpp"

namespace demazure {

OpExpr mult_op(LaurentChar factor) {
  OpExpr e;
  e.atoms.push_back(MultAtom{std::move(factor)});
  return e;
}

OpExpr demazure_op(int i) {
  OpExpr e;
  e.atoms.push_back(DemAtom{i});
  return e;
}

OpExpr orbit_class(const RootDatum& datum, const WeylElt& w) {
  OpExpr e;
  for (int i : canonical_word(datum, w).letters) e.atoms.push_back(DemAtom{i});
  return e;
}

LaurentChar op_apply(const RootDatum& datum, const OpExpr& expr, const LaurentChar& f) {
  LaurentChar out = f;
  for (auto it = expr.atoms.rbegin(); it != expr.atoms.rend(); ++it) {
    if (const auto* mult = std::get_if<MultAtom>(&*it))
      out = char_mul(mult->factor, out);
    else
      out = demazure_simple(datum, std::get<DemAtom>(*it).index, out);
  }
  return out;
}

OpExpr op_compose(OpExpr a, const OpExpr& b) {
  a.atoms.insert(a.atoms.end(), b.atoms.begin(), b.atoms.end());
  return a;
}

bool op_equal_sampled(const RootDatum& datum, const OpExpr& a, const OpExpr& b, int radius) {
  for (const Weight& lambda : weight_box(datum.rank, radius)) {
    LaurentChar m = LaurentChar::monomial(lambda);
    if (op_apply(datum, a, m) != op_apply(datum, b, m)) return false;
  }
  return true;
}

}  // namespace demazure
