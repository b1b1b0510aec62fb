#include "demazure/heckecat.hpp"

#include "demazure/errors.hpp"
#include "demazure/harness.hpp"
#include "doctest.h"

using namespace demazure;

namespace {

Weight wt(std::vector<std::int64_t> c) { return Weight(std::move(c)); }

LaurentChar mono(std::vector<std::int64_t> c) { return LaurentChar::monomial(wt(std::move(c))); }

}  // namespace

TEST_CASE("operator expression basics") {
  RootDatum a2 = build_root_datum("A2");

  OpExpr d1 = demazure_op(1);
  REQUIRE(d1.atoms.size() == 1);
  CHECK(std::holds_alternative<DemAtom>(d1.atoms[0]));
  CHECK(std::get<DemAtom>(d1.atoms[0]).index == 1);

  LaurentChar g = mono({1, 0});
  OpExpr mg = mult_op(g);
  REQUIRE(mg.atoms.size() == 1);
  CHECK(std::get<MultAtom>(mg.atoms[0]).factor == g);

  SplitMix64 rng(53);
  for (int n = 0; n < 10; ++n) {
    LaurentChar f = random_char(rng, 2);
    CHECK(op_apply(a2, d1, f) == demazure_simple(a2, 1, f));
    CHECK(op_apply(a2, mg, f) == char_mul(g, f));
    CHECK(op_apply(a2, OpExpr{}, f) == f);
  }
}

TEST_CASE("orbit_class matches demazure_elt") {
  RootDatum a2 = build_root_datum("A2");
  WeylElt w0 = longest_element(a2);

  OpExpr cls = orbit_class(a2, w0);
  REQUIRE(cls.atoms.size() == 3);
  CHECK(std::get<DemAtom>(cls.atoms[0]).index == 1);
  CHECK(std::get<DemAtom>(cls.atoms[1]).index == 2);
  CHECK(std::get<DemAtom>(cls.atoms[2]).index == 1);
  CHECK(orbit_class(a2, identity_element(a2)) == OpExpr{});

  SplitMix64 rng(59);
  for (const char* type : {"A2", "B2", "G2"}) {
    RootDatum rd = build_root_datum(type);
    for (const WeylElt& w : enumerate_group(rd)) {
      OpExpr e = orbit_class(rd, w);
      for (int n = 0; n < 5; ++n) {
        LaurentChar f = random_char(rng, rd.rank);
        CHECK(op_apply(rd, e, f) == demazure_elt(rd, w, f));
      }
    }
  }
}

TEST_CASE("composition is concatenation, applied right to left") {
  RootDatum b2 = build_root_datum("B2");
  SplitMix64 rng(61);

  auto random_expr = [&](int len) {
    OpExpr e;
    for (int k = 0; k < len; ++k) {
      if (rng.below(2) == 0)
        e = op_compose(e, demazure_op(1 + static_cast<int>(rng.below(2))));
      else
        e = op_compose(e, mult_op(random_char(rng, 2)));
    }
    return e;
  };

  for (int n = 0; n < 20; ++n) {
    OpExpr a = random_expr(static_cast<int>(rng.below(4)));
    OpExpr b = random_expr(static_cast<int>(rng.below(4)));
    LaurentChar f = random_char(rng, 2);
    CHECK(op_apply(b2, op_compose(a, b), f) == op_apply(b2, a, op_apply(b2, b, f)));
    CHECK(op_compose(a, OpExpr{}) == a);
    CHECK(op_compose(OpExpr{}, a) == a);
  }
}

TEST_CASE("sampled operator equality") {
  RootDatum a2 = build_root_datum("A2");
  WeylElt w0 = longest_element(a2);
  OpExpr dw0 = orbit_class(a2, w0);

  // Projector collapse: the full orbit class absorbs itself and every D_i.
  CHECK(op_equal_sampled(a2, op_compose(dw0, dw0), dw0, 2));
  for (int i = 1; i <= 2; ++i) {
    OpExpr di = demazure_op(i);
    CHECK(op_equal_sampled(a2, op_compose(di, di), di, 2));
    CHECK(op_equal_sampled(a2, op_compose(di, dw0), dw0, 2));
    CHECK(op_equal_sampled(a2, op_compose(dw0, di), dw0, 2));
  }

  // Braid relation at the operator level.
  OpExpr lhs = op_compose(op_compose(demazure_op(1), demazure_op(2)), demazure_op(1));
  OpExpr rhs = op_compose(op_compose(demazure_op(2), demazure_op(1)), demazure_op(2));
  CHECK(op_equal_sampled(a2, lhs, rhs, 2));
  CHECK(op_equal_sampled(a2, lhs, dw0, 2));

  CHECK_FALSE(op_equal_sampled(a2, demazure_op(1), demazure_op(2), 1));
  CHECK_FALSE(op_equal_sampled(a2, demazure_op(1), OpExpr{}, 1));

  // Multiplication atoms compose multiplicatively.
  SplitMix64 rng(67);
  for (int n = 0; n < 10; ++n) {
    LaurentChar g = random_char(rng, 2), h = random_char(rng, 2);
    CHECK(op_equal_sampled(a2, op_compose(mult_op(g), mult_op(h)), mult_op(char_mul(g, h)), 1));
  }

  // Multiplication by an invariant slides past every Demazure operator.
  for (int n = 0; n < 5; ++n) {
    LaurentChar sym = symmetrize(a2, random_char(rng, 2));
    for (int i = 1; i <= 2; ++i)
      CHECK(op_equal_sampled(a2, op_compose(demazure_op(i), mult_op(sym)),
                             op_compose(mult_op(sym), demazure_op(i)), 2));
  }

  // Non-invariant factors do not slide in general.
  CHECK_FALSE(op_equal_sampled(a2, op_compose(demazure_op(1), mult_op(mono({1, 0}))),
                               op_compose(mult_op(mono({1, 0})), demazure_op(1)), 2));

  CHECK_THROWS_AS(op_apply(a2, demazure_op(5), LaurentChar::one(2)), RankMismatch);
}

TEST_CASE("orbit classes compose through the fold, all pairs") {
  RootDatum a2 = build_root_datum("A2");
  std::vector<WeylElt> group = enumerate_group(a2);
  for (const WeylElt& w1 : group)
    for (const WeylElt& w2 : group) {
      Word joined = canonical_word(a2, w1);
      for (int i : canonical_word(a2, w2).letters) joined.letters.push_back(i);
      WeylElt folded = demazure_product(a2, joined);
      CHECK(op_equal_sampled(a2, op_compose(orbit_class(a2, w1), orbit_class(a2, w2)),
                             orbit_class(a2, folded), 2));
      if (lengths_add(a2, w1, w2)) CHECK(folded == multiply(a2, w1, w2));
    }
}
