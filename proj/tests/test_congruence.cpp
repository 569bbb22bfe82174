#include <gtest/gtest.h>

#include "oddgroup/congruence.hpp"
#include "oddgroup/context.hpp"
#include "support.hpp"

using namespace testsupport;

TEST(Admissible, ZeroWholeAndMixedPairs) {
  const Ring R = zmod(8);
  EXPECT_TRUE(admissible_validate(Ideal::zero(R), Ideal::zero(R)));
  EXPECT_TRUE(admissible_validate(Ideal::whole(R), Ideal::whole(R)));
  const Ideal four = Ideal::generated(R, {R.elem(4)}, false);
  const Ideal two = Ideal::generated(R, {R.elem(2)}, false);
  EXPECT_TRUE(admissible_validate(four, two));
  EXPECT_FALSE(admissible_validate(Ideal::zero(R), two));
  EXPECT_FALSE(admissible_validate(two, four));
}

TEST(OrthoLevel, IdentityHasZeroLevel) {
  const OrthoGroup g(zmod(8), 3);
  const AdmissiblePair lv = level_of_ortho(g, g.identity());
  EXPECT_EQ(lv.I.members.size(), 1u);
  EXPECT_EQ(lv.J.members.size(), 1u);
}

TEST(OrthoLevel, ShortRootLevelContainsItsParameter) {
  const Ring R = zmod(8);
  const OrthoGroup g(R, 3);
  for (const auto& x : R.elements()) {
    const ThetaMatrix m = g.t_short(1, 2, x);
    const AdmissiblePair lv = level_of_ortho(g, m);
    EXPECT_TRUE(lv.I.contains(x));
    EXPECT_TRUE(admissible_validate(lv.I, lv.J));
    EXPECT_TRUE(co_member(g, m, lv));
    EXPECT_TRUE(o_principal_member(g, m, lv));
    EXPECT_TRUE(is_level_elementary(lv, g.short_root(1, 2, x)));
  }
}

TEST(OrthoLevel, RandomProductsAreInTheirLevel) {
  const Ring R = zmod(8);
  const OrthoGroup g(R, 3);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const ThetaMatrix s = g.evaluate(g.random_word(rng, 1 + t % 6));
    const AdmissiblePair lv = level_of_ortho(g, s);
    EXPECT_TRUE(admissible_validate(lv.I, lv.J));
    EXPECT_TRUE(co_member(g, s, lv));
  }
}

TEST(OrthoLevel, ZeroLevelRejectsNontrivialElements) {
  const Ring R = zmod(5);
  const OrthoGroup g(R, 3);
  const AdmissiblePair zero{Ideal::zero(R), Ideal::zero(R)};
  EXPECT_FALSE(o_principal_member(g, g.t_short(1, 2, R.one()), zero));
  EXPECT_FALSE(is_level_elementary(zero, g.short_root(1, 2, R.one())));
  EXPECT_TRUE(is_level_elementary(zero, g.short_root(1, 2, R.zero())));
}

TEST(OrthoLevel, ExtraRootsNeedTheSecondIdeal) {
  const Ring R = zmod(8);
  const OrthoGroup g(R, 3);
  const AdmissiblePair lv{Ideal::generated(R, {R.elem(4)}, false), Ideal::generated(R, {R.elem(2)}, false)};
  EXPECT_TRUE(is_level_elementary(lv, g.extra_root(1, R.elem(2))));
  EXPECT_FALSE(is_level_elementary(lv, g.extra_root(1, R.elem(1))));
  EXPECT_FALSE(is_level_elementary(lv, g.short_root(1, 2, R.elem(2))));
  EXPECT_TRUE(co_member(g, g.t_extra(1, R.elem(2)), lv));
}

TEST(UnitaryLevel, IdentityAndRandomProducts) {
  for (const char* name : {"unitary-z3max", "unitary-q3min"}) {
    const GroupContext ctx = standard_group(name);
    const UnitaryGroup& g = *ctx.unitary;
    const UnitaryLevel zero = level_of_unitary(g, g.identity());
    EXPECT_EQ(zero.I.members.size(), 1u);
    EXPECT_TRUE(u_principal_member(g, g.identity(), zero.max_form_ideal()));
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
      const ThetaMatrix s = g.evaluate(g.random_word(rng, 1 + t % 6));
      const UnitaryLevel lv = level_of_unitary(g, s);
      EXPECT_TRUE(lv.I.involution_invariant());
      EXPECT_TRUE(cu_member_max(g, s, lv)) << cu_member_max(g, s, lv).why;
    }
  }
}

TEST(UnitaryLevel, ShortRootsAreElementaryAtTheirLevel) {
  const GroupContext ctx = standard_group("unitary-q3min");
  const UnitaryGroup& g = *ctx.unitary;
  for (const auto& x : g.ring().elements()) {
    const UnitaryLevel lv = level_of_unitary(g, g.u_t_short(1, 2, x));
    EXPECT_TRUE(lv.I.contains(x));
    EXPECT_TRUE(is_level_elementary(lv.max_form_ideal(), g.short_root(1, 2, x)));
    EXPECT_TRUE(u_principal_member(g, g.u_t_short(1, 2, x), lv.max_form_ideal()));
  }
}

TEST(UnitaryLevel, ZeroLevelRejectsNontrivialElements) {
  const GroupContext ctx = standard_group("unitary-z3max");
  const UnitaryGroup& g = *ctx.unitary;
  const Ring& R = g.ring();
  const UnitaryLevel zero = unitary_level(Ideal::zero(R), g.delta());
  EXPECT_FALSE(cu_member_max(g, g.u_t_short(1, 2, R.one()), zero));
  EXPECT_FALSE(is_level_elementary(zero.max_form_ideal(), g.short_root(1, 2, R.one())));
}
