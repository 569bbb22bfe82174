#include <gtest/gtest.h>

#include "oddgroup/unitary_decomp.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

ThetaMatrix multiply_out(const ClassicalGroup& g, const ThetaMatrix& sigma, const FactorList& factors) {
  const ThetaMatrix sigma_inv = mat_inv_or_throw(sigma);
  ThetaMatrix acc = g.identity();
  for (const auto& f : factors) {
    const ThetaMatrix c = g.evaluate(flatten(f.conj));
    acc = naive_product(acc, conjugate(c, f.exp > 0 ? sigma : sigma_inv));
  }
  return acc;
}

std::shared_ptr<const UnitaryGroup> z5max() {
  const Ring R = zmod(5);
  return std::make_shared<const UnitaryGroup>(R, 3, OddFormParam::maximal(R));
}

std::shared_ptr<const UnitaryGroup> q3min() {
  const Ring R = q3();
  return std::make_shared<const UnitaryGroup>(R, 3, OddFormParam::closure(R, {}));
}

}  // namespace

TEST(UnitaryDecompose, IdentityKindOne) {
  const auto g = q3min();
  const Certificate c = decompose_unitary(g, g->identity(), 1, {1, 2, 2, 3}, std::nullopt);
  EXPECT_TRUE(g->ring().bind(c.target.x).is_zero());
  EXPECT_TRUE(is_identity(multiply_out(*g, c.sigma, c.factors)));
}

TEST(UnitaryDecompose, ShortRootSigmaKindOne) {
  const auto g = z5max();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 5; ++t) {
    const RingElem x = g->ring().random(rng);
    const ThetaMatrix sigma = g->u_t_short(1, 3, x);
    const Certificate c = decompose_unitary(g, sigma, 1, {1, 3, 2, 3}, std::nullopt);
    EXPECT_LE(c.count(), 160);
    EXPECT_EQ(multiply_out(*g, sigma, c.factors), g->u_t_short(2, 3, x));
  }
}

TEST(UnitaryDecompose, LinearKindsAgainstIndependentProduct) {
  const GroupContext ctx = standard_group("unitary-q3min");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 3; ++t) {
    const ThetaMatrix sigma = ctx.group->evaluate(ctx.group->random_word(rng, 12));
    for (int kind = 1; kind <= 6; ++kind) {
      const Certificate c = decompose(ctx, sigma, kind, random_indices(*ctx.group, kind, rng), random_a(ctx, kind, rng));
      EXPECT_LE(c.count(), c.bound);
      EXPECT_EQ(multiply_out(*ctx.group, sigma, c.factors), ctx.group->matrix(c.target)) << kind;
    }
  }
}

TEST(UnitaryDecompose, ExtraKindsWithinBounds) {
  const auto g = q3min();
  std::mt19937_64 rng(7);
  const ThetaMatrix sigma = g->evaluate(g->random_word(rng, 12));
  DecompStats stats;
  const Certificate c7 = decompose_unitary(g, sigma, 7, {0, 2, -1, 0}, std::nullopt, &stats);
  EXPECT_LE(c7.count(), 10564);
  EXPECT_GE(stats.vii_internal, 0);
  EXPECT_LE(stats.vii_internal, 9604);
  EXPECT_TRUE(verify_certificate(c7).ok);
  const Certificate c8 = decompose_unitary(g, sigma, 8, {0, 2, 1, 0}, g->ring().zero());
  EXPECT_LE(c8.count(), 31212);
  EXPECT_TRUE(verify_certificate(c8).ok);
}

TEST(UnitaryDecompose, ParameterRules) {
  const auto g = q3min();
  EXPECT_THROW(decompose_unitary(g, g->identity(), 8, {0, 2, 1, 0}, std::nullopt), InvalidInput);
  EXPECT_THROW(decompose_unitary(g, g->identity(), 1, {1, 2, 2, 3}, g->ring().zero()), InvalidInput);
  const auto js = g->delta().first_components();
  for (const auto& x : g->ring().elements())
    if (!js.contains(x)) {
      EXPECT_THROW(decompose_unitary(g, g->identity(), 3, {1, 2, 2, 3}, x), InvalidInput);
      break;
    }
}

TEST(ResidueCoefficients, CombinationReproducesResidue) {
  for (const auto& g : {z5max(), q3min()}) {
    UnitaryDecomposer d(*g);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 30; ++t) {
      const ThetaMatrix sigma = g->evaluate(g->random_word(rng, 12));
      d.set_root(sigma);
      const SigmaView s = root_view(sigma);
      const ResidueCoefficients rc = d.residue_coefficients(s, d.zeta_view(s));
      EXPECT_EQ(rc.combination, rc.residue);
      auto e = [&](int p, int q) { return g->ring().bind(at(s.m, p, q)); };
      const RingElem A = g->ring().involution(e(2, 3)) * e(2, 1);
      const RingElem B = g->ring().involution(e(2, 3)) * e(2, -1);
      const RingElem C = g->ring().involution(e(2, 3)) * e(2, 2);
      const auto bar = [&](const RingElem& x) { return g->ring().involution(x); };
      EXPECT_EQ(rc.c_a * A + rc.c_b_bar * bar(B) + rc.c_a_bar * bar(A) + rc.c_b * B + rc.c_c_bar * bar(C), rc.residue);
    }
  }
}
