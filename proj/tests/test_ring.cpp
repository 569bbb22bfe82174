#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

TEST(RingValidate, TrivialResidueRingIsValid) {
  EXPECT_NO_THROW(zmod(5));
}

TEST(RingValidate, LambdaWithoutInverseConjugateIsRejected) {
  RingSpec spec = Ring::parse_spec("zmod:5", "id");
  spec.lambda = {2, 0};
  EXPECT_THROW(Ring::validate(spec), InvalidInput);
}

TEST(RingValidate, GaussianTernaryRingSatisfiesLawsExhaustively) {
  const Ring R = q3();
  ASSERT_EQ(R.size(), 9u);
  for (const auto& x : R.elements()) {
    EXPECT_EQ(R.involution(R.involution(x)), x);
    for (const auto& y : R.elements()) {
      EXPECT_EQ(R.involution(x + y), R.involution(x) + R.involution(y));
      EXPECT_EQ(R.involution(x * y), R.involution(x) * R.involution(y));
    }
  }
  EXPECT_EQ(R.lambda() * R.involution(R.lambda()), R.one());
  EXPECT_EQ(R.mu(), R.involution(R.mu()) * R.lambda());
}

TEST(RingValidate, MuMustMatchItsTwistedConjugate) {
  RingSpec spec = Ring::parse_spec("quadext:5:2", "conj");
  spec.lambda = {2, 2};
  EXPECT_THROW(Ring::validate(spec), InvalidInput);
}

TEST(RingParse, RejectsUnknownDescriptions) {
  EXPECT_THROW(Ring::parse_spec("gf:4", "id"), InvalidInput);
  EXPECT_THROW(Ring::parse_spec("zmod:x", "id"), InvalidInput);
  EXPECT_THROW(Ring::parse_spec("zmod:5", "flip"), InvalidInput);
}

TEST(Involution, TrivialFixesEverything) {
  const Ring R = zmod(5);
  EXPECT_EQ(R.involution(R.elem(4)), R.elem(4));
}

TEST(Involution, ConjugationNegatesT) {
  const Ring R = q3();
  EXPECT_EQ(R.involution(R.elem(1, 2)), R.elem(1, 1));
}

TEST(Underbar, EqualsBarWhenLambdaIsOne) {
  const Ring R = q3();
  for (const auto& x : R.elements()) EXPECT_EQ(R.underbar(x), R.involution(x));
  EXPECT_EQ(R.underbar(R.one()), R.one());
}

TEST(Underbar, InvertsTheInvolution) {
  RingSpec spec = Ring::parse_spec("quadext:5:2", "conj");
  spec.lambda = {2, 2};
  for (const auto& mu : Ring::validate(Ring::parse_spec("quadext:5:2", "conj")).elements()) {
    spec.mu = {mu.a(), mu.b()};
    try {
      Ring::validate(spec);
      break;
    } catch (const InvalidInput&) {
    }
  }
  const Ring R = Ring::validate(spec);
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    const RingElem x = R.random(rng);
    EXPECT_EQ(R.underbar(R.involution(x)), x);
    EXPECT_EQ(R.involution(R.underbar(x)), x);
  }
}

TEST(UnitInverse, ResidueCases) {
  EXPECT_EQ(*zmod(5).unit_inverse(zmod(5).elem(2)), zmod(5).elem(3));
  EXPECT_FALSE(zmod(8).unit_inverse(zmod(8).elem(2)).has_value());
}

TEST(UnitInverse, AgreesWithScanOverEveryRing) {
  for (const Ring& R : {zmod(8), zmod(9), q3(), Ring::validate(Ring::parse_spec("quadext:4:3", "conj"))}) {
    for (const auto& x : R.elements()) {
      const auto fast = R.unit_inverse(x);
      const auto slow = scan_inverse(R, x);
      ASSERT_EQ(fast.has_value(), slow.has_value()) << R.description() << " " << x.a() << "+" << x.b() << "t";
      if (fast) EXPECT_EQ(*fast * x, R.one());
    }
  }
}

TEST(UnitInverse, OnePlusTOverGaussianTernary) {
  const Ring R = q3();
  const auto inv = R.unit_inverse(R.elem(1, 1));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * R.elem(1, 1), R.one());
}

TEST(LambdaPower, SmallExponents) {
  RingSpec spec = Ring::parse_spec("zmod:5", "id");
  spec.lambda = {4, 0};
  spec.mu = {0, 0};
  const Ring R = Ring::validate(spec);
  EXPECT_EQ(R.lambda_power(0), R.one());
  EXPECT_EQ(R.lambda_power(-1), R.involution(R.lambda()));
  EXPECT_EQ(R.lambda_power(1) * R.lambda_power(-1), R.one());
  const Ring one = zmod(7);
  for (int k = -3; k <= 3; ++k) EXPECT_EQ(one.lambda_power(k), one.one());
}

TEST(RingCodes, RoundTripEveryElement) {
  const Ring R = Ring::validate(Ring::parse_spec("quadext:4:3", "conj"));
  ASSERT_EQ(R.size(), 16u);
  for (std::size_t c = 0; c < R.size(); ++c) EXPECT_EQ(R.code(R.from_code(c)), c);
}

TEST(RingArithmetic, QuadraticProductMatchesDefinition) {
  const Ring R = Ring::validate(Ring::parse_spec("quadext:7:3", "conj"));
  for (const auto& x : R.elements())
    for (const auto& y : {R.elem(2, 5), R.elem(6, 1)}) {
      const auto p = x * y;
      EXPECT_EQ(p.a(), ((x.a() * y.a() + 3 * x.b() * y.b()) % 7 + 7) % 7);
      EXPECT_EQ(p.b(), ((x.a() * y.b() + x.b() * y.a()) % 7 + 7) % 7);
    }
}
