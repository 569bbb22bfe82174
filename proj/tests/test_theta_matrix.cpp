#include <gtest/gtest.h>

#include "oddgroup/ortho_group.hpp"
#include "support.hpp"

using namespace testsupport;

TEST(ThetaLayout, PositionsFollowOneToNThenZeroThenNegatives) {
  EXPECT_EQ(position(3, 1), 0);
  EXPECT_EQ(position(3, 3), 2);
  EXPECT_EQ(position(3, 0), 3);
  EXPECT_EQ(position(3, -3), 4);
  EXPECT_EQ(position(3, -1), 6);
  for (int p = 0; p < 7; ++p) EXPECT_EQ(position(3, index_at(3, p)), p);
}

TEST(MatMul, IdentityIsNeutral) {
  const Ring R = zmod(5);
  std::mt19937_64 rng(3);
  ThetaMatrix a = zero_matrix(R, 3);
  for (Eigen::Index p = 0; p < a.size(); ++p) a(p) = R.random(rng);
  EXPECT_EQ(mat_mul<RingElem>(a, identity(R, 3)), a);
}

TEST(MatMul, BasisMatricesCompose) {
  const Ring R = zmod(5);
  EXPECT_EQ(mat_mul<RingElem>(basis_matrix(R, 3, 1, 2), basis_matrix(R, 3, 2, 3)), basis_matrix(R, 3, 1, 3));
}

TEST(MatMul, AgreesWithSchoolbookProduct) {
  const Ring R = zmod(5);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    ThetaMatrix a = zero_matrix(R, 3), b = zero_matrix(R, 3);
    for (Eigen::Index p = 0; p < a.size(); ++p) {
      a(p) = R.random(rng);
      b(p) = R.random(rng);
    }
    EXPECT_EQ(mat_mul<RingElem>(a, b), naive_product(a, b));
  }
}

TEST(MatInv, IdentityInvertsToItself) {
  EXPECT_EQ(mat_inv_or_throw(identity(zmod(8), 3)), identity(zmod(8), 3));
}

TEST(MatInv, ShortRootInverseNegatesParameter) {
  const Ring R = zmod(8);
  const OrthoGroup g(R, 3);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 8; ++t) {
    const RingElem x = R.random(rng);
    EXPECT_EQ(mat_inv_or_throw(g.t_short(1, 2, x)), g.t_short(1, 2, -x));
  }
}

TEST(MatInv, RandomProductsOverZeroDivisorRing) {
  const Ring R = zmod(8);
  const OrthoGroup g(R, 3);
  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const ThetaMatrix m = g.evaluate(g.random_word(rng, 10));
    EXPECT_TRUE(is_identity(naive_product(mat_inv_or_throw(m), m)));
  }
}

TEST(MatInv, SingularMatrixHasNoInverse) {
  const Ring R = zmod(8);
  ThetaMatrix m = identity(R, 3);
  at(m, 1, 1) = R.elem(2);
  EXPECT_FALSE(mat_inv(m).has_value());
  EXPECT_THROW(mat_inv_or_throw(m), NotInvertible);
}

TEST(Determinant, MatchesCofactorExpansionOnSmallBlocks) {
  const Ring R = zmod(9);
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    ThetaMatrixT<RingElem> a(3, 3);
    for (Eigen::Index p = 0; p < a.size(); ++p) a(p) = R.random(rng);
    const RingElem cof = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    EXPECT_EQ(R.bind(determinant(a)), cof);
  }
}

TEST(Commutator, WithIdentityIsTrivial) {
  const Ring R = zmod(5);
  const OrthoGroup g(R, 3);
  std::mt19937_64 rng(2);
  const ThetaMatrix a = g.evaluate(g.random_word(rng, 6));
  EXPECT_TRUE(is_identity(commutator(a, g.identity())));
}

TEST(Commutator, ConjugatedProductIdentity) {
  const Ring R = zmod(8);
  const OrthoGroup g(R, 3);
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const ThetaMatrix a = g.evaluate(g.random_word(rng, 5));
    const ThetaMatrix b = g.evaluate(g.random_word(rng, 5));
    const ThetaMatrix c = g.evaluate(g.random_word(rng, 5));
    const ThetaMatrix b_inv = mat_inv_or_throw(b);
    EXPECT_EQ(conjugate(b_inv, commutator(a, mat_mul<RingElem>(b, c))),
              mat_mul<RingElem>(commutator(b_inv, a), commutator(a, c)));
  }
}

TEST(Commutator, ShortRootsChain) {
  const Ring R = zmod(5);
  const OrthoGroup g(R, 3);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      EXPECT_EQ(commutator(g.t_short(1, 2, R.elem(x)), g.t_short(2, 3, R.elem(y))), g.t_short(1, 3, R.elem(x * y)));
}
