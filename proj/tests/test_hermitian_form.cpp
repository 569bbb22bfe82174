#include <gtest/gtest.h>

#include "oddgroup/hermitian_form.hpp"
#include "oddgroup/selftest.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

// (x, y) with trace zero, found by scanning.
std::vector<HeisElem> kernel_of_trace(const Ring& R) {
  std::vector<HeisElem> out;
  for (const auto& x : R.elements())
    for (const auto& y : R.elements())
      if (trace(R, {x, y}).is_zero()) out.push_back({x, y});
  return out;
}

}  // namespace

TEST(Heisenberg, ZeroIsNeutral) {
  const Ring R = zmod(5);
  const HeisElem h{R.elem(3), R.elem(1)};
  EXPECT_EQ(heis_add(R, h, {R.zero(), R.zero()}), h);
}

TEST(Heisenberg, TwistedSumExample) {
  const Ring R = zmod(5);
  EXPECT_EQ(heis_add(R, {R.elem(1), R.elem(2)}, {R.elem(3), R.elem(4)}), (HeisElem{R.elem(4), R.elem(3)}));
}

TEST(Heisenberg, InverseCancels) {
  const Ring R = q3();
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const HeisElem h{R.random(rng), R.random(rng)};
    EXPECT_EQ(heis_add(R, h, heis_neg(R, h)), (HeisElem{R.zero(), R.zero()}));
  }
}

TEST(Trace, ZeroAndHomomorphism) {
  const Ring R = q3();
  EXPECT_TRUE(trace(R, {R.zero(), R.zero()}).is_zero());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    const HeisElem a{R.random(rng), R.random(rng)}, b{R.random(rng), R.random(rng)};
    const RingElem r = R.random(rng);
    EXPECT_EQ(trace(R, heis_add(R, a, b)), trace(R, a) + trace(R, b));
    EXPECT_EQ(trace(R, heis_scale(a, r)), R.involution(r) * trace(R, a) * r);
  }
}

TEST(FormParameter, MinimalSitsInsideMaximal) {
  const Ring R = q3();
  const auto dmin = OddFormParam::minimal(R);
  EXPECT_TRUE(dmin.contains({R.zero(), R.zero()}));
  for (const auto& h : dmin.elements()) EXPECT_TRUE(delta_bounds_member(R, h, DeltaKind::Max));
}

TEST(FormParameter, TrivialInvolutionMinimalIsZero) {
  const Ring R = zmod(5);
  EXPECT_EQ(OddFormParam::minimal(R).elements().size(), 1u);
}

TEST(FormParameter, ClosureOfNothingIsMinimal) {
  for (const Ring& R : {zmod(4), q3()})
    EXPECT_EQ(OddFormParam::closure(R, {}).elements(), OddFormParam::minimal(R).elements());
}

TEST(FormParameter, MaximalIsTheTraceKernel) {
  for (const Ring& R : {zmod(4), zmod(5), q3()}) {
    const auto kernel = kernel_of_trace(R);
    EXPECT_EQ(OddFormParam::maximal(R).elements(), kernel);
    EXPECT_EQ(OddFormParam::closure(R, kernel).elements(), kernel);
  }
}

TEST(FormParameter, ClosuresAreModules) {
  const Ring R = q3();
  std::mt19937_64 rng(9);
  const auto kernel = kernel_of_trace(R);
  for (int t = 0; t < 10; ++t) {
    const auto delta = OddFormParam::closure(R, {kernel[rng() % kernel.size()]});
    EXPECT_TRUE(heis_is_module(delta.base_set()));
    for (const auto& h : OddFormParam::minimal(R).elements()) EXPECT_TRUE(delta.contains(h));
  }
}

TEST(FormParameter, ClosureRejectsTraceNonzeroGenerators) {
  const Ring R = zmod(5);
  EXPECT_THROW(OddFormParam::closure(R, {{R.one(), R.zero()}}), InvalidInput);
}

TEST(FormParameter, MirrorStructure) {
  const Ring R = zmod(5);
  const auto d = OddFormParam::maximal(R);
  EXPECT_EQ(d.elements(-1), d.elements(1));
  const Ring Q = q3();
  const auto dq = OddFormParam::maximal(Q);
  EXPECT_EQ(dq.mirror().mirror().elements(), dq.elements());
  const HeisElem h{Q.elem(1, 1), Q.elem(2, 1)};
  EXPECT_EQ(dq.contains(h, -1), dq.contains({h.x, Q.involution(h.y)}));
}

TEST(FormIdeal, ZeroAndWholeIdeals) {
  const Ring R = q3();
  const auto delta = OddFormParam::maximal(R);
  const auto zero = form_ideal_derived(Ideal::zero(R), delta);
  EXPECT_TRUE(zero.omega_max.contains({R.zero(), R.zero()}));
  EXPECT_TRUE(zero.omega_min.contains({R.zero(), R.zero()}));
  const auto whole = form_ideal_derived(Ideal::whole(R), delta);
  for (const auto& h : delta.elements()) EXPECT_TRUE(whole.omega_max.contains(h));
  EXPECT_EQ(whole.omega_max.size(), delta.elements().size());
}

TEST(FormIdeal, FirstComponentsOfMaximalOverZ5) {
  const Ring R = zmod(5);
  EXPECT_EQ(OddFormParam::maximal(R).first_components().size(), 5u);
}

TEST(ScaleOfSum, SingleAndCancellingSums) {
  const Ring R = q3();
  for (const auto& h : OddFormParam::maximal(R).elements()) {
    const auto one = scale_sum_expand(R, h, {R.one()});
    EXPECT_EQ(one.lhs, h);
    EXPECT_EQ(one.rhs, h);
    const auto cancel = scale_sum_expand(R, h, {R.one(), -R.one()});
    EXPECT_EQ(cancel.lhs, (HeisElem{R.zero(), R.zero()}));
    EXPECT_EQ(cancel.rhs, cancel.lhs);
  }
}

TEST(ScaleOfSum, RandomLists) {
  const Ring R = q3();
  const auto hs = OddFormParam::maximal(R).elements();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    std::vector<RingElem> xs(1 + rng() % 5);
    for (auto& x : xs) x = R.random(rng);
    const auto sides = scale_sum_expand(R, hs[rng() % hs.size()], xs);
    EXPECT_EQ(sides.lhs, sides.rhs);
  }
}

TEST(HeisenbergSuite, ExhaustiveOverSmallRings) {
  std::mt19937_64 rng(17);
  for (const Ring& R : {zmod(2), zmod(4), q3()})
    for (const auto& d : {OddFormParam::minimal(R), OddFormParam::maximal(R)})
      for (const auto& o : heisenberg_suite(d, true, 20, rng))
        EXPECT_TRUE(o.passed()) << R.description() << " " << o.relation << ": " << o.counterexample;
}
