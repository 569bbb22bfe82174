#pragma once

#include <random>
#include <string>

#include "oddgroup/group.hpp"
#include "oddgroup/hermitian_form.hpp"

namespace oddgroup {

// b(u, v) = sum_{i>0} u_i-bar v_{-i} + u_0-bar mu v_0 + sum_{i<0} u_i-bar lambda v_{-i}.
RingElem form_b(const Ring& ring, const ThetaColumn& u, const ThetaColumn& v);
// q(u) = (u_0, sum_{i>0} u_i-bar u_{-i}).
HeisElem form_q(const Ring& ring, const ThetaColumn& u);
// (u_{-1}-bar lambda, ..., u_{-n}-bar lambda, u_0-bar mu, u_n-bar, ..., u_1-bar).
ThetaRow u_polarity(const Ring& ring, const ThetaColumn& u);

// U_{2n+1}(R, Delta).
class UnitaryGroup : public ClassicalGroup {
 public:
  UnitaryGroup(Ring ring, int n, OddFormParam delta);

  GroupKind kind() const override { return GroupKind::Unitary; }
  SparseDelta offdiag(const ElemGen& g) const override;
  ElemGen inverse(const ElemGen& g) const override;
  using ClassicalGroup::inverse;
  // Extra short roots need (x, y) in Delta^{-eps(i)}.
  void check_generator(const ElemGen& g) const override;
  // Entry relations plus column conditions, cross-checked against form preservation
  // on basis vectors; a disagreement is reported as non-membership.
  bool is_member(const ThetaMatrix& m, std::string* why = nullptr) const override;
  bool is_member_by_entries(const ThetaMatrix& m, std::string* why = nullptr) const;
  bool is_member_by_definition(const ThetaMatrix& m, std::string* why = nullptr) const;
  ElemGen random_generator(std::mt19937_64& rng) const override;

  const OddFormParam& delta() const { return delta_; }
  // lambda^k for k in {-1, 0, 1}.
  RingElem lp(int k) const;

  // Delta^{-eps(i)} membership.
  bool extra_parameter_ok(int i, const HeisElem& h) const;
  // Heisenberg operations of sign -eps(i).
  HeisElem extra_add(int i, const HeisElem& a, const HeisElem& b) const;
  HeisElem extra_neg(int i, const HeisElem& a) const;

  ThetaMatrix u_t_short(int i, int j, const RingElem& x) const;
  ThetaMatrix u_t_extra(int i, const HeisElem& h) const;
  // e + u e_{-1}^t - e_1 lambda-bar u~; rejects u_{-1} != 0 or q(u) outside Delta.
  ThetaMatrix u_t_star(const ThetaColumn& u) const;
  Word u_t_star_word(const ThetaColumn& u) const;
  ThetaMatrix u_p_perm(int i, int j) const;

  // q of column i of P_ij sigma P_ij^{-1} by the three-case formula.
  HeisElem q_permuted(const ThetaMatrix& sigma, int i, int j) const;

 protected:
  std::optional<ElemGen> merge(const ElemGen& a, const ElemGen& b) const override;

 private:
  OddFormParam delta_;
  RingElem lam_inv_;
};

RelationReport u_relation_suite(const UnitaryGroup& group, bool exhaustive, int trials,
                                std::mt19937_64& rng, bool inject_bad = false);

}  // namespace oddgroup
