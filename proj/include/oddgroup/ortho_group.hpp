#pragma once

#include <random>
#include <string>

#include "oddgroup/group.hpp"

namespace oddgroup {

// Q(u) = u_1 u_{-1} + ... + u_n u_{-n} + u_0^2.
RingElem quad_Q(const ThetaColumn& u);
// (u_{-1}, ..., u_{-n}, 2u_0, u_n, ..., u_1).
ThetaRow polarity(const ThetaColumn& u);

// O_{2n+1}(R) for a ring with trivial involution.
class OrthoGroup : public ClassicalGroup {
 public:
  OrthoGroup(Ring ring, int n);

  GroupKind kind() const override { return GroupKind::Ortho; }
  SparseDelta offdiag(const ElemGen& g) const override;
  ElemGen inverse(const ElemGen& g) const override;
  using ClassicalGroup::inverse;
  void check_generator(const ElemGen& g) const override;
  // Entry relations, then column conditions; why names the first failure.
  bool is_member(const ThetaMatrix& m, std::string* why = nullptr) const override;
  ElemGen random_generator(std::mt19937_64& rng) const override;

  ThetaMatrix t_short(int i, int j, const RingElem& x) const;
  ThetaMatrix t_extra(int i, const RingElem& x) const;
  // e + u e_{-1}^t - e_1 u~; rejects u_{-1} != 0 or Q(u) != 0.
  ThetaMatrix t_star(const ThetaColumn& u) const;
  // T_1(u_0) T_{2,-1}(u_2) ... T_{n,-1}(u_n) T_{-n,-1}(u_{-n}) ... T_{-2,-1}(u_{-2}).
  Word t_star_word(const ThetaColumn& u) const;
  ThetaMatrix p_perm(int i, int j) const;

 protected:
  std::optional<ElemGen> merge(const ElemGen& a, const ElemGen& b) const override;
};

// Checks the orthogonal relation table. Ring values run over all of R when
// exhaustive is set, otherwise `trials` random draws per index pattern. With
// inject_bad a deliberately false relation is appended as a negative control.
RelationReport relation_suite(const OrthoGroup& group, bool exhaustive, int trials,
                              std::mt19937_64& rng, bool inject_bad = false);

}  // namespace oddgroup
