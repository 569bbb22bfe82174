#pragma once

#include <memory>
#include <optional>

#include "oddgroup/decomp_engine.hpp"
#include "oddgroup/unitary_group.hpp"

namespace oddgroup {

struct DecompStats {
  // Factor count of the inner T_k(q(sigma_{*1})) product of kind vii, or -1.
  long vii_internal = -1;
};

// Coefficients expressing conj(zeta_23) zeta_22 - s_23 through A = s23-bar s21,
// B = s23-bar s2,-1, C = s23-bar s22 and their conjugates.
struct ResidueCoefficients {
  RingElem c_a;
  RingElem c_b_bar;
  RingElem c_a_bar;
  RingElem c_b;
  RingElem c_c_bar;
  RingElem residue;
  // c_a A + c_b_bar B-bar + c_a_bar A-bar + c_b B + c_c_bar C-bar.
  RingElem combination;
};

// Elementary sigma-conjugate products in U_{2n+1}(R, Delta).
class UnitaryDecomposer : public DecompEngine {
 public:
  explicit UnitaryDecomposer(const UnitaryGroup& group);

  FactorList k1(const SigmaView& s, IndexPair ab, IndexPair kl, const RingElem& y) const override;
  std::pair<IndexPair, RingElem> mirror(IndexPair kl, const RingElem& z) const override;

  // T_kl(x s23-bar s21), T_kl(x s23-bar s2,-1) and T_kl(x s23-bar s22): 16, 16, 32 factors per view factor.
  FactorList step1(const SigmaView& s, IndexPair kl, const RingElem& x) const;
  FactorList step2(const SigmaView& s, IndexPair kl, const RingElem& x) const;
  FactorList step3(const SigmaView& s, IndexPair kl, const RingElem& x) const;
  // zeta = P sigma^{-1} P^{-1} (PT) sigma (PT)^{-1} with P = P13 P21, T = T12(-s23-bar).
  SigmaView zeta_view(const SigmaView& s) const;
  ResidueCoefficients residue_coefficients(const SigmaView& s, const SigmaView& zeta) const;
  // T_kl(y s23) in 160 factors.
  FactorList kind1_norm(const SigmaView& s, IndexPair kl, const RingElem& y) const;

  Atoms atoms(int kind, int i, int j, const RingElem& y, const std::optional<RingElem>& a) const;
  RingElem complete(const RingElem& a, int sign) const;

  // T_k(0, X - conj-type term) as [T_kb(X), T_{b,-k}(1)].
  FactorList s5(const SigmaView& s, const Atoms& at, int k) const;
  // T_k(h o X) for eps(k) = -1.
  FactorList se2(const SigmaView& s, const Atoms& at, int k, const HeisElem& h) const;
  FactorList q_step1(const SigmaView& s, const RingElem& x) const;
  FactorList q_step2(const SigmaView& s, int k, const RingElem& w) const;
  FactorList k7core(const SigmaView& s, int j, int k, const RingElem& w, bool correct) const;
  FactorList k7(const SigmaView& s, int j, int k) const;
  FactorList k8(const SigmaView& s, int j, int k, const RingElem& a) const;

  DecompStats& stats() const { return stats_; }

 private:
  ElemGen T(int i, int j, const RingElem& x) const { return ug_.short_root(i, j, ring().bind(x)); }
  ElemGen E(int i, const RingElem& x, const RingElem& y) const {
    return ug_.extra_root(i, ring().bind(x), ring().bind(y));
  }
  RingElem cbar(const RingElem& x) const { return ring().involution(x); }

  const UnitaryGroup& ug_;
  mutable DecompStats stats_;
};

// Kinds 1..8. Kinds iii, iv and viii take a in J(Delta).
Certificate decompose_unitary(const std::shared_ptr<const UnitaryGroup>& group, const ThetaMatrix& sigma, int kind,
                              CertIndices idx, const std::optional<RingElem>& a, DecompStats* stats = nullptr);

}  // namespace oddgroup
