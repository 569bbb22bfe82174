#pragma once

#include <memory>

#include "oddgroup/decomp_engine.hpp"
#include "oddgroup/ortho_group.hpp"

namespace oddgroup {

// Elementary sigma-conjugate products in O_{2n+1}(R) for the eight target kinds.
class OrthoDecomposer : public DecompEngine {
 public:
  explicit OrthoDecomposer(const OrthoGroup& group);

  // T_kl(y s_ab) in 8 factors.
  FactorList k1(const SigmaView& s, IndexPair ab, IndexPair kl, const RingElem& y) const override;
  // Atoms whose value is y times the kind-(i..vi) entry expression.
  Atoms atoms(int kind, int i, int j, const RingElem& y) const;
  // T_k(X y) with X the atom value.
  FactorList extra_from(const SigmaView& s, const Atoms& atoms, int k, const RingElem& y) const;
  // T_k(x s_0j s_jj).
  FactorList step1(const SigmaView& s, int j, int k, const RingElem& x) const;
  // T_3(x s_01 s_11).
  FactorList step1_norm(const SigmaView& s, const RingElem& x) const;
  // T_k(s_0j).
  FactorList k7(const SigmaView& s, int j, int k) const;
  // T_k(s_00 - s_jj).
  FactorList k8(const SigmaView& s, int j, int k) const;

 private:
  const OrthoGroup& og_;
};

// Kinds 1..8; auxiliary indices default when zero. Throws InvalidInput for a
// non-member sigma or bad indices.
Certificate decompose_ortho(const std::shared_ptr<const OrthoGroup>& group, const ThetaMatrix& sigma, int kind,
                            CertIndices idx);

}  // namespace oddgroup
