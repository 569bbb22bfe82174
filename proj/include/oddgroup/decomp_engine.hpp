#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "oddgroup/certificate.hpp"

namespace oddgroup {

using IndexPair = std::pair<int, int>;

// coef * (conj sigma conj^{-1})_{ab}, or coef * conj((...)_{ab}) when cj is set.
struct Atom {
  WordPtr conj;
  int a = 0;
  int b = 0;
  RingElem coef;
  bool cj = false;
};
using Atoms = std::vector<Atom>;

Atoms scaled(const Atoms& atoms, const RingElem& factor);
Atoms concat(Atoms a, const Atoms& b);

// Fills the auxiliary index of kinds ii, iii, vi (j) and iv (i) when left at zero.
CertIndices with_default_aux(const ClassicalGroup& group, int kind, CertIndices idx);

// Machinery shared by both decompositions: monomial relocations, atoms and linear
// combinations built from a kind-(i) routine supplied by the subclass.
class DecompEngine {
 public:
  explicit DecompEngine(const ClassicalGroup& group);
  virtual ~DecompEngine() = default;

  const ClassicalGroup& group() const { return group_; }
  const Ring& ring() const { return group_.ring(); }

  // Monomial word W with W T_src(x) W^{-1} = T_dst(x) for every x.
  WordPtr relocation(IndexPair src, IndexPair dst) const;
  // W T_i(x, y) W^{-1} = T_k(x, lambda^{(eps(i) - eps(k))/2} y).
  WordPtr ext_reloc(int i, int k) const;

  struct Pivot {
    WordPtr word;
    int hop = 0;
  };
  // V with V e_j = e_1: empty, P_{1j}, or P_{12} P_{2,-1}; hop is the first intermediate index.
  Pivot pivot(int j) const;

  // First index of Theta_hb outside {k, -k}, optionally restricted to a sign.
  int aux_index(int k, int sign = 0) const;

  WordPtr word(std::initializer_list<ElemGen> gens) const;
  WordPtr word_inverse(const WordPtr& w) const;
  WordPtr concat_words(const WordPtr& a, const WordPtr& b) const;
  WordPtr p_word(int i, int j) const;
  Atom atom(IndexPair ab, const RingElem& coef, WordPtr conj = nullptr, bool cj = false) const;

  RingElem atom_value(const SigmaView& s, const Atoms& atoms) const;
  // T_kl(value of atoms); identical atoms are merged, zero coefficients are kept.
  FactorList lin(const SigmaView& s, const Atoms& atoms, IndexPair kl) const;
  // T_kl(y s_ab).
  virtual FactorList k1(const SigmaView& s, IndexPair ab, IndexPair kl, const RingElem& y) const = 0;
  // (kl', z') with T_kl(z v-bar) = T_kl'(z' v).
  virtual std::pair<IndexPair, RingElem> mirror(IndexPair kl, const RingElem& z) const;

  // Root sigma used by expect_product; set before building a certificate.
  void set_root(const ThetaMatrix& sigma) { root_ = sigma; }
  // Throws InternalCheckFailure unless the factors multiply to expected.
  void expect_product(const FactorList& factors, const ThetaMatrix& expected, const char* step) const;
  void expect(bool ok, const char* step) const;

 protected:
  RingElem inv_unit(const RingElem& x) const;

  const ClassicalGroup& group_;
  ThetaMatrix root_;
  mutable std::map<std::tuple<int, int, int, int>, WordPtr> reloc_cache_;
};

}  // namespace oddgroup
