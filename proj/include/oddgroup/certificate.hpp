#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oddgroup/group.hpp"

namespace oddgroup {

using WordPtr = std::shared_ptr<const Word>;

// Conjugator as a cons-list of word segments, outermost first. Tails are shared
// between factors, so building nested commutators costs O(1) per factor.
struct ChainNode;
using Chain = std::shared_ptr<const ChainNode>;
struct ChainNode {
  WordPtr segment;
  Chain next;
};

// One elementary sigma-conjugate: conj * sigma^exp * conj^{-1}.
struct Factor {
  Chain conj;
  int exp = 1;
};
using FactorList = std::vector<Factor>;

WordPtr make_word(Word w);
Chain prefixed(const WordPtr& segment, const Chain& chain);
Word flatten(const Chain& chain);

// ^g P, P^{-1}, [g, P] and [P, g] on factor lists.
FactorList conjugated(const WordPtr& g, const FactorList& p);
FactorList inverted(const FactorList& p);
FactorList commutator(const WordPtr& g, const FactorList& p);
FactorList commutator(const FactorList& p, const WordPtr& g);
void append(FactorList& dst, const FactorList& src);

// Product of the factors for a given sigma, sharing work across common chain tails.
ThetaMatrix evaluate_factors(const ClassicalGroup& group, const ThetaMatrix& sigma,
                             const FactorList& factors);

// A matrix derived from sigma together with factor lists expressing it and its
// inverse as products of elementary sigma-conjugates.
struct SigmaView {
  ThetaMatrix m;
  ThetaMatrix inv;
  FactorList plus;
  FactorList minus;
};

SigmaView root_view(const ThetaMatrix& sigma);
// V m V^{-1}, with conjugators prefixed by V.
SigmaView conjugated_view(const ClassicalGroup& group, const SigmaView& s, const WordPtr& v);
SigmaView inverse_view(const SigmaView& s);
SigmaView product_view(const SigmaView& a, const SigmaView& b);

// Indices carried by a certificate; kinds i-vi use i, j, k, l and kinds vii-viii use j, k.
struct CertIndices {
  int i = 0;
  int j = 0;
  int k = 0;
  int l = 0;
};

std::string kind_name(int kind);
int kind_from_name(const std::string& name);
bool kind_uses_pair_target(int kind);

// Factor-count bound of the given kind.
long certificate_bound(GroupKind group, int kind, int n);

// Elementary sigma-conjugate certificate for a target elementary matrix.
struct Certificate {
  std::shared_ptr<const ClassicalGroup> group;
  ThetaMatrix sigma;
  int kind = 1;
  CertIndices indices;
  ElemGen target;
  long bound = 0;
  FactorList factors;
  // Unitary kinds iii, iv and viii: the J(Delta) parameter; kind viii: realized x.
  std::optional<RingElem> a;
  std::optional<RingElem> x_out;

  long count() const { return static_cast<long>(factors.size()); }
};

// Target prescribed by the kind, computed from sigma. x_out supplies the free
// second parameter of unitary kind viii.
ElemGen expected_target(const ClassicalGroup& group, const ThetaMatrix& sigma, int kind,
                        const CertIndices& idx, const std::optional<RingElem>& a,
                        const std::optional<RingElem>& x_out);

// Throws InvalidInput when the index tuple does not fit the kind.
void check_indices(const ClassicalGroup& group, int kind, const CertIndices& idx);

struct VerifyResult {
  bool ok = true;
  std::vector<std::string> problems;
  void fail(const std::string& why) {
    ok = false;
    problems.push_back(why);
  }
};

// Re-derives everything from sigma and the generator words.
VerifyResult verify_certificate(const Certificate& cert);

}  // namespace oddgroup
