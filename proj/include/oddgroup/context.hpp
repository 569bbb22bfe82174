#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oddgroup/certificate.hpp"
#include "oddgroup/ortho_group.hpp"
#include "oddgroup/unitary_decomp.hpp"
#include "oddgroup/unitary_group.hpp"

namespace oddgroup {

// A group together with its concrete type.
struct GroupContext {
  std::shared_ptr<const ClassicalGroup> group;
  std::shared_ptr<const OrthoGroup> ortho;
  std::shared_ptr<const UnitaryGroup> unitary;
};

GroupContext make_group(const std::string& group_tag, const Ring& ring, int n,
                        const std::optional<OddFormParam>& delta);

// ortho-z2, ortho-z3, ortho-z5, ortho-z8: Z/m with trivial involution.
// unitary-z3max: Z/3, trivial involution, Delta_max.
// unitary-q3min: (Z/3)[t]/(t^2+1), conjugation, closure of Delta_min.
GroupContext standard_group(const std::string& name, int n = 3);

// Kinds iii, iv and viii of the unitary group take a in J(Delta).
bool kind_takes_a(const ClassicalGroup& group, int kind);

Certificate decompose(const GroupContext& ctx, const ThetaMatrix& sigma, int kind, const CertIndices& idx,
                      const std::optional<RingElem>& a, DecompStats* stats = nullptr);

// Valid source indices (i, j, or j alone for kinds vii and viii) with the
// given target; auxiliary indices take their defaults.
CertIndices random_source(const ClassicalGroup& group, int kind, int k, int l, std::mt19937_64& rng);
// One tuple per valid target pair (k, l), or per k for kinds vii and viii,
// each with random source indices.
std::vector<CertIndices> target_sweep(const ClassicalGroup& group, int kind, std::mt19937_64& rng);
CertIndices random_indices(const ClassicalGroup& group, int kind, std::mt19937_64& rng);
std::optional<RingElem> random_a(const GroupContext& ctx, int kind, std::mt19937_64& rng);

}  // namespace oddgroup
