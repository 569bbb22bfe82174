#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oddgroup/json_io.hpp"

namespace oddgroup {

// Membership of random generator products, preservation of Q (orthogonal) or
// b and q mod Delta (unitary) on random vectors, and the polarity identity.
RelationReport membership_suite(const ClassicalGroup& group, int products, int length, std::mt19937_64& rng);

// Heisenberg group and module axioms, trace laws, Delta_min <= Delta <= Delta_max
// and the scale-of-sum identity. Exhaustive over R when exhaustive is set,
// otherwise `trials` random instances per law.
RelationReport heisenberg_suite(const OddFormParam& delta, bool exhaustive, int trials, std::mt19937_64& rng);

// ^{b^-1}[a, bc] = [b^-1, a][a, c] on random group elements.
RelationReport commutator_identity_suite(const ClassicalGroup& group, int trials, std::mt19937_64& rng);

// Expanding [g, P] and [P, g] for a factor list P doubles the count and
// evaluates to the matrix commutator.
RelationReport commutator_count_suite(const ClassicalGroup& group, int trials, std::mt19937_64& rng);

// Decomposes a few random sigma per kind, verifies the certificates through
// a JSON round trip, and checks the level consequences.
RelationReport decomposition_suite(const GroupContext& ctx, int samples, std::mt19937_64& rng);

struct SuiteResult {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::string counterexample;
  bool passed() const { return failed == 0; }
};

SuiteResult summarize(const std::string& name, const RelationReport& report);

struct SelftestConfig {
  std::uint64_t seed = 1;
  int trials = 100;
  bool inject_failure = false;
  // Restricts the battery to one configuration when set.
  std::optional<GroupContext> only;
};

// Results sorted by suite name.
std::vector<SuiteResult> run_selftest(const SelftestConfig& config);
Json selftest_report(const std::vector<SuiteResult>& results);

}  // namespace oddgroup
