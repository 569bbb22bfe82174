#pragma once

#include <string>
#include <vector>

#include "oddgroup/hermitian_form.hpp"
#include "oddgroup/ideal.hpp"
#include "oddgroup/ortho_group.hpp"
#include "oddgroup/unitary_group.hpp"

namespace oddgroup {

// Outcome of a predicate with the first violated condition.
struct Diagnosis {
  bool ok = true;
  std::string why;
  explicit operator bool() const { return ok; }
  static Diagnosis pass() { return {}; }
  static Diagnosis fail(std::string reason) { return {false, std::move(reason)}; }
};

struct AdmissiblePair {
  Ideal I;
  Ideal J;
};

// 2J and the squares of J inside I, and I inside J.
Diagnosis admissible_validate(const Ideal& I, const Ideal& J);

// Entry-generated level, completed by 2J and squares of J.
AdmissiblePair level_of_ortho(const OrthoGroup& group, const ThetaMatrix& sigma);
// Full congruence subgroup CO(R, I, J) by its four entry conditions.
Diagnosis co_member(const OrthoGroup& group, const ThetaMatrix& sigma, const AdmissiblePair& level);
// Principal congruence subgroup O(R, I, J).
Diagnosis o_principal_member(const OrthoGroup& group, const ThetaMatrix& sigma, const AdmissiblePair& level);
// T_ij(x) with x in I, T_i(x) with x in J.
bool is_level_elementary(const AdmissiblePair& level, const ElemGen& g);

// Level I with Omega = Omega^I_max and the derived sets.
struct UnitaryLevel {
  Ideal I;
  FormIdealSets sets;
  OddFormIdeal max_form_ideal() const { return OddFormIdeal{I, sets.omega_max}; }
};

UnitaryLevel unitary_level(const Ideal& I, const OddFormParam& delta);
// Involution-closed ideal generated by the entry data that the CU(I, Omega^I_max)
// conditions constrain.
UnitaryLevel level_of_unitary(const UnitaryGroup& group, const ThetaMatrix& sigma);
// CU(I, Omega^I_max) by its five entry conditions.
Diagnosis cu_member_max(const UnitaryGroup& group, const ThetaMatrix& sigma, const UnitaryLevel& level);
// Principal congruence subgroup U((R, Delta), (I, Omega)).
Diagnosis u_principal_member(const UnitaryGroup& group, const ThetaMatrix& sigma, const OddFormIdeal& level);
// T_ij(x) with x in I, T_i(x, y) with (x, y) in Omega^{-eps(i)}.
bool is_level_elementary(const OddFormIdeal& level, const ElemGen& g);

}  // namespace oddgroup
