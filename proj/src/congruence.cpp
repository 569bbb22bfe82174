#include "oddgroup/congruence.hpp"

namespace oddgroup {

namespace {

// Nonzero generators without repeats, in first-seen order.
std::vector<RingElem> dedup(const Ring& R, const std::vector<RingElem>& xs) {
  std::vector<RingElem> out;
  ElemSet seen(R);
  for (const auto& x0 : xs) {
    const RingElem x = R.bind(x0);
    if (x.is_zero() || seen.contains(x)) continue;
    seen.insert(x);
    out.push_back(x);
  }
  return out;
}

std::string idx2(int a, int b) { return std::to_string(a) + "," + std::to_string(b); }

}  // namespace

Diagnosis admissible_validate(const Ideal& I, const Ideal& J) {
  for (const auto& x : J.members.elements()) {
    if (!I.contains(x + x)) return Diagnosis::fail("2J not in I");
    if (!I.contains(x * x)) return Diagnosis::fail("squares of J not in I");
  }
  if (!I.members.subset_of(J.members)) return Diagnosis::fail("I not in J");
  return Diagnosis::pass();
}

AdmissiblePair level_of_ortho(const OrthoGroup& group, const ThetaMatrix& sigma) {
  const Ring& R = group.ring();
  auto s = [&](int p, int q) { return R.bind(at(sigma, p, q)); };
  std::vector<RingElem> gi;
  for (int i : group.theta_hb())
    for (int j : group.theta())
      if (i != j) gi.push_back(s(i, j));
  for (int i : group.theta_hb())
    for (int j : group.theta_hb()) gi.push_back(s(i, i) - s(j, j));
  for (int j : group.theta_hb()) gi.push_back(s(0, j) + s(0, j));

  std::vector<RingElem> gj = gi;
  for (int j : group.theta_hb()) gj.push_back(s(0, j));
  for (int j : group.theta_hb()) gj.push_back(s(0, 0) - s(j, j));

  AdmissiblePair out;
  out.J = Ideal::generated(R, dedup(R, gj), false);
  for (const auto& x : out.J.members.elements()) {
    gi.push_back(x + x);
    gi.push_back(x * x);
  }
  out.I = Ideal::generated(R, dedup(R, gi), false);
  const Diagnosis d = admissible_validate(out.I, out.J);
  if (!d) throw InternalCheckFailure("completed level is not admissible: " + d.why);
  return out;
}

Diagnosis co_member(const OrthoGroup& group, const ThetaMatrix& sigma, const AdmissiblePair& level) {
  const Ring& R = group.ring();
  auto s = [&](int p, int q) { return R.bind(at(sigma, p, q)); };
  for (int i : group.theta_hb())
    for (int j : group.theta())
      if (i != j && !level.I.contains(s(i, j))) return Diagnosis::fail("(i) sigma_{" + idx2(i, j) + "} not in I");
  for (int j : group.theta_hb())
    if (!level.J.contains(s(0, j))) return Diagnosis::fail("(ii) sigma_{" + idx2(0, j) + "} not in J");
  for (int i : group.theta_hb())
    for (int j : group.theta_hb())
      if (!level.I.contains(s(i, i) - s(j, j)))
        return Diagnosis::fail("(iii) sigma_{" + idx2(i, i) + "} - sigma_{" + idx2(j, j) + "} not in I");
  for (int j : group.theta_hb())
    if (!level.J.contains(s(0, 0) - s(j, j)))
      return Diagnosis::fail("(iv) sigma_{0,0} - sigma_{" + idx2(j, j) + "} not in J");
  return Diagnosis::pass();
}

Diagnosis o_principal_member(const OrthoGroup& group, const ThetaMatrix& sigma, const AdmissiblePair& level) {
  const Ring& R = group.ring();
  auto d = [&](int p, int q) { return R.bind(at(sigma, p, q)) - (p == q ? R.one() : R.zero()); };
  for (int i : group.theta_hb())
    for (int j : group.theta())
      if (!level.I.contains(d(i, j))) return Diagnosis::fail("(i) sigma_{" + idx2(i, j) + "} not congruent mod I");
  for (int j : group.theta())
    if (!level.J.contains(d(0, j))) return Diagnosis::fail("(ii) sigma_{" + idx2(0, j) + "} not congruent mod J");
  return Diagnosis::pass();
}

bool is_level_elementary(const AdmissiblePair& level, const ElemGen& g) {
  return g.kind == GenKind::Short ? level.I.contains(g.x) : level.J.contains(g.x);
}

UnitaryLevel unitary_level(const Ideal& I, const OddFormParam& delta) {
  return UnitaryLevel{I, form_ideal_derived(I, delta)};
}

UnitaryLevel level_of_unitary(const UnitaryGroup& group, const ThetaMatrix& sigma) {
  const Ring& R = group.ring();
  auto s = [&](int p, int q) { return R.bind(at(sigma, p, q)); };
  const auto js = group.delta().first_components().elements();
  const RingElem mu = R.mu();
  std::vector<RingElem> gens;
  for (int i : group.theta_hb())
    for (int j : group.theta_hb())
      if (i != j) gens.push_back(s(i, j));
  for (int i : group.theta_hb())
    for (int j : group.theta_hb()) gens.push_back(s(i, i) - s(j, j));
  for (const auto& y : js) {
    for (int i : group.theta_hb()) gens.push_back(s(i, 0) * y);
    for (int j : group.theta_hb()) gens.push_back(R.involution(y) * mu * s(0, j));
    for (const auto& y2 : js)
      for (int j : group.theta_hb()) gens.push_back(R.involution(y) * mu * (s(0, 0) - s(j, j)) * y2);
  }
  return unitary_level(Ideal::generated(R, dedup(R, gens), true), group.delta());
}

Diagnosis cu_member_max(const UnitaryGroup& group, const ThetaMatrix& sigma, const UnitaryLevel& level) {
  const Ring& R = group.ring();
  auto s = [&](int p, int q) { return R.bind(at(sigma, p, q)); };
  for (int i : group.theta_hb())
    for (int j : group.theta_hb())
      if (i != j && !level.I.contains(s(i, j))) return Diagnosis::fail("(i) sigma_{" + idx2(i, j) + "} not in I");
  for (int i : group.theta_hb())
    if (!level.sets.i_zero.contains(s(i, 0))) return Diagnosis::fail("(ii) sigma_{" + idx2(i, 0) + "} not in I_0");
  for (int j : group.theta_hb())
    if (!level.sets.i_tilde.contains(s(0, j)))
      return Diagnosis::fail("(iii) sigma_{" + idx2(0, j) + "} not in I-tilde");
  for (int i : group.theta_hb())
    for (int j : group.theta_hb())
      if (!level.I.contains(s(i, i) - s(j, j)))
        return Diagnosis::fail("(iv) sigma_{" + idx2(i, i) + "} - sigma_{" + idx2(j, j) + "} not in I");
  for (int j : group.theta_hb())
    if (!level.sets.i_zero_tilde.contains(s(0, 0) - s(j, j)))
      return Diagnosis::fail("(v) sigma_{0,0} - sigma_{" + idx2(j, j) + "} not in I_0-tilde");
  return Diagnosis::pass();
}

Diagnosis u_principal_member(const UnitaryGroup& group, const ThetaMatrix& sigma, const OddFormIdeal& level) {
  const Ring& R = group.ring();
  const int n = group.n();
  for (int i : group.theta_hb())
    for (int j : group.theta_hb()) {
      const RingElem d = R.bind(at(sigma, i, j)) - (i == j ? R.one() : R.zero());
      if (!level.ideal.contains(d)) return Diagnosis::fail("(i) sigma_{" + idx2(i, j) + "} not congruent mod I");
    }
  for (int j : group.theta_hb())
    if (!level.contains(form_q(R, sigma.col(position(n, j)))))
      return Diagnosis::fail("(ii) q(sigma_{*," + std::to_string(j) + "}) not in Omega");
  const HeisElem q0 = form_q(R, sigma.col(position(n, 0)));
  const HeisElem shifted = heis_add(R, q0, heis_neg(R, {R.one(), R.zero()}));
  for (const auto& a : group.delta().first_components().elements())
    if (!level.contains(heis_scale(shifted, a)))
      return Diagnosis::fail("(ii) (q(sigma_{*,0}) - (1,0)) o a not in Omega");
  return Diagnosis::pass();
}

bool is_level_elementary(const OddFormIdeal& level, const ElemGen& g) {
  if (g.kind == GenKind::Short) return level.ideal.contains(g.x);
  return level.contains({g.x, g.y}, -eps(g.i));
}

}  // namespace oddgroup
