#include "oddgroup/unitary_decomp.hpp"

namespace oddgroup {

UnitaryDecomposer::UnitaryDecomposer(const UnitaryGroup& group) : DecompEngine(group), ug_(group) {}

std::pair<IndexPair, RingElem> UnitaryDecomposer::mirror(IndexPair kl, const RingElem& z) const {
  const Ring& R = ring();
  const auto [k, l] = kl;
  const RingElem zp = -(R.lambda_power((eps(l) - 1) / 2) * cbar(z) * R.lambda_power((1 - eps(k)) / 2));
  return {{-l, -k}, zp};
}

FactorList UnitaryDecomposer::step1(const SigmaView& s, IndexPair kl, const RingElem& x) const {
  const Ring& R = ring();
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  const RingElem lb = cbar(R.lambda());
  const WordPtr tau = word({T(1, -2, cbar(g(2, 3)) * g(2, 3)), T(3, -2, -(cbar(g(2, 3)) * g(2, 1))),
                            T(3, -1, lb * cbar(g(2, 3)) * g(2, 2)),
                            E(3, R.zero(), cbar(g(2, 2)) * g(2, 1) - lb * cbar(g(2, 1)) * g(2, 2))});
  FactorList c = conjugated(tau, s.plus);
  append(c, s.minus);
  c = commutator(word({T(-2, -1, R.one())}), c);
  c = conjugated(word_inverse(tau), c);
  c = commutator(word({T(-2, 3, R.one())}), c);
  c = commutator(word({T(-1, 3, -x)}), c);
  c = conjugated(relocation({-2, 3}, kl), c);
  expect_product(c, ug_.matrix(T(kl.first, kl.second, x * cbar(g(2, 3)) * g(2, 1))), "unitary step 1");
  return c;
}

FactorList UnitaryDecomposer::step2(const SigmaView& s, IndexPair kl, const RingElem& x) const {
  const Ring& R = ring();
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  const RingElem lb = cbar(R.lambda());
  const WordPtr tau = word({T(2, 1, cbar(g(2, 3)) * g(2, 3)), T(3, 1, -(cbar(g(2, 3)) * g(2, 2))),
                            T(3, -2, cbar(g(2, 3)) * g(2, -1)),
                            E(3, R.zero(), -(cbar(g(2, 2)) * g(2, -1)) + lb * cbar(g(2, -1)) * g(2, 2))});
  FactorList c = conjugated(tau, s.plus);
  append(c, s.minus);
  c = commutator(word({T(-1, 2, R.one())}), c);
  c = conjugated(word_inverse(tau), c);
  c = commutator(word({T(1, 2, R.one())}), c);
  c = commutator(word({T(-1, 3, -(x * lb))}), c);
  c = conjugated(relocation({-1, 2}, kl), c);
  expect_product(c, ug_.matrix(T(kl.first, kl.second, x * cbar(g(2, 3)) * g(2, -1))), "unitary step 2");
  return c;
}

FactorList UnitaryDecomposer::step3(const SigmaView& s, IndexPair kl, const RingElem& x) const {
  const Ring& R = ring();
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  const RingElem lb = cbar(R.lambda());
  const WordPtr tau = word({T(2, 1, -(cbar(g(2, 2)) * g(2, 3))), T(3, 1, cbar(g(2, 2)) * g(2, 2)),
                            T(2, -3, cbar(g(2, 2)) * g(2, -1)),
                            E(2, R.zero(), -(cbar(g(2, 3)) * g(2, -1)) + lb * cbar(g(2, -1)) * g(2, 3))});
  const WordPtr tau_inv = word_inverse(tau);
  const WordPtr a32 = word({T(3, 2, R.one())});
  FactorList c = conjugated(tau, s.plus);
  append(c, s.minus);
  c = commutator(a32, c);
  c = conjugated(tau_inv, c);
  // psi = [tau^{-1}, T_32(1)]
  const WordPtr psi = concat_words(concat_words(tau_inv, a32), concat_words(tau, word_inverse(a32)));
  c = commutator(word({T(1, 2, R.one())}), c);
  c = conjugated(word_inverse(psi), c);
  c = commutator(word({T(2, -1, R.one())}), c);
  c = commutator(word({T(-2, 3, cbar(x))}), c);
  c = conjugated(relocation({1, 2}, kl), c);
  expect_product(c, ug_.matrix(T(kl.first, kl.second, x * cbar(g(2, 3)) * g(2, 2))), "unitary step 3");
  return c;
}

SigmaView UnitaryDecomposer::zeta_view(const SigmaView& s) const {
  const Ring& R = ring();
  const WordPtr p = concat_words(p_word(1, 3), p_word(2, 1));
  const WordPtr pt = concat_words(p, word({T(1, 2, -cbar(R.bind(at(s.m, 2, 3))))}));
  return product_view(conjugated_view(ug_, inverse_view(s), p), conjugated_view(ug_, s, pt));
}

ResidueCoefficients UnitaryDecomposer::residue_coefficients(const SigmaView& s, const SigmaView& zeta) const {
  const Ring& R = ring();
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  auto gi = [&](int p, int q) { return R.bind(at(s.inv, p, q)); };
  const RingElem lam = R.lambda();
  const RingElem lb = cbar(lam);
  const RingElem s23 = g(2, 3);
  const RingElem A = cbar(s23) * g(2, 1);
  const RingElem B = cbar(s23) * g(2, -1);
  const RingElem C = cbar(s23) * g(2, 2);

  // tau = [sigma^{-1}, T_12(-s23-bar)]
  const ThetaMatrix t = ug_.matrix(T(1, 2, -cbar(s23)));
  const ThetaMatrix tau = mat_mul(mat_mul(s.inv, t), mat_mul(s.m, mat_inv_or_throw(t)));
  expect(R.bind(at(zeta.m, 2, 2)) == R.bind(at(tau, 1, 1)) && R.bind(at(zeta.m, 2, 3)) == R.bind(at(tau, 1, 2)),
         "zeta row 2 against tau row 1");

  const RingElem u = -(gi(1, 1) * A) + lb * g(-1, 1) * cbar(B);
  const RingElem t11 = R.one() + u;
  expect(t11 == R.bind(at(tau, 1, 1)), "tau_11");
  const RingElem op = R.one() + cbar(u);

  ResidueCoefficients rc;
  rc.c_a = s23 * -gi(1, 1) * op;
  rc.c_b_bar = s23 * lb * g(-1, 1) * op;
  rc.c_a_bar = -(s23 * cbar(gi(1, 1)));
  rc.c_b = s23 * lam * cbar(g(-1, 1)) + t11 * lam * cbar(g(-1, 2));
  rc.c_c_bar = -(t11 * cbar(gi(1, 1)));
  rc.residue = cbar(R.bind(at(zeta.m, 2, 3))) * R.bind(at(zeta.m, 2, 2)) - s23;
  rc.combination = rc.c_a * A + rc.c_b_bar * cbar(B) + rc.c_a_bar * cbar(A) + rc.c_b * B + rc.c_c_bar * cbar(C);
  return rc;
}

FactorList UnitaryDecomposer::kind1_norm(const SigmaView& s, IndexPair kl, const RingElem& y) const {
  const SigmaView zeta = zeta_view(s);
  const ResidueCoefficients rc = residue_coefficients(s, zeta);
  expect(rc.residue == rc.combination, "residue identity");
  const RingElem ny = -y;
  FactorList out = step3(zeta, kl, y);
  append(out, step1(s, kl, ny * rc.c_a));
  {
    const auto [kk, z] = mirror(kl, ny * rc.c_a_bar);
    append(out, step1(s, kk, z));
  }
  append(out, step2(s, kl, ny * rc.c_b));
  {
    const auto [kk, z] = mirror(kl, ny * rc.c_b_bar);
    append(out, step2(s, kk, z));
  }
  {
    const auto [kk, z] = mirror(kl, ny * rc.c_c_bar);
    append(out, step3(s, kk, z));
  }
  return out;
}

FactorList UnitaryDecomposer::k1(const SigmaView& s, IndexPair ab, IndexPair kl, const RingElem& y) const {
  const SigmaView sh = conjugated_view(ug_, s, relocation(ab, {2, 3}));
  return kind1_norm(sh, kl, y);
}

RingElem UnitaryDecomposer::complete(const RingElem& a, int sign) const {
  auto b = ug_.delta().complete(ring().bind(a), sign);
  if (!b) throw InvalidInput("a is not in J(Delta)");
  return *b;
}

Atoms UnitaryDecomposer::atoms(int kind, int i, int j, const RingElem& y, const std::optional<RingElem>& a) const {
  const Ring& R = ring();
  const RingElem one = R.one();
  auto need_a = [&]() {
    if (!a) throw InvalidInput("this kind needs the parameter a");
    return R.bind(*a);
  };
  switch (kind) {
    case 1: return {atom({i, j}, y)};
    case 2: return {atom({j, -i}, y, word({T(j, i, one)})), atom({j, -i}, -y)};
    case 3: {
      const int sg = eps(j);
      const RingElem av = need_a();
      const RingElem b = complete(av, sg);
      const HeisElem h = heis_neg(R, {av, b}, sg);
      return {atom({i, j}, y, word({E(-j, h.x, h.y)})), atom({i, j}, -y), atom({i, -j}, -(y * b))};
    }
    case 4: {
      const int sg = -eps(i);
      const RingElem x = R.lambda_power((eps(i) - 1) / 2) * need_a();
      const RingElem b = complete(x, sg);
      const HeisElem h = heis_neg(R, {x, b}, sg);
      const RingElem yy = y * R.lambda_power(eps(i));
      return {atom({i, j}, yy, word({E(i, h.x, h.y)})), atom({i, j}, -yy), atom({-i, j}, -(yy * h.y))};
    }
    case 5: return {atom({j, i}, y, word({T(j, i, one)})), atom({i, j}, y), atom({j, i}, -y)};
    case 6: return concat(atoms(5, i, j, y, a), atoms(5, j, -i, y, a));
    default: throw InvalidInput("atoms exist for kinds i to vi only");
  }
}

FactorList UnitaryDecomposer::s5(const SigmaView& s, const Atoms& at, int k) const {
  const int b = aux_index(k);
  return commutator(lin(s, at, {k, b}), word({T(b, -k, ring().one())}));
}

FactorList UnitaryDecomposer::se2(const SigmaView& s, const Atoms& at, int k, const HeisElem& h) const {
  expect(eps(k) == -1, "se2 needs a negative index");
  const int b = aux_index(k, -1);
  Atoms conj_at = at;
  for (auto& a : conj_at) {
    a.cj = !a.cj;
    a.coef = cbar(a.coef);
  }
  FactorList c = commutator(lin(s, conj_at, {k, b}), word({E(b, h.x, h.y)}));
  FactorList out = lin(s, scaled(at, -ring().bind(h.y)), {b, -k});
  append(out, c);
  return out;
}

FactorList UnitaryDecomposer::q_step1(const SigmaView& s, const RingElem& x) const {
  const Ring& R = ring();
  const int n = ug_.n();
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  const RingElem lam = R.lambda();
  const RingElem lb = cbar(lam);

  ThetaColumn up = zero_column(R, n);
  at(up, -2) = cbar(g(1, 1));
  at(up, -1) = -cbar(g(2, 1));
  const ThetaColumn u = mat_mul<RingElem>(s.inv, up);
  expect(R.bind(at(u, -1)).is_zero(), "T_* column");
  const WordPtr ts = make_word(ug_.u_t_star_word(u));

  FactorList b = conjugated(ts, s.plus);
  append(b, s.minus);
  append(b, lin(s, {atom({-3, 1}, g(2, 1))}, {-3, 1}));
  append(b, lin(s, {atom({-3, 1}, -g(1, 1))}, {-3, 2}));
  const FactorList z = conjugated(word_inverse(ts), commutator(word({T(2, -3, -x)}), b));

  struct Piece {
    bool long_root;
    IndexPair kl;
    Atoms at;
  };
  const RingElem u2 = R.bind(at(u, -2));
  const RingElem c0 = lb * cbar(x) * u2;
  const RingElem c1 = lb * cbar(x);
  std::vector<Piece> pieces;
  pieces.push_back({true, {1, 0}, {atom({2, 3}, c0 * g(1, 1)), atom({2, 1}, -(c0 * g(1, 3)))}});
  pieces.push_back({false, {1, -2}, {atom({2, 3}, c1 * g(1, 1)), atom({2, 1}, -(c1 * g(1, 3)))}});
  pieces.push_back({false, {1, -3}, concat(atoms(5, 2, 1, -(x * g(1, 1)), std::nullopt), {atom({1, 2}, x * g(2, 1))})});
  for (int p : ug_.theta_hb())
    if (p != 1 && p != 3 && p != -3 && p != -2 && p != -1)
      pieces.push_back({false, {p, -3}, {atom({p, 1}, x * g(1, 1))}});
  pieces.push_back({false,
                    {-2, -3},
                    {atom({-2, 1}, x * g(1, 1)), atom({-3, 1}, x * cbar(g(1, 1)) * cbar(g(3, 1)) * g(1, 1)),
                     atom({-2, 1}, -(x * lam * cbar(g(1, 1))), nullptr, true)}});
  pieces.push_back({false,
                    {-1, -3},
                    concat(atoms(2, -1, -3, x * g(1, 1), std::nullopt),
                           {atom({-2, 1}, x * lam * cbar(g(2, 1)), nullptr, true),
                            atom({-3, 1}, -(x * cbar(g(2, 1)) * cbar(g(3, 1)) * g(1, 1)))})});

  FactorList out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
    const FactorList c = it->long_root ? s5(s, it->at, it->kl.first) : lin(s, it->at, it->kl);
    append(out, inverted(c));
  }
  append(out, z);
  append(out, s5(s, {atom({3, 1}, -(x * g(1, 1))), atom({-2, 1}, -(lb * cbar(x) * x * g(1, 1)))}, 3));
  return out;
}

// Builds on q_step1; used only by kind vii.
FactorList UnitaryDecomposer::q_step2(const SigmaView& s, int k, const RingElem& w) const {
  const Ring& R = ring();
  const int n = ug_.n();
  expect(eps(k) == -1, "q_step2 needs a negative index");
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  auto gi = [&](int p, int q) { return R.bind(at(s.inv, p, q)); };
  const HeisElem h = form_q(R, s.m.col(position(n, 1)));
  const auto& th = ug_.theta();

  std::vector<RingElem> xs;
  FactorList out;
  for (int sx : th) {
    xs.push_back(gi(1, sx) * g(sx, 1) * w);
    if (sx == 1) {
      append(out, conjugated(ext_reloc(3, k), q_step1(s, gi(1, 1) * w)));
    } else if (sx == -1) {
      append(out, se2(s, atoms(2, -1, -3, gi(1, -1) * w, std::nullopt), k, h));
    } else if (sx == 0) {
      Atoms at = atoms(4, 2, -1, R.one(), g(0, 1));
      for (auto& a : at) {
        a.coef = cbar(a.coef) * w;
        a.cj = !a.cj;
      }
      expect(atom_value(s, at) == xs.back(), "column-zero atoms");
      append(out, se2(s, at, k, h));
    } else {
      append(out, se2(s, {atom({sx, 1}, gi(1, sx) * w)}, k, h));
    }
  }
  RingElem wsum = R.zero();
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) wsum += cbar(xs[a]) * xs[b];
  Atoms at = atoms(2, -1, -3, wsum * cbar(g(1, 1)), std::nullopt);
  for (int r = 2; r <= n; ++r) at.push_back(atom({-r, 1}, wsum * cbar(g(r, 1))));
  append(out, s5(s, at, k));
  return out;
}

FactorList UnitaryDecomposer::k7core(const SigmaView& s, int j, int k, const RingElem& w, bool correct) const {
  const Ring& R = ring();
  const Pivot pv = pivot(j);
  const SigmaView sh = pv.word ? conjugated_view(ug_, s, pv.word) : s;
  if (pv.word) expect(R.bind(at(mat_inv_or_throw(ug_.evaluate(*pv.word)), j, 1)) == R.one(), "pivot column");
  FactorList out = q_step2(sh, k, w);
  stats_.vii_internal = static_cast<long>(out.size());
  if (correct && eps(j) == -1) {
    auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
    const int i = pv.hop;
    const RingElem ww = cbar(w) * w;
    append(out, s5(s, {atom({i, j}, g(-i, j) * ww, nullptr, true)}, k));
    Atoms at = atoms(2, -j, aux_index(j), R.one(), std::nullopt);
    for (auto& a : at) {
      a.coef = cbar(a.coef) * g(j, j) * ww;
      a.cj = true;
    }
    append(out, s5(s, at, k));
  }
  return out;
}

FactorList UnitaryDecomposer::k7(const SigmaView& s, int j, int k) const {
  if (eps(k) == -1) return k7core(s, j, k, ring().one(), true);
  const int k0 = k != 1 ? -1 : -2;
  return conjugated(ext_reloc(k0, k), k7core(s, j, k0, ring().one(), true));
}

FactorList UnitaryDecomposer::k8(const SigmaView& s, int j, int k, const RingElem& a) const {
  const Ring& R = ring();
  if (eps(k) == 1) {
    const int k0 = k != 1 ? -1 : -2;
    return conjugated(ext_reloc(k0, k), k8(s, j, k0, a));
  }
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  const int sg = eps(j);
  const RingElem bb = complete(a, sg);
  const SigmaView xi = conjugated_view(ug_, s, word({E(-j, a, bb)}));
  const RingElem bp = heis_neg(R, {a, bb}, sg).y;
  const RingElem e =
      (g(j, j) - g(0, 0)) * a + g(0, j) - g(j, 0) * a * a + g(0, -j) * bp + g(j, -j) * a * bp;
  expect(R.bind(at(xi.m, 0, j)) == e, "xi_0j");

  const int aux = aux_index(j);
  auto first = [&](const Atoms& xbar) {
    const int b2 = aux_index(k, -1);
    const RingElem z = complete(a, 1);
    Atoms cat = xbar;
    for (auto& x : cat) {
      x.coef = cbar(x.coef);
      x.cj = !x.cj;
    }
    FactorList out = lin(s, scaled(xbar, -z), {b2, -k});
    append(out, commutator(lin(s, cat, {k, b2}), word({E(b2, a, z)})));
    return out;
  };
  FactorList all = k7core(xi, j, k, R.one(), false);
  append(all, inverted(k7core(s, j, k, R.one(), false)));
  append(all, first(atoms(3, j, aux, R.one(), a)));
  append(all, inverted(k7core(s, -j, k, bp, false)));
  append(all, first(atoms(2, j, aux, -bp, std::nullopt)));
  return inverted(all);
}

Certificate decompose_unitary(const std::shared_ptr<const UnitaryGroup>& group, const ThetaMatrix& sigma, int kind,
                              CertIndices idx, const std::optional<RingElem>& a, DecompStats* stats) {
  if (!group) throw InvalidInput("no group");
  const UnitaryGroup& g = *group;
  const Ring& R = g.ring();
  std::string why;
  if (!g.is_member(sigma, &why)) throw InvalidInput("sigma is not in the unitary group: " + why);
  idx = with_default_aux(g, kind, idx);
  check_indices(g, kind, idx);
  const bool wants_a = kind == 3 || kind == 4 || kind == 8;
  if (wants_a && !a) throw InvalidInput("kind " + kind_name(kind) + " needs the parameter a");
  if (!wants_a && a) throw InvalidInput("kind " + kind_name(kind) + " takes no parameter a");
  std::optional<RingElem> av;
  if (a) {
    av = R.bind(*a);
    if (!g.delta().first_components().contains(*av)) throw InvalidInput("a is not in J(Delta)");
  }

  UnitaryDecomposer d(g);
  d.set_root(sigma);
  const SigmaView root = root_view(sigma);

  Certificate cert;
  cert.group = group;
  cert.sigma = sigma;
  cert.kind = kind;
  cert.indices = idx;
  cert.a = av;
  cert.bound = certificate_bound(GroupKind::Unitary, kind, g.n());
  if (kind <= 6) {
    cert.factors = d.lin(root, d.atoms(kind, idx.i, idx.j, R.one(), av), {idx.k, idx.l});
  } else if (kind == 7) {
    cert.factors = d.k7(root, idx.j, idx.k);
  } else {
    cert.factors = d.k8(root, idx.j, idx.k, *av);
  }
  const ThetaMatrix product = evaluate_factors(g, sigma, cert.factors);
  if (kind == 8) cert.x_out = R.bind(at(product, idx.k, -idx.k));
  cert.target = expected_target(g, sigma, kind, idx, cert.a, cert.x_out);
  d.expect(product == g.matrix(cert.target), "unitary certificate");
  d.expect(cert.count() <= cert.bound, "unitary factor bound");
  if (stats) *stats = d.stats();
  return cert;
}

}  // namespace oddgroup
