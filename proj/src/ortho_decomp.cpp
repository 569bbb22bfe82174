#include "oddgroup/ortho_decomp.hpp"

namespace oddgroup {

OrthoDecomposer::OrthoDecomposer(const OrthoGroup& group) : DecompEngine(group), og_(group) {}

FactorList OrthoDecomposer::k1(const SigmaView& s, IndexPair ab, IndexPair kl, const RingElem& y) const {
  const Ring& R = ring();
  const SigmaView sh = conjugated_view(og_, s, relocation(ab, {2, 3}));
  auto g = [&](int p, int q) { return R.bind(at(sh.m, p, q)); };
  const WordPtr tau =
      word({og_.short_root(2, 1, -g(2, 3)), og_.short_root(3, 1, g(2, 2)), og_.short_root(2, -3, g(2, -1))});
  FactorList c = conjugated(tau, sh.plus);
  append(c, sh.minus);
  c = commutator(word({og_.short_root(3, 2, R.one())}), c);
  c = conjugated(word_inverse(tau), c);
  c = commutator(word({og_.short_root(1, 2, y)}), c);
  c = conjugated(relocation({3, 2}, kl), c);
  expect_product(c, og_.matrix(og_.short_root(kl.first, kl.second, y * g(2, 3))), "orthogonal kind (i)");
  return c;
}

Atoms OrthoDecomposer::atoms(int kind, int i, int j, const RingElem& y) const {
  const Ring& R = ring();
  const RingElem one = R.one();
  switch (kind) {
    case 1: return {atom({i, j}, y)};
    case 2: return {atom({j, -i}, y, word({og_.short_root(j, i, one)})), atom({j, -i}, -y)};
    case 3:
      return {atom({i, j}, y, word({og_.extra_root(-j, -one)})), atom({i, j}, -y), atom({i, -j}, y)};
    case 4:
      return {atom({i, j}, y, word({og_.extra_root(i, -one)})), atom({i, j}, -y), atom({-i, j}, y)};
    case 5: return {atom({j, i}, y, word({og_.short_root(j, i, one)})), atom({i, j}, y), atom({j, i}, -y)};
    case 6: return concat(atoms(5, i, j, y), atoms(5, j, -i, y));
    default: throw InvalidInput("atoms exist for kinds i to vi only");
  }
}

FactorList OrthoDecomposer::extra_from(const SigmaView& s, const Atoms& at, int k, const RingElem& y) const {
  const int b = aux_index(k);
  FactorList c = commutator(lin(s, at, {k, b}), word({og_.extra_root(b, y)}));
  FactorList out = lin(s, scaled(at, y * y), {b, -k});
  append(out, c);
  return out;
}

FactorList OrthoDecomposer::step1(const SigmaView& s, int j, int k, const RingElem& x) const {
  const Ring& R = ring();
  const Pivot pv = pivot(j);
  const SigmaView sh = pv.word ? conjugated_view(og_, s, pv.word) : s;
  RingElem c = R.one();
  if (pv.word) c = R.bind(at(mat_inv_or_throw(og_.evaluate(*pv.word)), j, 1));
  expect(R.bind(at(sh.m, 0, 1)) == R.bind(at(s.m, 0, j)) * c, "pivot column");
  return conjugated(ext_reloc(3, k), step1_norm(sh, x * inv_unit(c)));
}

FactorList OrthoDecomposer::step1_norm(const SigmaView& s, const RingElem& x) const {
  const Ring& R = ring();
  const int n = og_.n();
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };

  ThetaColumn up = zero_column(R, n);
  at(up, -2) = g(1, 1);
  at(up, -1) = -g(2, 1);
  const ThetaColumn u = mat_mul<RingElem>(s.inv, up);
  expect(R.bind(at(u, -1)).is_zero(), "T_* column");
  const WordPtr ts = make_word(og_.t_star_word(u));

  FactorList b = conjugated(ts, s.plus);
  append(b, s.minus);
  append(b, lin(s, {atom({-3, 1}, g(2, 1))}, {-3, 1}));
  append(b, lin(s, {atom({-3, 1}, -g(1, 1))}, {-3, 2}));
  FactorList z = conjugated(word_inverse(ts), commutator(word({og_.short_root(2, -3, -x)}), b));

  struct Piece {
    IndexPair kl;
    Atoms at;
  };
  std::vector<Piece> pieces;
  pieces.push_back({{1, -2}, {atom({2, 3}, x * g(1, 1)), atom({1, 3}, -(x * g(2, 1)))}});
  pieces.push_back({{1, -3}, concat(atoms(5, 2, 1, -(x * g(1, 1))), {atom({1, 2}, x * g(2, 1))})});
  for (int p : og_.theta())
    if (p != 0 && p != 3 && p != -3 && p != -2 && p != -1 && p != 1)
      pieces.push_back({{p, -3}, {atom({p, 1}, x * g(1, 1))}});
  pieces.push_back({{-2, -3}, {atom({-3, 1}, x * g(1, 1) * g(3, 1) * g(1, 1))}});
  pieces.push_back({{-1, -3},
                    concat(atoms(2, -1, -3, x * g(1, 1)),
                           {atom({-2, 1}, x * g(2, 1)), atom({-3, 1}, -(x * g(2, 1) * g(3, 1) * g(1, 1)))})});

  FactorList out;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) append(out, inverted(lin(s, it->at, it->kl)));
  append(out, z);
  expect_product(out, og_.matrix(og_.extra_root(3, x * g(0, 1) * g(1, 1))), "orthogonal T_3 normal form");
  return out;
}

FactorList OrthoDecomposer::k7(const SigmaView& s, int j, int k) const {
  const Ring& R = ring();
  auto g = [&](int p, int q) { return R.bind(at(s.m, p, q)); };
  auto gi = [&](int p, int q) { return R.bind(at(s.inv, p, q)); };
  const RingElem y = g(0, j);
  const int aux = aux_index(j);
  FactorList out;
  for (int sx : og_.theta()) {
    if (sx == j) {
      append(out, step1(s, j, k, gi(j, j)));
    } else if (sx == -j) {
      append(out, extra_from(s, atoms(2, -j, aux, gi(j, -j)), k, y));
    } else if (sx == 0) {
      expect(gi(j, 0) == g(0, -j) + g(0, -j), "inverse entry (j,0)");
      append(out, extra_from(s, atoms(4, aux, -j, R.one()), k, y * y));
    } else {
      append(out, extra_from(s, {atom({sx, j}, gi(j, sx))}, k, y));
    }
  }
  return out;
}

FactorList OrthoDecomposer::k8(const SigmaView& s, int j, int k) const {
  const Ring& R = ring();
  const int aux = aux_index(j);
  const SigmaView sh = conjugated_view(og_, s, word({og_.extra_root(-j, R.one())}));
  FactorList all = k7(sh, j, k);
  append(all, inverted(k7(s, j, k)));
  append(all, extra_from(s, atoms(3, j, aux, R.one()), k, R.one()));
  append(all, k7(s, -j, k));
  append(all, extra_from(s, atoms(2, j, aux, R.one()), k, R.one()));
  return inverted(all);
}

Certificate decompose_ortho(const std::shared_ptr<const OrthoGroup>& group, const ThetaMatrix& sigma, int kind,
                            CertIndices idx) {
  if (!group) throw InvalidInput("no group");
  const OrthoGroup& g = *group;
  std::string why;
  if (!g.is_member(sigma, &why)) throw InvalidInput("sigma is not in the orthogonal group: " + why);
  idx = with_default_aux(g, kind, idx);
  check_indices(g, kind, idx);

  OrthoDecomposer d(g);
  d.set_root(sigma);
  const SigmaView root = root_view(sigma);

  Certificate cert;
  cert.group = group;
  cert.sigma = sigma;
  cert.kind = kind;
  cert.indices = idx;
  cert.bound = certificate_bound(GroupKind::Ortho, kind, g.n());
  cert.target = expected_target(g, sigma, kind, idx, std::nullopt, std::nullopt);
  if (kind <= 6) {
    cert.factors = d.lin(root, d.atoms(kind, idx.i, idx.j, g.ring().one()), {idx.k, idx.l});
  } else if (kind == 7) {
    cert.factors = d.k7(root, idx.j, idx.k);
  } else {
    cert.factors = d.k8(root, idx.j, idx.k);
  }
  d.expect_product(cert.factors, g.matrix(cert.target), "orthogonal certificate");
  d.expect(cert.count() <= cert.bound, "orthogonal factor bound");
  return cert;
}

}  // namespace oddgroup
