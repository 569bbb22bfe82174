#include "oddgroup/certificate.hpp"

#include <unordered_map>

#include "oddgroup/unitary_group.hpp"

namespace oddgroup {

WordPtr make_word(Word w) { return std::make_shared<const Word>(std::move(w)); }

Chain prefixed(const WordPtr& segment, const Chain& chain) {
  if (!segment || segment->empty()) return chain;
  return std::make_shared<const ChainNode>(ChainNode{segment, chain});
}

Word flatten(const Chain& chain) {
  Word out;
  for (const ChainNode* node = chain.get(); node; node = node->next.get()) {
    out.insert(out.end(), node->segment->begin(), node->segment->end());
  }
  return out;
}

FactorList conjugated(const WordPtr& g, const FactorList& p) {
  FactorList out;
  out.reserve(p.size());
  for (const auto& f : p) out.push_back({prefixed(g, f.conj), f.exp});
  return out;
}

FactorList inverted(const FactorList& p) {
  FactorList out(p.rbegin(), p.rend());
  for (auto& f : out) f.exp = -f.exp;
  return out;
}

void append(FactorList& dst, const FactorList& src) { dst.insert(dst.end(), src.begin(), src.end()); }

FactorList commutator(const WordPtr& g, const FactorList& p) {
  FactorList out = conjugated(g, p);
  append(out, inverted(p));
  return out;
}

FactorList commutator(const FactorList& p, const WordPtr& g) {
  FactorList out = p;
  append(out, conjugated(g, inverted(p)));
  return out;
}

ThetaMatrix evaluate_factors(const ClassicalGroup& group, const ThetaMatrix& sigma, const FactorList& factors) {
  const ThetaMatrix sigma_inv = mat_inv_or_throw(sigma);
  // Value of chain * sigma^e * chain^{-1}, memoized per (node, e).
  std::unordered_map<const ChainNode*, ThetaMatrix> memo_plus;
  std::unordered_map<const ChainNode*, ThetaMatrix> memo_minus;
  auto value = [&](auto&& self, const ChainNode* node, int e) -> const ThetaMatrix& {
    if (!node) return e > 0 ? sigma : sigma_inv;
    auto& memo = e > 0 ? memo_plus : memo_minus;
    auto it = memo.find(node);
    if (it != memo.end()) return it->second;
    ThetaMatrix m = self(self, node->next.get(), e);
    group.conjugate_by(m, *node->segment);
    return memo.emplace(node, std::move(m)).first->second;
  };
  ThetaMatrix acc = group.identity();
  for (const auto& f : factors) {
    if (f.exp != 1 && f.exp != -1) throw InvalidInput("factor exponent must be 1 or -1");
    acc = mat_mul(acc, value(value, f.conj.get(), f.exp));
  }
  return acc;
}

SigmaView root_view(const ThetaMatrix& sigma) {
  SigmaView v;
  v.m = sigma;
  v.inv = mat_inv_or_throw(sigma);
  v.plus = {Factor{nullptr, 1}};
  v.minus = {Factor{nullptr, -1}};
  return v;
}

SigmaView conjugated_view(const ClassicalGroup& group, const SigmaView& s, const WordPtr& v) {
  SigmaView out;
  out.m = s.m;
  out.inv = s.inv;
  if (v) {
    group.conjugate_by(out.m, *v);
    group.conjugate_by(out.inv, *v);
  }
  out.plus = conjugated(v, s.plus);
  out.minus = conjugated(v, s.minus);
  return out;
}

SigmaView inverse_view(const SigmaView& s) { return SigmaView{s.inv, s.m, s.minus, s.plus}; }

SigmaView product_view(const SigmaView& a, const SigmaView& b) {
  SigmaView out;
  out.m = mat_mul(a.m, b.m);
  out.inv = mat_mul(b.inv, a.inv);
  out.plus = a.plus;
  append(out.plus, b.plus);
  out.minus = b.minus;
  append(out.minus, a.minus);
  return out;
}

namespace {

const char* const kKindNames[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"};

}  // namespace

std::string kind_name(int kind) {
  if (kind < 1 || kind > 8) throw InvalidInput("kind must be in 1..8");
  return kKindNames[kind - 1];
}

int kind_from_name(const std::string& name) {
  for (int k = 1; k <= 8; ++k)
    if (name == kKindNames[k - 1] || name == std::to_string(k)) return k;
  throw InvalidInput("unknown kind '" + name + "'");
}

bool kind_uses_pair_target(int kind) { return kind >= 1 && kind <= 6; }

long certificate_bound(GroupKind group, int kind, int n) {
  static const long ortho[] = {8, 16, 24, 24, 24, 48};
  static const long unitary[] = {160, 320, 480, 480, 480, 960};
  if (kind < 1 || kind > 8) throw InvalidInput("kind must be in 1..8");
  if (group == GroupKind::Ortho) {
    if (kind <= 6) return ortho[kind - 1];
    return kind == 7 ? 64L * n + 148 : 192L * n + 564;
  }
  if (kind <= 6) return unitary[kind - 1];
  return kind == 7 ? 1600L * n + 5764 : 4800L * n + 16812;
}

void check_indices(const ClassicalGroup& group, int kind, const CertIndices& idx) {
  const int n = group.n();
  auto hb = [&](int v) { return v != 0 && v >= -n && v <= n; };
  auto pair_ok = [&](int a, int b) { return hb(a) && hb(b) && a != b && a != -b; };
  if (kind < 1 || kind > 8) throw InvalidInput("kind must be in 1..8");
  if (kind <= 6) {
    if (!pair_ok(idx.i, idx.j)) throw InvalidInput("indices i, j must satisfy i != +-j in Theta_hb");
    if (!pair_ok(idx.k, idx.l)) throw InvalidInput("indices k, l must satisfy k != +-l in Theta_hb");
  } else {
    if (!hb(idx.j) || !hb(idx.k)) throw InvalidInput("indices j, k must lie in Theta_hb");
    if (idx.i != 0 || idx.l != 0) throw InvalidInput("kinds vii and viii take only j and k");
  }
}

ElemGen expected_target(const ClassicalGroup& group, const ThetaMatrix& sigma, int kind, const CertIndices& idx,
                        const std::optional<RingElem>& a, const std::optional<RingElem>& x_out) {
  check_indices(group, kind, idx);
  const Ring& R = group.ring();
  auto s = [&](int p, int q) { return R.bind(at(sigma, p, q)); };
  const int i = idx.i, j = idx.j, k = idx.k, l = idx.l;
  const bool unitary = group.kind() == GroupKind::Unitary;
  auto need_a = [&]() -> RingElem {
    if (!a) throw InvalidInput("kind " + kind_name(kind) + " needs the parameter a");
    return R.bind(*a);
  };
  switch (kind) {
    case 1: return group.short_root(k, l, s(i, j));
    case 2: return group.short_root(k, l, s(i, -i));
    case 3: return group.short_root(k, l, unitary ? s(i, 0) * need_a() : s(i, 0));
    case 4:
      return group.short_root(k, l, unitary ? R.involution(need_a()) * R.mu() * s(0, j) : s(0, j) + s(0, j));
    case 5: return group.short_root(k, l, s(i, i) - s(j, j));
    case 6: return group.short_root(k, l, s(i, i) - s(-i, -i));
    case 7: {
      if (!unitary) return group.extra_root(k, s(0, j));
      const HeisElem q = form_q(R, sigma.col(position(group.n(), j)));
      return group.extra_root(k, q.x, R.lambda_power(-(eps(k) + 1) / 2) * q.y);
    }
    default: {
      if (!unitary) return group.extra_root(k, s(0, 0) - s(j, j));
      if (!x_out) throw InvalidInput("unitary kind viii needs x_out");
      return group.extra_root(k, (s(0, 0) - s(j, j)) * need_a(), R.bind(*x_out));
    }
  }
}

VerifyResult verify_certificate(const Certificate& cert) {
  VerifyResult res;
  if (!cert.group) {
    res.fail("certificate has no group");
    return res;
  }
  const ClassicalGroup& g = *cert.group;
  const int dim = 2 * g.n() + 1;
  if (cert.sigma.rows() != dim || cert.sigma.cols() != dim) {
    res.fail("sigma has the wrong dimension");
    return res;
  }
  std::string why;
  if (!g.is_member(cert.sigma, &why)) res.fail("sigma is not a group element: " + why);

  try {
    check_indices(g, cert.kind, cert.indices);
  } catch (const InvalidInput& e) {
    res.fail(e.what());
    return res;
  }

  const bool unitary = g.kind() == GroupKind::Unitary;
  const bool wants_a = unitary && (cert.kind == 3 || cert.kind == 4 || cert.kind == 8);
  const bool wants_x = unitary && cert.kind == 8;
  if (wants_a != cert.a.has_value()) res.fail(wants_a ? "missing parameter a" : "unexpected parameter a");
  if (wants_x != cert.x_out.has_value()) res.fail(wants_x ? "missing x_out" : "unexpected x_out");
  if (wants_a && cert.a) {
    const auto& ug = static_cast<const UnitaryGroup&>(g);
    if (!ug.delta().first_components().contains(*cert.a)) res.fail("a is not in J(Delta)");
  }
  if (!res.ok) return res;

  try {
    const ElemGen expected = expected_target(g, cert.sigma, cert.kind, cert.indices, cert.a, cert.x_out);
    if (!(expected == cert.target)) res.fail("target " + describe(cert.target) + " differs from " + describe(expected));
    g.check_generator(cert.target);
  } catch (const InvalidInput& e) {
    res.fail(std::string("target: ") + e.what());
  }

  const long bound = certificate_bound(g.kind(), cert.kind, g.n());
  if (cert.bound != bound) res.fail("bound " + std::to_string(cert.bound) + " != " + std::to_string(bound));
  if (cert.count() > bound) res.fail("factor count " + std::to_string(cert.count()) + " exceeds the bound");

  std::size_t index = 0;
  for (const auto& f : cert.factors) {
    if (f.exp != 1 && f.exp != -1) res.fail("factor " + std::to_string(index) + " has exponent " + std::to_string(f.exp));
    for (const ChainNode* node = f.conj.get(); node; node = node->next.get()) {
      for (const auto& gen : *node->segment) {
        try {
          g.check_generator(gen);
        } catch (const InvalidInput& e) {
          res.fail("factor " + std::to_string(index) + ": " + e.what());
        }
      }
    }
    ++index;
  }
  if (!res.ok) return res;

  const ThetaMatrix product = evaluate_factors(g, cert.sigma, cert.factors);
  if (product != g.matrix(cert.target)) res.fail("product of factors differs from the target matrix");
  return res;
}

}  // namespace oddgroup
