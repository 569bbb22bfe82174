#include "oddgroup/ortho_group.hpp"

#include <functional>

namespace oddgroup {

RingElem quad_Q(const ThetaColumn& u) {
  const int n = theta_n(u);
  RingElem r = at(u, 0) * at(u, 0);
  for (int i = 1; i <= n; ++i) r += at(u, i) * at(u, -i);
  return r;
}

ThetaRow polarity(const ThetaColumn& u) {
  const int n = theta_n(u);
  ThetaRow out(u.size());
  for (int i = 1; i <= n; ++i) {
    at(out, i) = at(u, -i);
    at(out, -i) = at(u, i);
  }
  at(out, 0) = at(u, 0) + at(u, 0);
  return out;
}

OrthoGroup::OrthoGroup(Ring ring, int n) : ClassicalGroup(std::move(ring), n) {
  if (ring_.data()->involution != Involution::Identity) {
    throw InvalidInput("the orthogonal group needs the trivial involution");
  }
}

SparseDelta OrthoGroup::offdiag(const ElemGen& g) const {
  SparseDelta d;
  if (g.kind == GenKind::Short) {
    d.push(g.i, g.j, g.x);
    d.push(-g.j, -g.i, -g.x);
  } else {
    d.push(0, -g.i, g.x);
    d.push(g.i, 0, -(g.x + g.x));
    d.push(g.i, -g.i, -(g.x * g.x));
  }
  return d;
}

ElemGen OrthoGroup::inverse(const ElemGen& g) const {
  ElemGen out = g;
  out.x = -g.x;
  return out;
}

void OrthoGroup::check_generator(const ElemGen& g) const {
  if (g.kind == GenKind::Short) {
    check_short_indices(g.i, g.j);
  } else {
    check_extra_index(g.i);
    if (!g.y.is_zero()) throw InvalidInput("orthogonal extra short roots take one parameter");
  }
}

std::optional<ElemGen> OrthoGroup::merge(const ElemGen& a, const ElemGen& b) const {
  if (a.kind != b.kind || a.i != b.i || a.j != b.j) return std::nullopt;
  ElemGen out = a;
  out.x = a.x + b.x;
  return out;
}

bool OrthoGroup::is_member(const ThetaMatrix& m, std::string* why) const {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (m.rows() != 2 * n_ + 1 || m.cols() != 2 * n_ + 1) return fail("wrong dimension");
  auto inv_opt = mat_inv(m);
  if (!inv_opt) return fail("not invertible");
  const ThetaMatrix& inv = *inv_opt;
  auto s = [&](int i, int j) { return at(m, i, j); };
  auto si = [&](int i, int j) { return at(inv, i, j); };
  auto idx = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };
  for (int i : hb_)
    for (int j : hb_)
      if (si(i, j) != s(-j, -i)) return fail("(i) sigma'_{" + idx(i, j) + "} != sigma_{" + idx(-j, -i) + "}");
  for (int j : hb_)
    if (si(0, j) + si(0, j) != s(-j, 0)) return fail("(i) 2 sigma'_{" + idx(0, j) + "} != sigma_{" + idx(-j, 0) + "}");
  for (int i : hb_)
    if (si(i, 0) != s(0, -i) + s(0, -i)) return fail("(i) sigma'_{" + idx(i, 0) + "} != 2 sigma_{" + idx(0, -i) + "}");
  if (si(0, 0) + si(0, 0) != s(0, 0) + s(0, 0)) return fail("(i) 2 sigma'_{0,0} != 2 sigma_{0,0}");
  for (int j : theta_) {
    const RingElem expected = j == 0 ? ring_.one() : ring_.zero();
    if (quad_Q(m.col(position(n_, j))) != expected) return fail("(ii) Q(sigma_{*," + std::to_string(j) + "}) != delta_{0," + std::to_string(j) + "}");
  }
  if (why) why->clear();
  return true;
}

ElemGen OrthoGroup::random_generator(std::mt19937_64& rng) const {
  bool extra = false;
  int e = 0;
  auto [i, j] = random_short_slot(rng, extra, e);
  const RingElem x = ring_.random(rng);
  return extra ? extra_root(e, x) : short_root(i, j, x);
}

ThetaMatrix OrthoGroup::t_short(int i, int j, const RingElem& x) const {
  return matrix(short_root(i, j, x));
}

ThetaMatrix OrthoGroup::t_extra(int i, const RingElem& x) const { return matrix(extra_root(i, x)); }

ThetaMatrix OrthoGroup::t_star(const ThetaColumn& u) const {
  if (u.size() != 2 * n_ + 1) throw InvalidInput("column has the wrong length");
  if (!at(u, -1).is_zero()) throw InvalidInput("T_{*,-1} needs u_{-1} = 0");
  if (!ring_.bind(quad_Q(u)).is_zero()) throw InvalidInput("T_{*,-1} needs an isotropic column");
  ThetaMatrix m = identity();
  const ThetaRow tilde = polarity(u);
  for (int i : theta_) at(m, i, -1) += at(u, i);
  for (int j : theta_) at(m, 1, j) -= at(tilde, j);
  return m;
}

Word OrthoGroup::t_star_word(const ThetaColumn& u) const {
  Word w{extra_root(1, at(u, 0))};
  for (int i = 2; i <= n_; ++i) w.push_back(short_root(i, -1, at(u, i)));
  for (int i = -n_; i <= -2; ++i) w.push_back(short_root(i, -1, at(u, i)));
  return w;
}

ThetaMatrix OrthoGroup::p_perm(int i, int j) const { return p_matrix(i, j); }

namespace {

// Ring values to try: everything, or random draws.
std::vector<RingElem> sample_values(const Ring& ring, bool exhaustive, int trials, std::mt19937_64& rng) {
  if (exhaustive) return ring.elements();
  std::vector<RingElem> out;
  for (int t = 0; t < trials; ++t) out.push_back(ring.random(rng));
  return out;
}

}  // namespace

RelationReport relation_suite(const OrthoGroup& g, bool exhaustive, int trials, std::mt19937_64& rng,
                              bool inject_bad) {
  const Ring& R = g.ring();
  const auto& hb = g.theta_hb();
  auto xs = sample_values(R, exhaustive, trials, rng);
  auto ys = sample_values(R, exhaustive, trials, rng);
  auto T = [&](int i, int j, const RingElem& x) { return g.matrix(g.short_root(i, j, x)); };
  auto E = [&](int i, const RingElem& x) { return g.matrix(g.extra_root(i, x)); };
  auto mul = [](const ThetaMatrix& a, const ThetaMatrix& b) { return mat_mul(a, b); };
  // [a, b] from generators, inverting symbolically.
  auto comm = [&](const ElemGen& a, const ElemGen& b) {
    return mul(mul(g.matrix(a), g.matrix(b)), mul(g.matrix(g.inverse(a)), g.matrix(g.inverse(b))));
  };
  auto S = [&](int i, int j, const RingElem& x) { return g.short_root(i, j, x); };
  auto X = [&](int i, const RingElem& x) { return g.extra_root(i, x); };
  const ThetaMatrix e = g.identity();
  auto valid = [](int i, int j) { return i != j && i != -j; };
  auto wit = [](std::initializer_list<ElemGen> gens) {
    std::string s;
    for (const auto& x : gens) s += (s.empty() ? "" : " ") + describe(x);
    return s;
  };

  RelationReport report;
  auto run = [&](const std::string& name, const std::function<void(RelationOutcome&)>& body) {
    RelationOutcome out;
    out.relation = name;
    body(out);
    report.push_back(out);
  };

  run("S1", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) o.record(T(i, j, x) == T(-j, -i, -x), wit({S(i, j, x)}));
  });
  run("S2", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) for (const auto& y : ys)
        o.record(mul(T(i, j, x), T(i, j, y)) == T(i, j, x + y), wit({S(i, j, x), S(i, j, y)}));
  });
  run("S3", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (int k : hb) for (int l : hb) if (valid(k, l) && k != j && k != -i && l != i && l != -j)
        for (const auto& x : xs) for (const auto& y : ys)
          o.record(comm(S(i, j, x), S(k, l, y)) == e, wit({S(i, j, x), S(k, l, y)}));
  });
  run("S4", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (int k : hb) if (valid(j, k) && valid(i, k))
        for (const auto& x : xs) for (const auto& y : ys)
          o.record(comm(S(i, j, x), S(j, k, y)) == T(i, k, x * y), wit({S(i, j, x), S(j, k, y)}));
  });
  run("S5", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) for (const auto& y : ys)
        o.record(comm(S(i, j, x), S(j, -i, y)) == e, wit({S(i, j, x), S(j, -i, y)}));
  });
  run("E1", [&](RelationOutcome& o) {
    for (int i : hb)
      for (const auto& x : xs) for (const auto& y : ys)
        o.record(mul(E(i, x), E(i, y)) == E(i, x + y), wit({X(i, x), X(i, y)}));
  });
  run("E2", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) for (const auto& y : ys)
        o.record(comm(X(i, x), X(j, y)) == T(i, -j, -(x * y + x * y)), wit({X(i, x), X(j, y)}));
  });
  run("E3", [&](RelationOutcome& o) {
    for (int i : hb)
      for (const auto& x : xs) for (const auto& y : ys)
        o.record(comm(X(i, x), X(i, y)) == e, wit({X(i, x), X(i, y)}));
  });
  run("SE1", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (int k : hb) if (k != j && k != -i)
        for (const auto& x : xs) for (const auto& y : ys)
          o.record(comm(S(i, j, x), X(k, y)) == e, wit({S(i, j, x), X(k, y)}));
  });
  run("SE2", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) for (const auto& y : ys)
        o.record(comm(S(i, j, x), X(j, y)) == mul(T(j, -i, -(x * y * y)), E(i, x * y)),
                 wit({S(i, j, x), X(j, y)}));
  });
  if (inject_bad) {
    // S4 with the product replaced by a sum; false as soon as xy != x + y.
    run("S4-injected", [&](RelationOutcome& o) {
      for (int i : hb) for (int j : hb) if (valid(i, j))
        for (int k : hb) if (valid(j, k) && valid(i, k))
          for (const auto& x : xs) for (const auto& y : ys)
            o.record(comm(S(i, j, x), S(j, k, y)) == T(i, k, x + y), wit({S(i, j, x), S(j, k, y)}));
    });
  }
  return report;
}

}  // namespace oddgroup
