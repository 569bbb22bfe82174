#include "oddgroup/unitary_group.hpp"

#include <functional>

namespace oddgroup {

RingElem form_b(const Ring& ring, const ThetaColumn& u, const ThetaColumn& v) {
  const int n = theta_n(u);
  RingElem r = bar(ring.bind(at(u, 0))) * ring.mu() * at(v, 0);
  for (int i = 1; i <= n; ++i) {
    r += bar(ring.bind(at(u, i))) * at(v, -i);
    r += bar(ring.bind(at(u, -i))) * ring.lambda() * at(v, i);
  }
  return r;
}

HeisElem form_q(const Ring& ring, const ThetaColumn& u) {
  const int n = theta_n(u);
  RingElem r = ring.zero();
  for (int i = 1; i <= n; ++i) r += bar(ring.bind(at(u, i))) * at(u, -i);
  return {ring.bind(at(u, 0)), r};
}

ThetaRow u_polarity(const Ring& ring, const ThetaColumn& u) {
  const int n = theta_n(u);
  ThetaRow out(u.size());
  for (int i = 1; i <= n; ++i) {
    at(out, i) = bar(ring.bind(at(u, -i))) * ring.lambda();
    at(out, -i) = bar(ring.bind(at(u, i)));
  }
  at(out, 0) = bar(ring.bind(at(u, 0))) * ring.mu();
  return out;
}

UnitaryGroup::UnitaryGroup(Ring ring, int n, OddFormParam delta)
    : ClassicalGroup(std::move(ring), n), delta_(std::move(delta)) {
  if (delta_.ring() != ring_) throw InvalidInput("Delta belongs to a different ring");
  lam_inv_ = *ring_.unit_inverse(ring_.lambda());
}

RingElem UnitaryGroup::lp(int k) const {
  if (k == 0) return ring_.one();
  if (k == 1) return ring_.lambda();
  if (k == -1) return lam_inv_;
  return ring_.lambda_power(k);
}

SparseDelta UnitaryGroup::offdiag(const ElemGen& g) const {
  SparseDelta d;
  if (g.kind == GenKind::Short) {
    d.push(g.i, g.j, g.x);
    d.push(-g.j, -g.i, -(lp((eps(g.j) - 1) / 2) * bar(g.x) * lp((1 - eps(g.i)) / 2)));
  } else {
    d.push(0, -g.i, g.x);
    d.push(g.i, 0, -(lp(-(1 + eps(g.i)) / 2) * bar(g.x) * ring_.mu()));
    d.push(g.i, -g.i, g.y);
  }
  return d;
}

HeisElem UnitaryGroup::extra_add(int i, const HeisElem& a, const HeisElem& b) const {
  return heis_add(ring_, a, b, -eps(i));
}

HeisElem UnitaryGroup::extra_neg(int i, const HeisElem& a) const {
  return heis_neg(ring_, a, -eps(i));
}

ElemGen UnitaryGroup::inverse(const ElemGen& g) const {
  ElemGen out = g;
  if (g.kind == GenKind::Short) {
    out.x = -g.x;
  } else {
    const HeisElem h = extra_neg(g.i, {g.x, g.y});
    out.x = h.x;
    out.y = h.y;
  }
  return out;
}

bool UnitaryGroup::extra_parameter_ok(int i, const HeisElem& h) const {
  return delta_.contains(h, -eps(i));
}

void UnitaryGroup::check_generator(const ElemGen& g) const {
  if (g.kind == GenKind::Short) {
    check_short_indices(g.i, g.j);
    return;
  }
  check_extra_index(g.i);
  if (!extra_parameter_ok(g.i, {g.x, g.y})) {
    throw InvalidInput("extra short root parameter of " + describe(g) + " is not in Delta^" +
                       std::to_string(-eps(g.i)));
  }
}

std::optional<ElemGen> UnitaryGroup::merge(const ElemGen& a, const ElemGen& b) const {
  if (a.kind != b.kind || a.i != b.i || a.j != b.j) return std::nullopt;
  ElemGen out = a;
  if (a.kind == GenKind::Short) {
    out.x = a.x + b.x;
  } else {
    const HeisElem h = extra_add(a.i, {a.x, a.y}, {b.x, b.y});
    out.x = h.x;
    out.y = h.y;
  }
  return out;
}

bool UnitaryGroup::is_member_by_entries(const ThetaMatrix& m, std::string* why) const {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (m.rows() != 2 * n_ + 1 || m.cols() != 2 * n_ + 1) return fail("wrong dimension");
  auto inv_opt = mat_inv(m);
  if (!inv_opt) return fail("not invertible");
  const ThetaMatrix& inv = *inv_opt;
  auto s = [&](int i, int j) { return ring_.bind(at(m, i, j)); };
  auto si = [&](int i, int j) { return ring_.bind(at(inv, i, j)); };
  auto idx = [](int a, int b) { return std::to_string(a) + "," + std::to_string(b); };
  const RingElem mu = ring_.mu();
  for (int i : hb_)
    for (int j : hb_)
      if (si(i, j) != lp(-(eps(i) + 1) / 2) * bar(s(-j, -i)) * lp((eps(j) + 1) / 2))
        return fail("(i) sigma'_{" + idx(i, j) + "} relation");
  for (int j : hb_)
    if (mu * si(0, j) != bar(s(-j, 0)) * lp((eps(j) + 1) / 2))
      return fail("(i) mu sigma'_{" + idx(0, j) + "} relation");
  for (int i : hb_)
    if (si(i, 0) != lp(-(eps(i) + 1) / 2) * bar(s(0, -i)) * mu)
      return fail("(i) sigma'_{" + idx(i, 0) + "} relation");
  if (mu * si(0, 0) != bar(s(0, 0)) * mu) return fail("(i) mu sigma'_{0,0} relation");
  for (int j : theta_) {
    const HeisElem q = form_q(ring_, m.col(position(n_, j)));
    const HeisElem expect{j == 0 ? ring_.one() : ring_.zero(), ring_.zero()};
    if (!delta_.contains(heis_add(ring_, q, heis_neg(ring_, expect))))
      return fail("(ii) q(sigma_{*," + std::to_string(j) + "}) outside Delta");
  }
  if (why) why->clear();
  return true;
}

bool UnitaryGroup::is_member_by_definition(const ThetaMatrix& m, std::string* why) const {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  if (m.rows() != 2 * n_ + 1 || m.cols() != 2 * n_ + 1) return fail("wrong dimension");
  if (!mat_inv(m)) return fail("not invertible");
  for (int i : theta_) {
    const ThetaColumn ui = m.col(position(n_, i));
    const ThetaColumn ei = basis_column(ring_, n_, i);
    for (int j : theta_) {
      const ThetaColumn uj = m.col(position(n_, j));
      if (form_b(ring_, ui, uj) != form_b(ring_, ei, basis_column(ring_, n_, j)))
        return fail("b(sigma e_" + std::to_string(i) + ", sigma e_" + std::to_string(j) + ") changed");
    }
    const HeisElem q = form_q(ring_, ui);
    if (!delta_.contains(heis_add(ring_, q, heis_neg(ring_, form_q(ring_, ei)))))
      return fail("q(sigma e_" + std::to_string(i) + ") differs from q(e_" + std::to_string(i) + ") mod Delta");
  }
  if (why) why->clear();
  return true;
}

bool UnitaryGroup::is_member(const ThetaMatrix& m, std::string* why) const {
  std::string a, b;
  const bool by_entries = is_member_by_entries(m, &a);
  const bool by_definition = is_member_by_definition(m, &b);
  if (by_entries && by_definition) {
    if (why) why->clear();
    return true;
  }
  if (why) {
    if (by_entries != by_definition) {
      *why = "entry relations and form preservation disagree: " + (by_entries ? b : a);
    } else {
      *why = a;
    }
  }
  return false;
}

ElemGen UnitaryGroup::random_generator(std::mt19937_64& rng) const {
  bool extra = false;
  int e = 0;
  auto [i, j] = random_short_slot(rng, extra, e);
  if (!extra) return short_root(i, j, ring_.random(rng));
  const HeisElem h = delta_.random(rng, -eps(e));
  return extra_root(e, h.x, h.y);
}

ThetaMatrix UnitaryGroup::u_t_short(int i, int j, const RingElem& x) const {
  return matrix(short_root(i, j, x));
}

ThetaMatrix UnitaryGroup::u_t_extra(int i, const HeisElem& h) const {
  return matrix(checked(extra_root(i, h.x, h.y)));
}

ThetaMatrix UnitaryGroup::u_t_star(const ThetaColumn& u) const {
  if (u.size() != 2 * n_ + 1) throw InvalidInput("column has the wrong length");
  if (!ring_.bind(at(u, -1)).is_zero()) throw InvalidInput("T_{*,-1} needs u_{-1} = 0");
  if (!delta_.contains(form_q(ring_, u))) throw InvalidInput("T_{*,-1} needs q(u) in Delta");
  ThetaMatrix m = identity();
  const ThetaRow tilde = u_polarity(ring_, u);
  const RingElem lb = bar(ring_.lambda());
  for (int i : theta_) at(m, i, -1) += at(u, i);
  for (int j : theta_) at(m, 1, j) -= lb * at(tilde, j);
  return m;
}

Word UnitaryGroup::u_t_star_word(const ThetaColumn& u) const {
  const HeisElem q = form_q(ring_, u);
  const RingElem u1 = ring_.bind(at(u, 1));
  const RingElem lb = bar(ring_.lambda());
  Word w{extra_root(1, q.x, lb * (q.y - bar(u1) + ring_.lambda() * u1))};
  for (int i : hb_)
    if (i != 1 && i != -1) w.push_back(short_root(i, -1, at(u, i)));
  return w;
}

ThetaMatrix UnitaryGroup::u_p_perm(int i, int j) const { return p_matrix(i, j); }

HeisElem UnitaryGroup::q_permuted(const ThetaMatrix& sigma, int i, int j) const {
  check_short_indices(i, j);
  auto s = [&](int a, int b) { return ring_.bind(at(sigma, a, b)); };
  const HeisElem base = form_q(ring_, sigma.col(position(n_, j)));
  if (eps(i) == eps(j)) return base;
  auto pair_term = [&](const RingElem& p) { return -p + bar(p) * ring_.lambda(); };
  RingElem corr;
  if (eps(i) == 1) {
    corr = pair_term(bar(s(i, j)) * s(-i, j)) + pair_term(bar(s(-j, j)) * s(j, j));
  } else {
    corr = pair_term(bar(s(-i, j)) * s(i, j)) + pair_term(bar(s(j, j)) * s(-j, j));
  }
  return heis_add(ring_, base, {ring_.zero(), corr});
}

namespace {

std::vector<RingElem> sample_values(const Ring& ring, bool exhaustive, int trials, std::mt19937_64& rng) {
  if (exhaustive) return ring.elements();
  std::vector<RingElem> out;
  for (int t = 0; t < trials; ++t) out.push_back(ring.random(rng));
  return out;
}

std::vector<HeisElem> sample_params(const OddFormParam& d, int sign, bool exhaustive, int trials,
                                    std::mt19937_64& rng) {
  if (exhaustive) return d.elements(sign);
  std::vector<HeisElem> out;
  for (int t = 0; t < trials; ++t) out.push_back(d.random(rng, sign));
  return out;
}

}  // namespace

RelationReport u_relation_suite(const UnitaryGroup& g, bool exhaustive, int trials,
                                std::mt19937_64& rng, bool inject_bad) {
  const Ring& R = g.ring();
  const auto& hb = g.theta_hb();
  auto xs = sample_values(R, exhaustive, trials, rng);
  auto ys = sample_values(R, exhaustive, trials, rng);
  const auto hp = sample_params(g.delta(), 1, exhaustive, trials, rng);
  const auto hm = sample_params(g.delta(), -1, exhaustive, trials, rng);
  auto params = [&](int i) -> const std::vector<HeisElem>& { return eps(i) > 0 ? hm : hp; };
  const RingElem mu = R.mu();
  auto lp = [&](int k) { return g.lp(k); };

  auto S = [&](int i, int j, const RingElem& x) { return g.short_root(i, j, x); };
  auto X = [&](int i, const HeisElem& h) { return g.extra_root(i, h.x, h.y); };
  auto M = [&](const ElemGen& a) { return g.matrix(a); };
  auto mul = [](const ThetaMatrix& a, const ThetaMatrix& b) { return mat_mul(a, b); };
  auto comm = [&](const ElemGen& a, const ElemGen& b) {
    return mul(mul(M(a), M(b)), mul(M(g.inverse(a)), M(g.inverse(b))));
  };
  const ThetaMatrix e = g.identity();
  auto valid = [](int i, int j) { return i != j && i != -j; };
  auto wit = [](std::initializer_list<ElemGen> gens) {
    std::string s;
    for (const auto& x : gens) s += (s.empty() ? "" : " ") + describe(x);
    return s;
  };
  // lambda^{(eps(j)-1)/2} x-bar lambda^{(1-eps(i))/2}
  auto twist = [&](int i, int j, const RingElem& x) {
    return lp((eps(j) - 1) / 2) * bar(x) * lp((1 - eps(i)) / 2);
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
      for (const auto& x : xs) o.record(M(S(i, j, x)) == M(S(-j, -i, -twist(i, j, x))), wit({S(i, j, x)}));
  });
  run("S2", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) for (const auto& y : ys)
        o.record(mul(M(S(i, j, x)), M(S(i, j, y))) == M(S(i, j, x + y)), wit({S(i, j, x), S(i, j, y)}));
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
          o.record(comm(S(i, j, x), S(j, k, y)) == M(S(i, k, x * y)), wit({S(i, j, x), S(j, k, y)}));
  });
  run("S5", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) for (const auto& y : ys) {
        const RingElem z = x * y - lp((-1 - eps(i)) / 2) * bar(y) * bar(x) * lp((1 - eps(i)) / 2);
        o.record(comm(S(i, j, x), S(j, -i, y)) == M(X(i, {R.zero(), z})), wit({S(i, j, x), S(j, -i, y)}));
      }
  });
  run("E1", [&](RelationOutcome& o) {
    for (int i : hb)
      for (const auto& a : params(i)) for (const auto& b : params(i))
        o.record(mul(M(X(i, a)), M(X(i, b))) == M(X(i, g.extra_add(i, a, b))), wit({X(i, a), X(i, b)}));
  });
  run("E2", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& a : params(i)) for (const auto& b : params(j))
        o.record(comm(X(i, a), X(j, b)) == M(S(i, -j, -(lp(-(1 + eps(i)) / 2) * bar(a.x) * mu * b.x))),
                 wit({X(i, a), X(j, b)}));
  });
  run("E3", [&](RelationOutcome& o) {
    for (int i : hb)
      for (const auto& a : params(i)) for (const auto& b : params(i)) {
        const RingElem z = -(lp(-(1 + eps(i)) / 2) * (bar(a.x) * mu * b.x - bar(b.x) * mu * a.x));
        o.record(comm(X(i, a), X(i, b)) == M(X(i, {R.zero(), z})), wit({X(i, a), X(i, b)}));
      }
  });
  run("SE1", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (int k : hb) if (k != j && k != -i)
        for (const auto& x : xs) for (const auto& h : params(k))
          o.record(comm(S(i, j, x), X(k, h)) == e, wit({S(i, j, x), X(k, h)}));
  });
  run("SE2", [&](RelationOutcome& o) {
    for (int i : hb) for (int j : hb) if (valid(i, j))
      for (const auto& x : xs) for (const auto& h : params(j)) {
        const RingElem c = twist(i, j, x);
        const ThetaMatrix rhs = mul(M(S(j, -i, h.y * c)), M(X(i, {h.x * c, x * h.y * c})));
        o.record(comm(S(i, j, x), X(j, h)) == rhs, wit({S(i, j, x), X(j, h)}));
      }
  });
  if (inject_bad) {
    run("S4-injected", [&](RelationOutcome& o) {
      for (int i : hb) for (int j : hb) if (valid(i, j))
        for (int k : hb) if (valid(j, k) && valid(i, k))
          for (const auto& x : xs) for (const auto& y : ys)
            o.record(comm(S(i, j, x), S(j, k, y)) == M(S(i, k, x + y)), wit({S(i, j, x), S(j, k, y)}));
    });
  }
  return report;
}

}  // namespace oddgroup
