#include "oddgroup/selftest.hpp"

#include <algorithm>
#include <sstream>

namespace oddgroup {

namespace {

ThetaColumn random_column(const Ring& R, int n, std::mt19937_64& rng) {
  ThetaColumn u = zero_column(R, n);
  for (Eigen::Index p = 0; p < u.size(); ++p) u(p) = R.random(rng);
  return u;
}

std::string show(const RingElem& x) {
  std::ostringstream os;
  if (x.ring() && x.ring()->family == RingFamily::Quadratic)
    os << "(" << x.a() << "+" << x.b() << "t)";
  else
    os << x.a();
  return os.str();
}

std::string show(const HeisElem& h) { return "(" + show(h.x) + ", " + show(h.y) + ")"; }

std::string show(const Word& w) {
  std::string out;
  for (const auto& g : w) out += (out.empty() ? "" : " ") + describe(g);
  return out.empty() ? "e" : out;
}

RelationOutcome& outcome(RelationReport& report, const std::string& name) {
  for (auto& o : report)
    if (o.relation == name) return o;
  RelationOutcome o;
  o.relation = name;
  report.push_back(std::move(o));
  return report.back();
}

template <class F>
void note(RelationOutcome& o, bool ok, F&& witness) {
  o.record(ok, ok ? std::string() : witness());
}

// Random factor list of the given size over sigma, each conjugator one or two segments.
FactorList random_factors(const ClassicalGroup& group, std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 3);
  std::uniform_int_distribution<int> coin(0, 1);
  FactorList out;
  for (std::size_t t = 0; t < size; ++t) {
    Chain c = prefixed(make_word(group.random_word(rng, len(rng))), nullptr);
    if (coin(rng)) c = prefixed(make_word(group.random_word(rng, len(rng))), c);
    out.push_back({c, coin(rng) ? 1 : -1});
  }
  return out;
}

}  // namespace

RelationReport membership_suite(const ClassicalGroup& group, int products, int length, std::mt19937_64& rng) {
  const Ring& R = group.ring();
  const int n = group.n();
  const auto* ug = dynamic_cast<const UnitaryGroup*>(&group);
  RelationReport report;
  for (int t = 0; t < products; ++t) {
    const Word w = group.random_word(rng, length);
    const ThetaMatrix s = group.evaluate(w);
    std::string why;
    outcome(report, "membership").record(group.is_member(s, &why), show(w) + ": " + why);
    const ThetaMatrix s_inv = mat_inv_or_throw(s);
    const ThetaColumn u = random_column(R, n, rng);
    const ThetaColumn v = random_column(R, n, rng);
    const ThetaColumn su = mat_mul<RingElem>(s, u);
    if (!ug) {
      outcome(report, "Q preserved").record(quad_Q(su) == quad_Q(u), show(w));
      const ThetaRow lhs = polarity(su);
      const ThetaRow rhs = mat_mul<RingElem>(polarity(u), s_inv);
      outcome(report, "polarity").record(lhs == rhs, show(w));
    } else {
      const ThetaColumn sv = mat_mul<RingElem>(s, v);
      outcome(report, "b preserved").record(form_b(R, su, sv) == form_b(R, u, v), show(w));
      const HeisElem diff = heis_add(R, form_q(R, su), heis_neg(R, form_q(R, u)));
      outcome(report, "q preserved mod Delta").record(ug->delta().contains(diff), show(w) + " diff " + show(diff));
      const ThetaRow lhs = u_polarity(R, su);
      const ThetaRow rhs = mat_mul<RingElem>(u_polarity(R, u), s_inv);
      outcome(report, "polarity").record(lhs == rhs, show(w));
    }
  }
  return report;
}

RelationReport heisenberg_suite(const OddFormParam& delta, bool exhaustive, int trials, std::mt19937_64& rng) {
  const Ring& R = delta.ring();
  RelationReport report;
  std::vector<HeisElem> hs;
  std::vector<RingElem> rs;
  if (exhaustive) {
    rs = R.elements();
    for (const auto& x : rs)
      for (const auto& y : rs) hs.push_back({x, y});
  } else {
    for (int t = 0; t < trials; ++t) {
      hs.push_back({R.random(rng), R.random(rng)});
      rs.push_back(R.random(rng));
    }
  }
  const HeisElem zero{R.zero(), R.zero()};

  auto triples = [&](auto&& f) {
    if (exhaustive) {
      for (const auto& a : hs)
        for (const auto& b : hs)
          for (const auto& c : hs) f(a, b, c);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, hs.size() - 1);
      for (int t = 0; t < trials; ++t) f(hs[pick(rng)], hs[pick(rng)], hs[pick(rng)]);
    }
  };
  auto pairs_with_scalar = [&](auto&& f) {
    if (exhaustive) {
      for (const auto& a : hs)
        for (const auto& b : hs)
          for (const auto& r : rs) f(a, b, r);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, hs.size() - 1);
      for (int t = 0; t < trials; ++t) f(hs[pick(rng)], hs[pick(rng)], rs[pick(rng)]);
    }
  };

  report.reserve(32);
  for (int sign : {1, -1}) {
    const std::string tag = sign > 0 ? "" : " (mirrored)";
    RelationOutcome& assoc = outcome(report, "associativity" + tag);
    RelationOutcome& ident = outcome(report, "identity" + tag);
    RelationOutcome& inv = outcome(report, "inverse" + tag);
    triples([&](const HeisElem& a, const HeisElem& b, const HeisElem& c) {
      const HeisElem l = heis_add(R, heis_add(R, a, b, sign), c, sign);
      const HeisElem r = heis_add(R, a, heis_add(R, b, c, sign), sign);
      note(assoc, l == r, [&] { return show(a) + show(b) + show(c); });
    });
    for (const auto& a : hs) {
      const HeisElem na = heis_neg(R, a, sign);
      note(ident, heis_add(R, a, zero, sign) == a && heis_add(R, zero, a, sign) == a, [&] { return show(a); });
      note(inv, heis_add(R, a, na, sign) == zero && heis_add(R, na, a, sign) == zero, [&] { return show(a); });
    }
  }

  RelationOutcome& dist = outcome(report, "scaling distributes over addition");
  RelationOutcome& sassoc = outcome(report, "scaling is associative");
  RelationOutcome& tadd = outcome(report, "trace is additive");
  RelationOutcome& tequi = outcome(report, "trace is equivariant");
  pairs_with_scalar([&](const HeisElem& a, const HeisElem& b, const RingElem& r) {
    const HeisElem l = heis_scale(heis_add(R, a, b), r);
    const HeisElem rr = heis_add(R, heis_scale(a, r), heis_scale(b, r));
    note(dist, l == rr, [&] { return show(a) + show(b) + " o " + show(r); });
    const RingElem s = b.x;
    note(sassoc, heis_scale(heis_scale(a, r), s) == heis_scale(a, r * s),
         [&] { return show(a) + " o " + show(r) + " o " + show(s); });
    note(tadd, trace(R, heis_add(R, a, b)) == trace(R, a) + trace(R, b), [&] { return show(a) + show(b); });
    note(tequi, trace(R, heis_scale(a, r)) == bar(r) * trace(R, a) * r, [&] { return show(a) + " o " + show(r); });
  });
  RelationOutcome& unit = outcome(report, "scaling by one");
  for (const auto& a : hs) note(unit, heis_scale(a, R.one()) == a, [&] { return show(a); });

  for (const auto& h : OddFormParam::minimal(R).elements())
    outcome(report, "Delta_min inside Delta").record(delta.contains(h), show(h));
  for (const auto& h : delta.elements())
    outcome(report, "Delta inside Delta_max").record(delta_bounds_member(R, h, DeltaKind::Max), show(h));
  outcome(report, "Delta is a module").record(heis_is_module(delta.base_set()), "Delta");
  outcome(report, "mirrored Delta is a module").record(heis_is_module(delta.base_set().mirrored(), -1), "Delta^-1");

  const auto hmax = OddFormParam::maximal(R).elements();
  auto scale_sum = [&](const HeisElem& h, const std::vector<RingElem>& xs) {
    const ScaleSumSides sides = scale_sum_expand(R, h, xs);
    note(outcome(report, "scale of a sum"), sides.lhs == sides.rhs, [&] {
      std::string t = show(h) + " over";
      for (const auto& x : xs) t += " " + show(x);
      return t;
    });
  };
  if (exhaustive) {
    for (const auto& h : hmax)
      for (const auto& x1 : rs)
        for (const auto& x2 : rs) scale_sum(h, {x1, x2});
  }
  std::uniform_int_distribution<std::size_t> pick_h(0, hmax.size() - 1);
  std::uniform_int_distribution<int> len(1, 5);
  for (int t = 0; t < trials; ++t) {
    std::vector<RingElem> xs;
    for (int c = len(rng); c > 0; --c) xs.push_back(R.random(rng));
    scale_sum(hmax[pick_h(rng)], xs);
  }
  return report;
}

RelationReport commutator_identity_suite(const ClassicalGroup& group, int trials, std::mt19937_64& rng) {
  RelationReport report;
  for (int t = 0; t < trials; ++t) {
    const Word wa = group.random_word(rng, 6), wb = group.random_word(rng, 6), wc = group.random_word(rng, 6);
    const ThetaMatrix a = group.evaluate(wa), b = group.evaluate(wb), c = group.evaluate(wc);
    const ThetaMatrix b_inv = mat_inv_or_throw(b);
    const ThetaMatrix lhs = conjugate(b_inv, commutator(a, mat_mul<RingElem>(b, c)));
    const ThetaMatrix rhs = mat_mul<RingElem>(commutator(b_inv, a), commutator(a, c));
    outcome(report, "^{b^-1}[a, bc] = [b^-1, a][a, c]")
        .record(lhs == rhs, "a = " + show(wa) + "; b = " + show(wb) + "; c = " + show(wc));
  }
  return report;
}

RelationReport commutator_count_suite(const ClassicalGroup& group, int trials, std::mt19937_64& rng) {
  RelationReport report;
  std::uniform_int_distribution<std::size_t> size(1, 6);
  for (int t = 0; t < trials; ++t) {
    const Word ws = group.random_word(rng, 8);
    const ThetaMatrix sigma = group.evaluate(ws);
    const FactorList p = random_factors(group, size(rng), rng);
    const Word wg = group.random_word(rng, 3);
    const ThetaMatrix G = group.evaluate(wg);
    const ThetaMatrix P = evaluate_factors(group, sigma, p);
    const std::string witness = "sigma = " + show(ws) + "; g = " + show(wg) + "; |P| = " + std::to_string(p.size());

    const FactorList left = commutator(make_word(wg), p);
    const FactorList right = commutator(p, make_word(wg));
    outcome(report, "|[g, P]| = 2|P|").record(left.size() == 2 * p.size(), witness);
    outcome(report, "|[P, g]| = 2|P|").record(right.size() == 2 * p.size(), witness);
    outcome(report, "[g, P] evaluates to the commutator")
        .record(evaluate_factors(group, sigma, left) == commutator(G, P), witness);
    outcome(report, "[P, g] evaluates to the commutator")
        .record(evaluate_factors(group, sigma, right) == commutator(P, G), witness);

    const Word wh = group.random_word(rng, 2);
    const FactorList nested = commutator(make_word(wh), left);
    outcome(report, "|[h, [g, P]]| = 4|P|").record(nested.size() == 4 * p.size(), witness);
    outcome(report, "[h, [g, P]] evaluates to the commutator")
        .record(evaluate_factors(group, sigma, nested) == commutator(group.evaluate(wh), commutator(G, P)), witness);
  }
  return report;
}

RelationReport decomposition_suite(const GroupContext& ctx, int samples, std::mt19937_64& rng) {
  const ClassicalGroup& group = *ctx.group;
  RelationReport report;
  for (int s = 0; s < samples; ++s) {
    const Word w = s == 0 ? Word{} : group.random_word(rng, 10);
    const ThetaMatrix sigma = group.evaluate(w);
    for (int kind = 1; kind <= 8; ++kind) {
      const CertIndices idx = random_indices(group, kind, rng);
      const auto a = random_a(ctx, kind, rng);
      const std::string witness = "kind " + kind_name(kind) + ", sigma = " + show(w);
      std::string tag = "kind " + kind_name(kind);
      try {
        const Certificate cert = decompose(ctx, sigma, kind, idx, a);
        const std::string text = canonical_dump(certificate_to_json(cert));
        const Certificate back = certificate_from_json(parse_json(text));
        const VerifyResult v = verify_certificate(back);
        outcome(report, tag + " verifies").record(v.ok, witness + (v.ok ? "" : ": " + v.problems.front()));
        outcome(report, tag + " round trip").record(canonical_dump(certificate_to_json(back)) == text, witness);
        outcome(report, tag + " within bound").record(cert.count() <= cert.bound, witness);
        if (ctx.ortho) {
          const AdmissiblePair level = level_of_ortho(*ctx.ortho, sigma);
          const Diagnosis d = co_member(*ctx.ortho, sigma, level);
          outcome(report, "co_member at the level").record(d.ok, witness + ": " + d.why);
          outcome(report, tag + " target is level-elementary").record(is_level_elementary(level, cert.target), witness);
        } else {
          const UnitaryLevel level = level_of_unitary(*ctx.unitary, sigma);
          const Diagnosis d = cu_member_max(*ctx.unitary, sigma, level);
          outcome(report, "cu_member_max at the level").record(d.ok, witness + ": " + d.why);
          outcome(report, tag + " target is level-elementary")
              .record(is_level_elementary(level.max_form_ideal(), cert.target), witness);
        }
      } catch (const std::exception& e) {
        outcome(report, tag + " runs").record(false, witness + ": " + e.what());
      }
    }
  }
  return report;
}

SuiteResult summarize(const std::string& name, const RelationReport& report) {
  SuiteResult out;
  out.name = name;
  for (const auto& o : report) {
    out.checked += o.checked;
    out.failed += o.failed;
    if (!o.passed() && out.counterexample.empty()) out.counterexample = o.relation + ": " + o.counterexample;
  }
  return out;
}

namespace {

std::string config_name(const GroupContext& ctx) {
  const ClassicalGroup& g = *ctx.group;
  std::string name = group_kind_name(g.kind()) + "-" + g.ring().description() + "-" + g.ring().involution_name();
  if (ctx.unitary) name += "-" + delta_kind_name(ctx.unitary->delta().kind());
  return name + "-n" + std::to_string(g.n());
}

RelationReport relations(const GroupContext& ctx, bool exhaustive, int trials, std::mt19937_64& rng, bool bad) {
  if (ctx.ortho) return relation_suite(*ctx.ortho, exhaustive, trials, rng, bad);
  return u_relation_suite(*ctx.unitary, exhaustive, trials, rng, bad);
}

OddFormParam named_delta(const std::string& desc, const std::string& inv, bool maximal) {
  const Ring R = Ring::validate(Ring::parse_spec(desc, inv));
  return maximal ? OddFormParam::maximal(R) : OddFormParam::closure(R, {});
}

}  // namespace

std::vector<SuiteResult> run_selftest(const SelftestConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::vector<SuiteResult> out;
  auto add = [&](const std::string& name, const RelationReport& r) { out.push_back(summarize(name, r)); };
  const int trials = std::max(config.trials, 1);

  if (config.only) {
    const GroupContext& ctx = *config.only;
    const std::string name = config_name(ctx);
    const bool small = ctx.group->ring().size() <= 9;
    add("relations/" + name, relations(ctx, small, trials, rng, config.inject_failure));
    add("membership/" + name, membership_suite(*ctx.group, trials, 12, rng));
    if (ctx.unitary) add("heisenberg/" + name, heisenberg_suite(ctx.unitary->delta(), small, trials, rng));
    add("commutator-identity/" + name, commutator_identity_suite(*ctx.group, trials, rng));
    add("commutator-count/" + name, commutator_count_suite(*ctx.group, trials, rng));
    if (ctx.group->n() >= 3) add("decomposition/" + name, decomposition_suite(ctx, 2, rng));
  } else {
    for (const char* name : {"ortho-z2", "ortho-z3", "unitary-z3max", "unitary-q3min"}) {
      const GroupContext ctx = standard_group(name);
      add(std::string("relations/") + name, relations(ctx, true, 0, rng, config.inject_failure));
      add(std::string("membership/") + name, membership_suite(*ctx.group, trials, 12, rng));
    }
    const std::vector<std::pair<std::string, OddFormParam>> deltas = {
        {"zmod:2-max", named_delta("zmod:2", "id", true)},
        {"zmod:3-max", named_delta("zmod:3", "id", true)},
        {"zmod:4-min", named_delta("zmod:4", "id", false)},
        {"zmod:8-max", named_delta("zmod:8", "id", true)},
        {"quadext:3:-1-min", named_delta("quadext:3:-1", "conj", false)},
        {"quadext:3:-1-max", named_delta("quadext:3:-1", "conj", true)},
        {"quadext:5:2-max", named_delta("quadext:5:2", "conj", true)},
    };
    for (const auto& [name, delta] : deltas)
      add("heisenberg/" + name, heisenberg_suite(delta, delta.ring().size() <= 9, trials, rng));
    for (const char* name : {"ortho-z5", "unitary-q3min"}) {
      const GroupContext ctx = standard_group(name);
      add(std::string("commutator-identity/") + name, commutator_identity_suite(*ctx.group, trials, rng));
      add(std::string("commutator-count/") + name, commutator_count_suite(*ctx.group, trials, rng));
    }
    for (const char* name : {"ortho-z5", "ortho-z8", "unitary-z3max", "unitary-q3min"})
      add(std::string("decomposition/") + name, decomposition_suite(standard_group(name), 2, rng));
  }
  std::sort(out.begin(), out.end(), [](const SuiteResult& a, const SuiteResult& b) { return a.name < b.name; });
  return out;
}

Json selftest_report(const std::vector<SuiteResult>& results) {
  bool all = true;
  Json suites = Json::array();
  for (const auto& r : results) {
    all = all && r.passed();
    Json s;
    s["name"] = r.name;
    s["passed"] = r.passed();
    s["checked"] = r.checked;
    s["failed"] = r.failed;
    s["counterexample"] = r.passed() ? Json(nullptr) : Json(r.counterexample);
    suites.push_back(std::move(s));
  }
  Json out;
  out["passed"] = all;
  out["suites"] = std::move(suites);
  return out;
}

}  // namespace oddgroup
