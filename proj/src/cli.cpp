#include "oddgroup/cli.hpp"

#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "oddgroup/json_io.hpp"
#include "oddgroup/selftest.hpp"

namespace oddgroup {

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kInvalid = 2;

struct Options {
  std::string group = "ortho";
  std::string ring = "zmod:5";
  std::string involution;
  std::string lambda;
  std::string mu;
  std::string delta = "min";
  int n = 3;
  std::uint64_t seed = 1;
  int len = 12;
  std::string out;
  std::string kind;
  int i = 0, j = 0, k = 0, l = 0;
  std::string a;
  std::string sigma;
  std::string input;
  int trials = 100;
  bool inject_failure = false;
};

std::array<std::int64_t, 2> coefficient_flag(const std::string& text) {
  const Json j = parse_json(text);
  if (j.is_number_integer()) return {j.get<long long>(), 0};
  if (j.is_array() && !j.empty() && j.size() <= 2) {
    std::array<std::int64_t, 2> out{0, 0};
    for (std::size_t t = 0; t < j.size(); ++t) {
      if (!j[t].is_number_integer()) throw MalformedInput("coefficients must be integers");
      out[t] = j[t].get<long long>();
    }
    return out;
  }
  throw MalformedInput("expected an integer or a coefficient list, got '" + text + "'");
}

GroupContext context_from(const Options& o) {
  RingSpec spec = Ring::parse_spec(o.ring, o.involution);
  if (!o.lambda.empty()) spec.lambda = coefficient_flag(o.lambda);
  if (!o.mu.empty()) spec.mu = coefficient_flag(o.mu);
  const Ring R = Ring::validate(spec);
  std::optional<OddFormParam> delta;
  if (o.group == "unitary") {
    if (o.delta == "min") {
      delta = OddFormParam::closure(R, {});
    } else if (o.delta == "max") {
      delta = OddFormParam::maximal(R);
    } else if (o.delta.rfind("gens:", 0) == 0) {
      const Json gens = parse_json(o.delta.substr(5));
      if (!gens.is_array()) throw MalformedInput("--delta gens: expects a list of [x, y] pairs");
      std::vector<HeisElem> hs;
      for (const auto& g : gens) hs.push_back(heis_from_json(R, g));
      delta = OddFormParam::closure(R, hs);
    } else {
      throw InvalidInput("--delta must be min, max or gens:[...]");
    }
  }
  return make_group(o.group, R, o.n, delta);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text << "\n";
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw InvalidInput("cannot write '" + o.out + "'");
  f << text << "\n";
}

int cmd_random(const Options& o, std::ostream& out) {
  const GroupContext ctx = context_from(o);
  if (o.len < 0) throw InvalidInput("--len must be non-negative");
  std::mt19937_64 rng(o.seed);
  const Word w = ctx.group->random_word(rng, o.len);
  Json j = group_header(*ctx.group);
  j["seed"] = o.seed;
  j["word"] = word_to_json(*ctx.group, w);
  j["matrix"] = matrix_to_json(ctx.group->evaluate(w));
  emit(o, canonical_dump(j), out);
  return kOk;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  GroupContext ctx;
  ThetaMatrix sigma;
  std::mt19937_64 rng(o.seed);
  if (!o.sigma.empty()) {
    const Json doc = parse_json(read_file(o.sigma));
    if (doc.is_object()) {
      if (!doc.contains("group") || !doc.contains("ring") || !doc.contains("n") || !doc.contains("matrix"))
        throw MalformedInput("sigma file needs group, ring, n and matrix");
      if (!doc["n"].is_number_integer() || !doc["group"].is_string()) throw MalformedInput("bad sigma header");
      ctx = group_from_json(doc["group"].get<std::string>(), doc["ring"], doc["n"].get<int>());
      sigma = matrix_from_json(ctx.group->ring(), ctx.group->n(), doc["matrix"]);
    } else {
      ctx = context_from(o);
      sigma = matrix_from_json(ctx.group->ring(), ctx.group->n(), doc);
    }
  } else {
    ctx = context_from(o);
    sigma = ctx.group->evaluate(ctx.group->random_word(rng, o.len));
  }
  if (ctx.group->n() < 3) throw InvalidInput("decomposition needs n >= 3");
  if (o.kind.empty()) throw InvalidInput("--kind is required");
  const int kind = kind_from_name(o.kind);
  CertIndices idx{o.i, o.j, o.k, o.l};
  if (idx.k == 0) idx = random_indices(*ctx.group, kind, rng);
  std::optional<RingElem> a;
  if (!o.a.empty()) a = elem_from_json(ctx.group->ring(), parse_json(o.a));

  const Certificate cert = decompose(ctx, sigma, kind, idx, a);
  const VerifyResult v = verify_certificate(cert);
  if (!v.ok) throw InternalCheckFailure("fresh certificate does not verify: " + v.problems.front());
  emit(o, canonical_dump(certificate_to_json(cert)), out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::string text = read_file(o.input);
  const Json doc = parse_json(text);
  Json report;
  VerifyResult v;
  std::string canonical;
  long count = 0, bound = 0;
  try {
    const Certificate cert = certificate_from_json(doc);
    v = verify_certificate(cert);
    canonical = canonical_dump(certificate_to_json(cert));
    count = cert.count();
    bound = cert.bound;
  } catch (const InvalidInput& e) {
    v.fail(e.what());
  } catch (const NotInvertible& e) {
    v.fail(e.what());
  }
  if (!text.empty() && text.back() == '\n') text.pop_back();
  report["ok"] = v.ok;
  report["canonical"] = !canonical.empty() && canonical == text;
  report["count"] = count;
  report["bound"] = bound;
  report["problems"] = v.problems;
  out << canonical_dump(report) << "\n";
  return v.ok ? kOk : kFailure;
}

int cmd_selftest(const Options& o, bool restricted, std::ostream& out) {
  SelftestConfig config;
  config.seed = o.seed;
  config.trials = o.trials;
  config.inject_failure = o.inject_failure;
  if (restricted) config.only = context_from(o);
  const auto results = run_selftest(config);
  const Json report = selftest_report(results);
  emit(o, canonical_dump(report), out);
  return report["passed"].get<bool>() ? kOk : kFailure;
}

void group_flags(CLI::App* app, Options& o) {
  app->add_option("--group", o.group, "ortho or unitary")->check(CLI::IsMember({"ortho", "unitary"}));
  app->add_option("--ring", o.ring, "zmod:m or quadext:m:d");
  app->add_option("--involution", o.involution, "id or conj");
  app->add_option("--lambda", o.lambda, "lambda as an integer or [a, b]");
  app->add_option("--mu", o.mu, "mu as an integer or [a, b]");
  app->add_option("--n", o.n, "hyperbolic rank")->check(CLI::Range(1, 7));
  app->add_option("--delta", o.delta, "min, max or gens:[[x, y], ...]");
  app->add_option("--seed", o.seed, "RNG seed");
}

}  // namespace

int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"Elementary sigma-conjugate certificates for odd orthogonal and odd unitary groups"};
  app.require_subcommand(1);
  Options o;

  auto* random = app.add_subcommand("random", "Product of random elementary generators");
  group_flags(random, o);
  random->add_option("--len", o.len, "number of generators");
  random->add_option("--out", o.out, "output path");

  auto* decomp = app.add_subcommand("decompose", "Certificate for one kind");
  group_flags(decomp, o);
  decomp->add_option("--kind", o.kind, "i..viii")->required();
  decomp->add_option("--i", o.i);
  decomp->add_option("--j", o.j);
  decomp->add_option("--k", o.k);
  decomp->add_option("--l", o.l);
  decomp->add_option("--a", o.a, "element of J(Delta)");
  decomp->add_option("--sigma", o.sigma, "JSON file with the matrix");
  decomp->add_option("--len", o.len, "length of the random sigma");
  decomp->add_option("--out", o.out, "output path");

  auto* verify = app.add_subcommand("verify", "Re-derive a certificate");
  verify->add_option("path", o.input, "certificate file")->required();

  auto* selftest = app.add_subcommand("selftest", "Run the property battery");
  group_flags(selftest, o);
  selftest->add_option("--trials", o.trials, "random instances per law")->check(CLI::Range(1, 100000));
  selftest->add_flag("--inject-failure", o.inject_failure, "append a false relation");
  selftest->add_option("--out", o.out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cli_out, cli_err;
    const int code = app.exit(e, cli_out, cli_err);
    out << cli_out.str();
    err << cli_err.str();
    return code == 0 ? kOk : kInvalid;
  }

  try {
    if (*random) return cmd_random(o, out);
    if (*decomp) return cmd_decompose(o, out);
    if (*verify) return cmd_verify(o, out);
    const bool restricted = selftest->count("--ring") > 0 || selftest->count("--group") > 0;
    return cmd_selftest(o, restricted, out);
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << "\n";
    return kInvalid;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const NotInvertible& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const InternalCheckFailure& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace oddgroup
