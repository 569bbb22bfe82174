// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oddgroup/cli.hpp"
#include "oddgroup/congruence.hpp"
#include "oddgroup/selftest.hpp"

using namespace oddgroup;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Line {
  bool ok = true;
  std::string detail;
};

bool all_passed(const RelationReport& report, std::string& first) {
  for (const auto& o : report)
    if (!o.passed()) {
      if (first.empty()) first = o.relation + ": " + o.counterexample;
      return false;
    }
  return true;
}

long total_checked(const RelationReport& report) {
  long n = 0;
  for (const auto& o : report) n += o.checked;
  return n;
}

void report(int id, const std::string& what, const Line& line, bool& everything) {
  std::cout << (line.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << what << " [" << line.detail << "]\n";
  everything = everything && line.ok;
}

const std::vector<std::string> kRelationConfigs = {"ortho-z2", "ortho-z3", "unitary-z3max", "unitary-q3min"};

RelationReport relations_of(const GroupContext& ctx, std::mt19937_64& rng) {
  if (ctx.ortho) return relation_suite(*ctx.ortho, true, 0, rng);
  return u_relation_suite(*ctx.unitary, true, 0, rng);
}

Line criterion_relations() {
  Line line;
  const auto t0 = Clock::now();
  long checked = 0;
  std::string first;
  for (const auto& name : kRelationConfigs) {
    std::mt19937_64 rng(1);
    const RelationReport r = relations_of(standard_group(name), rng);
    checked += total_checked(r);
    line.ok = all_passed(r, first) && line.ok;
  }
  const double dt = seconds_since(t0);
  line.ok = line.ok && dt < 30.0;
  std::ostringstream s;
  s << checked << " instances, " << dt << " s, limit 30 s";
  if (!first.empty()) s << ", first failure " << first;
  line.detail = s.str();
  return line;
}

Line criterion_membership() {
  Line line;
  long checked = 0;
  std::string first;
  for (const auto& name : kRelationConfigs) {
    std::mt19937_64 rng(2);
    const RelationReport r = membership_suite(*standard_group(name).group, 200, 12, rng);
    checked += total_checked(r);
    line.ok = all_passed(r, first) && line.ok;
  }
  line.detail = std::to_string(checked) + " checks over 200 products per configuration, zero failures allowed" +
                (first.empty() ? "" : ", first failure " + first);
  return line;
}

// Shared tallies of the decomposition sweeps, consumed by criterion 6.
struct SweepTally {
  long certificates = 0;
  long level_checks = 0;
  std::string level_failure;
  void level(bool ok, const std::string& why) {
    ++level_checks;
    if (!ok && level_failure.empty()) level_failure = why;
  }
};

struct SweepOutcome {
  bool ok = true;
  double worst_seconds = 0;
  long max_count[9] = {};
  long vii_internal = -1;
  std::string first;
  void fail(const std::string& why) {
    if (first.empty()) first = why;
    ok = false;
  }
};

void check_certificate(const Certificate& c, const long bound, SweepOutcome& out) {
  if (c.bound != bound) out.fail(kind_name(c.kind) + " bound " + std::to_string(c.bound));
  if (c.count() > c.bound) out.fail(kind_name(c.kind) + " count " + std::to_string(c.count()));
  const VerifyResult v = verify_certificate(c);
  if (!v.ok) out.fail(kind_name(c.kind) + " verify: " + v.problems.front());
  out.max_count[c.kind] = std::max(out.max_count[c.kind], c.count());
}

std::string count_list(const SweepOutcome& o) {
  std::string s;
  for (int kind = 1; kind <= 8; ++kind) s += (kind > 1 ? "," : "") + std::to_string(o.max_count[kind]);
  return s;
}

Line criterion_ortho(SweepTally& tally) {
  const long bounds[] = {8, 16, 24, 24, 24, 48, 340, 1140};
  Line line;
  std::string detail;
  for (const char* name : {"ortho-z5", "ortho-z8"}) {
    const GroupContext ctx = standard_group(name);
    const OrthoGroup& g = *ctx.ortho;
    std::mt19937_64 rng(3);
    SweepOutcome out;
    const auto t0 = Clock::now();
    for (int t = 0; t < 50; ++t) {
      const ThetaMatrix sigma = g.evaluate(g.random_word(rng, 12));
      const AdmissiblePair level = level_of_ortho(g, sigma);
      const Diagnosis member = co_member(g, sigma, level);
      tally.level(member.ok, std::string(name) + " co_member: " + member.why);
      for (int kind = 1; kind <= 8; ++kind)
        for (const CertIndices& idx : target_sweep(g, kind, rng)) {
          const Certificate c = decompose(ctx, sigma, kind, idx, std::nullopt);
          check_certificate(c, bounds[kind - 1], out);
          ++tally.certificates;
          tally.level(is_level_elementary(level, c.target),
                      std::string(name) + " " + kind_name(kind) + " target " + describe(c.target) + " not level-elementary");
        }
    }
    const double dt = seconds_since(t0);
    if (dt >= 60.0) out.fail("time limit");
    line.ok = line.ok && out.ok;
    std::ostringstream s;
    s << (detail.empty() ? "" : "; ") << name << " max counts " << count_list(out) << " in " << dt << " s";
    if (!out.first.empty()) s << ", first failure " << out.first;
    detail += s.str();
  }
  line.detail = detail + "; bounds 8,16,24,24,24,48,340,1140, limit 60 s per ring";
  return line;
}

Line criterion_unitary(SweepTally& tally) {
  const long bounds[] = {160, 320, 480, 480, 480, 960, 10564, 31212};
  Line line;
  std::string detail;
  for (const char* name : {"unitary-z3max", "unitary-q3min"}) {
    const GroupContext ctx = standard_group(name);
    const UnitaryGroup& g = *ctx.unitary;
    std::mt19937_64 rng(4);
    SweepOutcome out;
    const auto t0 = Clock::now();
    for (int t = 0; t < 25; ++t) {
      const ThetaMatrix sigma = g.evaluate(g.random_word(rng, 12));
      const UnitaryLevel level = level_of_unitary(g, sigma);
      const Diagnosis member = cu_member_max(g, sigma, level);
      tally.level(member.ok, std::string(name) + " cu_member_max: " + member.why);
      for (int kind = 1; kind <= 8; ++kind) {
        DecompStats stats;
        const Certificate c =
            decompose(ctx, sigma, kind, random_indices(g, kind, rng), random_a(ctx, kind, rng), &stats);
        check_certificate(c, bounds[kind - 1], out);
        if (kind == 7) {
          out.vii_internal = std::max(out.vii_internal, stats.vii_internal);
          if (stats.vii_internal > 9604) out.fail("vii internal " + std::to_string(stats.vii_internal));
        }
        ++tally.certificates;
        tally.level(is_level_elementary(level.max_form_ideal(), c.target),
                    std::string(name) + " " + kind_name(kind) + " target " + describe(c.target) + " not level-elementary");
      }
    }
    const double dt = seconds_since(t0);
    if (dt >= 600.0) out.fail("time limit");
    line.ok = line.ok && out.ok;
    std::ostringstream s;
    s << (detail.empty() ? "" : "; ") << name << " max counts " << count_list(out) << ", vii internal "
      << out.vii_internal << " in " << dt << " s";
    if (!out.first.empty()) s << ", first failure " << out.first;
    detail += s.str();
  }
  line.detail = detail + "; bounds 160,320,480,480,480,960,10564,31212, vii internal 9604, limit 600 s per configuration";
  return line;
}

Line criterion_heisenberg() {
  Line line;
  long checked = 0;
  std::string first;
  std::mt19937_64 rng(5);
  for (const char* spec : {"zmod:2", "zmod:3", "zmod:4", "zmod:5", "zmod:7", "zmod:8", "zmod:9", "quadext:3:-1", "quadext:2:1"}) {
    const std::string inv = std::string(spec).rfind("quadext", 0) == 0 ? "conj" : "id";
    const Ring R = Ring::validate(Ring::parse_spec(spec, inv));
    for (const auto& d : {OddFormParam::closure(R, {}), OddFormParam::maximal(R)}) {
      const RelationReport r = heisenberg_suite(d, true, 0, rng);
      checked += total_checked(r);
      line.ok = all_passed(r, first) && line.ok;
    }
  }
  for (const char* spec : {"zmod:25", "quadext:5:2", "quadext:7:-1"}) {
    const std::string inv = std::string(spec).rfind("quadext", 0) == 0 ? "conj" : "id";
    const Ring R = Ring::validate(Ring::parse_spec(spec, inv));
    for (const auto& d : {OddFormParam::closure(R, {}), OddFormParam::maximal(R)}) {
      const RelationReport r = heisenberg_suite(d, false, 100, rng);
      checked += total_checked(r);
      line.ok = all_passed(r, first) && line.ok;
    }
  }
  line.detail = std::to_string(checked) + " checks, exhaustive for |R| <= 9, 100 random cases otherwise, zero failures" +
                (first.empty() ? "" : ", first failure " + first);
  return line;
}

Line criterion_levels(const SweepTally& tally) {
  Line line;
  line.ok = tally.level_failure.empty() && tally.certificates > 0;
  line.detail = std::to_string(tally.level_checks) + " checks over " + std::to_string(tally.certificates) +
                " certificates, zero failures" + (tally.level_failure.empty() ? "" : ", first failure " + tally.level_failure);
  return line;
}

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::vector<const char*> argv{"oddcert"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  return code;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

Line criterion_certificates() {
  Line line;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(ODDCERT_GOLDEN_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  const auto scratch = std::filesystem::temp_directory_path() / "oddcert-acceptance";
  std::filesystem::create_directories(scratch);
  std::string first;
  auto fail = [&](const std::string& why) {
    if (first.empty()) first = why;
    line.ok = false;
  };
  long roundtrips = 0;
  for (const auto& p : files) {
    std::string report;
    if (cli({"verify", p.string()}, &report) != 0) fail(p.filename().string() + " did not verify");
    const Json r = parse_json(report);
    if (!r.at("canonical").get<bool>()) fail(p.filename().string() + " not byte-identical after re-serialization");
    Json j = parse_json(slurp(p));
    if (!j.at("factors").empty()) {
      j["factors"][0]["exp"] = -j["factors"][0]["exp"].get<int>();
      const auto tampered = scratch / p.filename();
      std::ofstream(tampered, std::ios::binary) << canonical_dump(j) << "\n";
      if (cli({"verify", tampered.string()}) != 1) fail(p.filename().string() + " tamper not rejected with exit 1");
    }
    ++roundtrips;
  }
  // Fresh emit -> verify -> re-serialize on every kind of both group types.
  for (const char* group : {"ortho", "unitary"})
    for (const char* kind : {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii"}) {
      const auto path = (scratch / (std::string(group) + "-" + kind + ".json")).string();
      std::vector<std::string> args{"decompose", "--group", group, "--kind", kind, "--seed", "11", "--out", path};
      if (std::string(group) == "unitary") {
        for (const char* a : {"--ring", "zmod:3", "--delta", "max"}) args.push_back(a);
        if (std::string(kind) == "iii" || std::string(kind) == "iv" || std::string(kind) == "viii")
          for (const char* a : {"--a", "0"}) args.push_back(a);
      }
      if (cli(args) != 0) {
        fail(std::string(group) + " " + kind + " emit failed");
        continue;
      }
      std::string report;
      if (cli({"verify", path}, &report) != 0 || !parse_json(report).at("canonical").get<bool>())
        fail(std::string(group) + " " + kind + " round trip failed");
      ++roundtrips;
    }
  std::filesystem::remove_all(scratch);
  if (files.size() != 20) fail(std::to_string(files.size()) + " golden files, expected 20");
  line.detail = std::to_string(files.size()) + " golden files, " + std::to_string(roundtrips) +
                " byte-identical round trips, tamper exit code 1" + (first.empty() ? "" : ", first failure " + first);
  return line;
}

Line criterion_commutator_counts() {
  Line line;
  long checked = 0;
  std::string first;
  for (const char* name : {"ortho-z5", "unitary-q3min"}) {
    std::mt19937_64 rng(6);
    const RelationReport r = commutator_count_suite(*standard_group(name).group, 100, rng);
    checked += total_checked(r);
    line.ok = all_passed(r, first) && line.ok;
  }
  line.detail = std::to_string(checked) + " checks, 100 constructions per group, counts exactly 2x" +
                (first.empty() ? "" : ", first failure " + first);
  return line;
}

}  // namespace

int main() {
  bool everything = true;
  SweepTally tally;
  report(1, "defining relations exhaustive at n = 3 within 30 s", criterion_relations(), everything);
  report(2, "random products are members and preserve the forms", criterion_membership(), everything);
  report(3, "orthogonal certificates within bounds and time", criterion_ortho(tally), everything);
  report(4, "unitary certificates within bounds and time", criterion_unitary(tally), everything);
  report(5, "Heisenberg group and form parameter laws", criterion_heisenberg(), everything);
  report(6, "sigma in its congruence level, targets level-elementary", criterion_levels(tally), everything);
  report(7, "certificate round trip and tamper detection", criterion_certificates(), everything);
  report(8, "commutator expansion doubles factor counts", criterion_commutator_counts(), everything);
  return everything ? 0 : 1;
}
