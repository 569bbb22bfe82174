#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "oddgroup/cli.hpp"
#include "oddgroup/json_io.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "oddcert");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class Scratch : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("oddcert-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  static void write(const std::string& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

  std::filesystem::path dir_;
};

}  // namespace

TEST(JsonEncoding, ElementsAndRings) {
  const Ring R = q3();
  const RingElem x = R.elem(2, 1);
  EXPECT_EQ(elem_to_json(x).dump(), "[2,1]");
  EXPECT_EQ(elem_from_json(R, elem_to_json(x)), x);
  EXPECT_EQ(elem_to_json(zmod(5).elem(3)).dump(), "3");
  EXPECT_THROW(elem_from_json(zmod(5), Json(7)), InvalidInput);
  EXPECT_THROW(elem_from_json(zmod(5), Json("3")), MalformedInput);
}

TEST(JsonEncoding, MatrixRoundTrip) {
  const Ring R = q3();
  std::mt19937_64 rng(3);
  ThetaMatrix m = identity(R, 3);
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = R.random(rng);
  EXPECT_EQ(matrix_from_json(R, 3, matrix_to_json(m)), m);
}

TEST(JsonEncoding, SyntaxErrorIsMalformed) { EXPECT_THROW(parse_json("{\"a\": "), MalformedInput); }

TEST_F(Scratch, RandomIsDeterministic) {
  const CliRun a = run({"random", "--seed", "42", "--ring", "zmod:8"});
  const CliRun b = run({"random", "--seed", "42", "--ring", "zmod:8"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run({"random", "--seed", "43", "--ring", "zmod:8"}).out);
}

TEST_F(Scratch, EmptyWordIsIdentity) {
  const CliRun r = run({"random", "--len", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  const ThetaMatrix m = matrix_from_json(zmod(5), 3, j.at("matrix"));
  EXPECT_TRUE(is_identity(m));
}

TEST_F(Scratch, DecomposeVerifyAndTamper) {
  const std::string cert = path("cert.json");
  const CliRun d = run({"decompose", "--kind", "iii", "--ring", "zmod:8", "--seed", "7", "--out", cert});
  ASSERT_EQ(d.code, 0) << d.err;
  const CliRun v = run({"verify", cert});
  EXPECT_EQ(v.code, 0) << v.out;
  const Json report = parse_json(v.out);
  EXPECT_TRUE(report.at("ok").get<bool>());
  EXPECT_TRUE(report.at("canonical").get<bool>());

  std::ifstream in(cert, std::ios::binary);
  const std::string text((std::istreambuf_iterator<char>(in)), {});
  Json j = parse_json(text);
  EXPECT_EQ(canonical_dump(j) + "\n", text);
  ASSERT_FALSE(j.at("factors").empty());
  j["factors"][0]["exp"] = -j["factors"][0]["exp"].get<int>();
  const std::string tampered = path("tampered.json");
  write(tampered, canonical_dump(j));
  EXPECT_EQ(run({"verify", tampered}).code, 1);

  write(tampered, text.substr(0, text.size() / 2));
  EXPECT_EQ(run({"verify", tampered}).code, 2);
}

TEST_F(Scratch, SigmaFromRandomOutput) {
  const std::string sigma = path("sigma.json");
  ASSERT_EQ(run({"random", "--group", "unitary", "--ring", "quadext:3:-1", "--involution", "conj", "--out", sigma}).code, 0);
  const CliRun d = run({"decompose", "--group", "unitary", "--ring", "quadext:3:-1", "--involution", "conj", "--kind", "v",
                     "--sigma", sigma});
  ASSERT_EQ(d.code, 0) << d.err;
  const std::string cert = path("cert.json");
  write(cert, d.out);
  EXPECT_EQ(run({"verify", cert}).code, 0);
}

TEST_F(Scratch, InvalidInputsExitTwo) {
  EXPECT_EQ(run({"decompose", "--group", "unitary", "--ring", "zmod:3", "--delta", "max", "--kind", "viii"}).code, 2);
  EXPECT_EQ(run({"decompose", "--kind", "ix"}).code, 2);
  EXPECT_EQ(run({"random", "--ring", "zmod:1"}).code, 2);
  EXPECT_EQ(run({"random", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"verify", path("missing.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(Scratch, SelftestRestrictedAndInjected) {
  const CliRun ok = run({"selftest", "--ring", "zmod:2", "--trials", "5"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  EXPECT_TRUE(parse_json(ok.out).at("passed").get<bool>());
  const CliRun bad = run({"selftest", "--ring", "zmod:2", "--trials", "5", "--inject-failure"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("S4-injected"), std::string::npos);
}
