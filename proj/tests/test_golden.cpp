#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "oddgroup/json_io.hpp"

using namespace oddgroup;

namespace {

std::vector<std::filesystem::path> golden_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(ODDCERT_GOLDEN_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

}  // namespace

TEST(Golden, TwentyFilesPresent) { EXPECT_EQ(golden_files().size(), 20u); }

TEST(Golden, VerifyAndReserializeByteIdentical) {
  for (const auto& p : golden_files()) {
    const std::string text = slurp(p);
    const Json j = parse_json(text);
    const Certificate c = certificate_from_json(j);
    const VerifyResult v = verify_certificate(c);
    EXPECT_TRUE(v.ok) << p << ": " << (v.problems.empty() ? "" : v.problems.front());
    EXPECT_EQ(canonical_dump(certificate_to_json(c)) + "\n", text) << p;
  }
}

TEST(Golden, SingleFieldTamperIsCaught) {
  for (const auto& p : golden_files()) {
    Json j = parse_json(slurp(p));
    if (j.at("factors").empty()) continue;
    j["factors"][0]["exp"] = -j["factors"][0]["exp"].get<int>();
    EXPECT_FALSE(verify_certificate(certificate_from_json(j)).ok) << p;
  }
}
