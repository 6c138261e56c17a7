// Copyright 2026 The racgrowth Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "racgrowth/cli.hpp"
#include "racgrowth/report_json.hpp"

namespace racgrowth::cli {
namespace {

std::string fixture(const std::string& name) { return std::string(RACGROWTH_FIXTURE_DIR) + "/" + name; }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "racgrowth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = ::testing::TempDir() + "/" + name;
  std::ofstream(path) << content;
  return path;
}

TEST(CliTest, AnalyzeText) {
  auto r = invoke({"analyze", fixture("pentagon.json"), "--terms", "12"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("alpha    [2.6180339887"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("PerronCertified"), std::string::npos);
  EXPECT_NE(r.out.find("12  231840"), std::string::npos) << r.out;
}

TEST(CliTest, AnalyzeJsonRoundTripsAndIsDeterministic) {
  auto r = invoke({"analyze", fixture("golden.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(report_to_json(report_from_json(j)), j);
  EXPECT_EQ(invoke({"analyze", fixture("golden.json"), "--format", "json"}).out, r.out);
  EXPECT_EQ(j["alpha"]["verdict"], "PerronCertified");
  EXPECT_TRUE(j.contains("delta"));
  EXPECT_TRUE(j.contains("C"));
}

TEST(CliTest, EdgeListInput) {
  auto json_run = invoke({"count", fixture("pentagon.json"), "--terms", "6"});
  auto list_run = invoke({"count", fixture("pentagon.txt"), "--terms", "6"});
  ASSERT_EQ(list_run.code, 0) << list_run.err;
  EXPECT_EQ(json_run.out, list_run.out);
}

TEST(CliTest, GroupOverride) {
  auto r = invoke({"count", fixture("golden.json"), "--group", "raag", "--terms", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  // RAAG: 2 * 3 generators.
  EXPECT_EQ(j["a_coeffs"][1], "6");
}

TEST(CliTest, ComparePasses) {
  auto r = invoke({"compare", fixture("golden.json"), "--max", "8"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(r.out.substr(r.out.size() - 5), "PASS\n");
  auto raag = invoke({"compare", fixture("z2_raag.json"), "--max", "6", "--format", "json"});
  EXPECT_EQ(raag.code, 0) << raag.err;
  EXPECT_EQ(nlohmann::json::parse(raag.out)["verdict"], "PASS");
}

TEST(CliTest, CertifyA2Tilde) {
  auto r = invoke({"certify", fixture("a2tilde_geodesic.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "NotCertified: period 2; radius encloses 1.41421356");
  EXPECT_NE(r.out.find("attracting component of size 6, period 2"), std::string::npos);
}

TEST(CliTest, CertifyAutomatonDump) {
  auto dump = invoke({"automaton", fixture("golden.json"), "--kind", "geodesic", "--format", "json"});
  ASSERT_EQ(dump.code, 0);
  auto r = invoke({"certify", write_temp("golden_geodesic_dump.json", dump.out), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["certificate"]["verdict"], "PerronCertified");
  EXPECT_EQ(j["certificate"]["char_poly"], "x^4 - 2*x^2 - 2*x");
}

TEST(CliTest, AutomatonDot) {
  auto r = invoke({"automaton", fixture("golden.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph shortlex {", 0), 0u) << r.out;
}

TEST(CliTest, OracleTable) {
  auto r = invoke({"oracle", fixture("golden.json"), "--terms", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("5      21        32      21"), std::string::npos) << r.out;
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate", fixture("golden.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze", fixture("golden.json"), "--terms", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze", fixture("golden.json"), "--tolerance", "abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze", fixture("golden.json"), "--tolerance", "0"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze", fixture("golden.json"), "--format", "dot"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze", fixture("does_not_exist.json")}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliTest, ParseErrors) {
  auto r = invoke({"analyze", write_temp("broken.json", "{\"kind\": \"racg\", \"edges\": [[\"a\"]]}")});
  EXPECT_EQ(r.code, kExitParse);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(invoke({"analyze", write_temp("broken.txt", "racg 2\n1 5\n")}).code, kExitParse);
  EXPECT_EQ(invoke({"analyze", fixture("a2tilde_geodesic.json")}).code, kExitParse);
}

TEST(CliTest, CapsFromEnvironment) {
  ::setenv("GROWTH_STATE_CAP", "2", 1);
  EXPECT_EQ(invoke({"analyze", fixture("golden.json")}).code, kExitCap);
  ::setenv("GROWTH_STATE_CAP", "nope", 1);
  EXPECT_EQ(invoke({"analyze", fixture("golden.json")}).code, kExitUsage);
  ::unsetenv("GROWTH_STATE_CAP");
  ::setenv("GROWTH_FRONTIER_CAP", "10", 1);
  EXPECT_EQ(invoke({"oracle", fixture("pentagon.json"), "--terms", "6"}).code, kExitCap);
  ::unsetenv("GROWTH_FRONTIER_CAP");
}

TEST(CliTest, RunWithConfig) {
  CommandConfig config;
  config.command = Command::kCount;
  config.input_path = fixture("path3.json");
  config.terms = 4;
  std::ostringstream out, err;
  EXPECT_EQ(run(config, out, err), kExitOk);
  EXPECT_NE(out.str().find("4    4   10"), std::string::npos) << out.str();
}

}  // namespace
}  // namespace racgrowth::cli
