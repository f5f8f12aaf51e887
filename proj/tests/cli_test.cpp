// Copyright 2026 The gaqec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gaqec_cli/cli.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "gaqec/formats.hpp"

namespace gaqec::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("gaqec_cli_test_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  fs::path dir_;
};

TEST(Digest, KnownValues) {
  EXPECT_EQ(fnv1a(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a("a"), 0xaf63dc4c8601ec8cULL);
}

TEST_F(CliTest, AnalyzeFiveQubit) {
  const auto r = invoke({"analyze", "catalog:five_qubit"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("K=2 d=3 pure=yes; A=(1,0,0,0,15,0); A'=(1,0,0,30,15,18)\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find(std::string(version())), std::string::npos);
  EXPECT_NE(r.out.find("fnv1a:"), std::string::npos);
}

TEST_F(CliTest, AnalyzeFullSpace) {
  const auto r = invoke({"analyze", "catalog:full_space_2x2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("K=4 d=1"), std::string::npos) << r.out;
}

TEST_F(CliTest, AnalyzeMachineFormat) {
  const auto r = invoke({"--format", "machine", "analyze", "catalog:shor"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["version"], std::string(version()));
  EXPECT_EQ(j["results"]["K"], 2);
  EXPECT_EQ(j["results"]["d"], 3);
  EXPECT_EQ(j["results"]["pure"], false);
  EXPECT_EQ(j["results"]["A"]["integers"], (std::vector<long long>{1, 0, 9, 0, 27, 0, 75, 0, 144, 0}));
  EXPECT_FALSE(j.contains("timings"));
}

TEST_F(CliTest, MachineOutputIsStable) {
  const auto a = invoke({"verify", "catalog:four_two_two", "--identity", "t6", "--format", "machine"});
  const auto b = invoke({"verify", "catalog:four_two_two", "--identity", "t6", "--format", "machine"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  const auto timed = invoke({"verify", "catalog:four_two_two", "--identity", "t6", "--format", "machine", "--timings"});
  EXPECT_TRUE(nlohmann::json::parse(timed.out).contains("timings"));
}

TEST_F(CliTest, MalformedFileReportsLine) {
  const auto path = write("bad.code", "code m=2 n=2 kind=stabilizer\n1,0 1,0\n1,0\n");
  const auto r = invoke({"analyze", path});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("bad.code:3:"), std::string::npos) << r.err;
}

TEST_F(CliTest, MissingFileIsInputError) {
  EXPECT_EQ(invoke({"analyze", (dir_ / "absent.code").string()}).code, kExitInputError);
  EXPECT_EQ(invoke({"analyze", "catalog:absent"}).code, kExitInputError);
}

TEST_F(CliTest, UsageErrorsAreInputErrors) {
  EXPECT_EQ(invoke({}).code, kExitInputError);
  EXPECT_EQ(invoke({"enumerate", "catalog:shor", "--kind", "exact"}).code, kExitInputError);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  const auto v = invoke({"--version"});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find(std::string(version())), std::string::npos);
}

TEST_F(CliTest, EnumerateHamming) {
  const auto r = invoke({"enumerate", "catalog:four_two_two", "--kind", "hamming"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("A=(1,0,0,0,3); A'=(1,0,18,24,21)"), std::string::npos) << r.out;
}

TEST_F(CliTest, EnumerateLeeMergesPairs) {
  std::string text = "element m=3 n=1\n";
  for (int i = 0; i < 9; ++i) text += std::to_string(i) + " 1,0\n";
  const auto r = invoke({"enumerate", write("all.el", text), "--kind", "lee"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* key : {"(1,0,0,0,0) 1", "(0,1,0,0,0) 2", "(0,0,1,0,0) 2", "(0,0,0,1,0) 2", "(0,0,0,0,1) 2"}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key << "\n" << r.out;
  }
}

TEST_F(CliTest, EnumerateLeeRejectsEvenM) {
  const auto r = invoke({"enumerate", "catalog:five_qubit", "--kind", "lee"});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("odd m"), std::string::npos) << r.err;
}

TEST_F(CliTest, EnumerateComplete) {
  const auto r = invoke({"--format", "machine", "enumerate", "catalog:four_two_two", "--kind", "complete"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  double total = 0.0;
  for (const auto& term : j["results"]["C"]) total += term["value"][0].get<double>();
  EXPECT_NEAR(total, 4.0, 1e-12);
}

TEST_F(CliTest, VerifyT9) {
  const auto r = invoke({"--format", "machine", "verify", "catalog:five_qubit", "--identity", "t9"});
  EXPECT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["results"]["passed"].get<bool>());
  EXPECT_LT(j["results"]["max_residual"].get<double>(), 1e-12);
}

TEST_F(CliTest, VerifyLemma1ForM4) {
  const auto r = invoke({"verify", "--identity", "lemma1", "--m", "4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("lemma1 pass"), std::string::npos);
}

TEST_F(CliTest, VerifyCsOnRandomCode) {
  const auto r = invoke({"--format", "machine", "verify", "--identity", "cs", "--random", "2,3,2", "--seed", "42"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["results"]["seed"], 42);
}

TEST_F(CliTest, VerifyRecordsSeedAndTrials) {
  const auto r = invoke({"verify", "catalog:qutrit_repetition", "--identity", "t8", "--trials", "5", "--seed", "9"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("trials=5 seed=9"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyFailureExitsOne) {
  const auto path = write("e.el", "element m=2 n=1\n0 1.3,0.2\n1 0.7,-0.1\n2 0.31,0.9\n3 -0.2,0.45\n");
  const auto r = invoke({"verify", path, "--identity", "t4", "--tolerance", "1e-300"});
  EXPECT_EQ(r.code, kExitCheckFailed) << r.out;
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyNeedsInput) {
  EXPECT_EQ(invoke({"verify", "--identity", "t9"}).code, kExitInputError);
  EXPECT_EQ(invoke({"verify", "--identity", "cs", "--random", "2,3"}).code, kExitInputError);
}

TEST_F(CliTest, TransformIdentityAndBack) {
  const auto identity = write("id.el", "element m=2 n=2\n0 1,0\n");
  const auto ones = (dir_ / "ones.el").string();
  ASSERT_EQ(invoke({"transform", identity, "-o", ones}).code, kExitOk);
  const auto all = formats::parse_element(formats::read_file(ones));
  for (const auto& c : all.element.coeffs()) EXPECT_EQ(c, Complex(1.0, 0.0));

  const auto back = (dir_ / "back.el").string();
  const auto r = invoke({"transform", ones, "-o", back});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("M=16 c'_0=1"), std::string::npos) << r.out;
  const auto delta = formats::parse_element(formats::read_file(back));
  EXPECT_EQ(delta.element[0], Complex(1.0, 0.0));
  for (std::size_t i = 1; i < delta.element.size(); ++i) EXPECT_LT(std::abs(delta.element[i]), 1e-15);
}

TEST_F(CliTest, TransformOutputReingestsExactly) {
  const auto input = write("x.el", "element m=3 n=1\n0 2,0\n3 0.1,0.7\n5 -0.3,0.2\n");
  const auto first = (dir_ / "first.el").string();
  ASSERT_EQ(invoke({"transform", input, "-o", first}).code, kExitOk);
  const auto text = formats::read_file(first);
  EXPECT_EQ(formats::format_element(formats::parse_element(text).element, "lee"), text);
}

TEST_F(CliTest, TransformZeroElementFails) {
  const auto r = invoke({"transform", write("zero.el", "element m=2 n=1\n")});
  EXPECT_EQ(r.code, kExitInputError);
  EXPECT_NE(r.err.find("ZeroMass"), std::string::npos);
}

TEST_F(CliTest, CatalogListsAndPrints) {
  const auto list = invoke({"catalog"});
  EXPECT_EQ(list.code, kExitOk);
  EXPECT_NE(list.out.find("catalog:shor"), std::string::npos);
  const auto one = invoke({"catalog", "five_qubit"});
  EXPECT_NE(one.out.find("code m=2 n=5 kind=stabilizer"), std::string::npos);
}

TEST_F(CliTest, ThreadEnvironmentVariable) {
  ::setenv("GAQEC_THREADS", "3", 1);
  const auto ok = invoke({"analyze", "catalog:five_qubit"});
  ::setenv("GAQEC_THREADS", "zero", 1);
  const auto bad = invoke({"analyze", "catalog:five_qubit"});
  ::unsetenv("GAQEC_THREADS");
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_NE(bad.err.find("GAQEC_THREADS"), std::string::npos);
}

}  // namespace
}  // namespace gaqec::cli
