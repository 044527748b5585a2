// Copyright 2026 The polcs Authors
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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace polcs::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, CsMagicReport) {
  Result r = invoke({"cs", "--a", "0.5", "--b", "0.5", "--c", "0.5", "--d", "0.5", "--magic"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_NEAR(j.at("success_probability").get<double>(), 0.0513207882808, 1e-12);
  EXPECT_NEAR(j.at("gate_diagonal")[3].at("re").get<double>(), -0.226540919661, 1e-12);
}

TEST(CliTest, Solve) {
  Result r = invoke({"solve"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("r_v").get<double>(), 0.757359312881);
  EXPECT_EQ(j.at("r_h").get<double>(), 0.226540919661);
}

TEST(CliTest, NsCriticalCase) {
  Result r = invoke({"ns", "--n", "1", "--r-h", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(j.at("amplitude").at("re").get<double>(), 0.0);
  EXPECT_EQ(j.at("closed_form").at("re").get<double>(), 0.0);
  EXPECT_EQ(j.at("success_probability").get<double>(), 0.0);
}

TEST(CliTest, AnglesAndComposite) {
  Result a = invoke({"angles", "--magic"});
  ASSERT_EQ(a.code, 0) << a.err;
  json ja = json::parse(a.out);
  EXPECT_NEAR(ja.at("alpha_deg").get<double>(), 29.5107, 1e-4);
  EXPECT_NEAR(ja.at("beta_deg").get<double>(), 61.5779, 1e-4);

  Result c = invoke({"composite-bs", "--alpha-deg", "29.510675301985163", "--beta-deg", "61.57792086599424"});
  ASSERT_EQ(c.code, 0) << c.err;
  json jc = json::parse(c.out);
  EXPECT_LT(jc.at("distance_to_ideal").get<double>(), 1e-9);
  EXPECT_NEAR(jc.at("r_v").get<double>(), 0.757359312881, 1e-11);
  EXPECT_EQ(jc.at("phase_deviation").get<double>(), 0.0);

  Result p = invoke({"composite-bs", "--magic", "--phi-rad", "3.141592653589793"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_GT(json::parse(p.out).at("phase_deviation").get<double>(), 0.1);
}

TEST(CliTest, SweepCsvAndJson) {
  Result csv = invoke({"sweep", "--grid-steps", "3", "--format", "csv"});
  ASSERT_EQ(csv.code, 0) << csv.err;
  std::istringstream in(csv.out);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 10);
  EXPECT_EQ(csv.out.substr(0, 8), "r_v,r_h,");

  Result js = invoke({"sweep", "--grid-steps", "2", "--magic"});
  ASSERT_EQ(js.code, 0) << js.err;
  json j = json::parse(js.out);
  ASSERT_EQ(j.size(), 5u);
  EXPECT_NEAR(j[4].at("fidelity").get<double>(), 1.0, 1e-11);
}

TEST(CliTest, Deterministic) {
  std::vector<std::string> argv{"cs", "--a", "0.6", "--b", "0", "--c", "0", "--d", "0.8", "--r-v", "0.3", "--r-h", "0.4"};
  Result first = invoke(argv);
  Result second = invoke(argv);
  ASSERT_EQ(first.code, 0);
  EXPECT_EQ(first.out, second.out);
}

TEST(CliTest, TwelveSignificantDigits) {
  Result r = invoke({"solve"});
  EXPECT_NE(r.out.find("0.757359312881"), std::string::npos);
  EXPECT_EQ(r.out.find("0.7573593128807"), std::string::npos);
}

TEST(CliTest, WritesOutFile) {
  std::string path = ::testing::TempDir() + "polcs_solve.json";
  Result r = invoke({"solve", "--out", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream file(path);
  json j = json::parse(file);
  EXPECT_EQ(j.at("r_h").get<double>(), 0.226540919661);
  std::remove(path.c_str());
}

TEST(CliTest, ValidationErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  Result unknown = invoke({"teleport"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("unknown command 'teleport'"), std::string::npos);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({"ns", "--r-h", "1.5"}).code, kExitUsage);
  EXPECT_EQ(invoke({"ns", "--n", "-1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"cs", "--magic", "--r-v", "0.3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"cs", "--format", "csv"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--grid-steps", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--format", "xml"}).code, kExitUsage);
}

TEST(CliTest, Verify) {
  Result r = invoke({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  std::istringstream in(r.out);
  std::string line;
  int pass = 0;
  while (std::getline(in, line)) pass += line.rfind("PASS", 0) == 0;
  EXPECT_EQ(pass, 10);
}

}  // namespace
}  // namespace polcs::cli
