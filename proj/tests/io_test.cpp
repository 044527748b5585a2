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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "polcs/io.hpp"
#include "polcs/verify.hpp"

namespace polcs {
namespace {

TEST(FockJsonTest, ExactFieldNames) {
  FockState s = FockState::basis(ModeRegistry::spatial({"C"}), {0, 1});
  json j = to_json(s);
  EXPECT_EQ(j.dump(), R"({"modes":["C:V","C:H"],"terms":[{"im":0.0,"occ":[0,1],"re":1.0}]})");
}

TEST(FockJsonTest, RoundTripPreservesStateAndNorm) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 10; ++k) {
    CsReport r = cs_gate(verify::random_qubits(rng), {0.2 + 0.05 * k, 0.7 - 0.05 * k});
    for (const FockState* s : {&r.psi1, &r.psi2, &r.psi3, &r.psi4}) {
      FockState back = fock_state_from_json(json::parse(to_json(*s).dump()));
      EXPECT_EQ(back.registry(), s->registry());
      EXPECT_TRUE(states_close(back, *s, 0.0));
      EXPECT_EQ(squared_norm(back), squared_norm(*s));
    }
  }
}

TEST(FockJsonTest, MalformedInput) {
  EXPECT_THROW(fock_state_from_json(json::parse(R"({"modes":["C:V"]})")), StructuralError);
  EXPECT_THROW(fock_state_from_json(json::parse(R"({"modes":["C:V"],"terms":[{"occ":[1,0],"re":1,"im":0}]})")),
               StructuralError);
}

TEST(OutcomeJsonTest, Shape) {
  ConditionalOutcome o = ns_gate(FockState::vacuum(ModeRegistry::spatial({"C"})), {0.5, 0.25});
  json j = to_json(o);
  EXPECT_EQ(j.at("pattern").at("anc:H"), 1);
  EXPECT_EQ(j.at("pattern").at("anc:V"), 0);
  EXPECT_NEAR(j.at("probability").get<double>(), 0.25, 1e-15);
  EXPECT_EQ(j.at("state").at("modes").size(), 2u);
}

TEST(CsReportJsonTest, Keys) {
  json j = to_json(cs_gate({0.5, 0.5, 0.5, 0.5}, {0.5, 0.5}));
  for (const char* key : {"input", "psi1", "psi2", "psi3", "psi4", "output", "success_probability", "gate_diagonal"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.size(), 8u);
  EXPECT_EQ(j.at("gate_diagonal").size(), 4u);
}

TEST(SweepCsvTest, HeaderAndRow) {
  std::ostringstream os;
  write_sweep_csv(os, sweep({{0.5, 0.5}}));
  std::istringstream in(os.str());
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header,
            "r_v,r_h,amp00_re,amp00_im,amp01_re,amp01_im,amp10_re,amp10_im,amp11_re,amp11_im,success_prob,fidelity");
  EXPECT_EQ(row, "0.5,0.5,0.25,0,0,0,0,0,-0.0625,0,0.06640625,0.367647058824");
  EXPECT_FALSE(std::getline(in, extra));
}

TEST(NumberFormatTest, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.0513207882808455), "0.0513207882808");
  EXPECT_EQ(rounded(json(0.7573593128807143)).dump(), "0.757359312881");
  EXPECT_EQ(rounded(json{{"x", {1.0 / 3.0}}, {"n", 2}}).dump(), R"({"n":2,"x":[0.333333333333]})");
}

}  // namespace
}  // namespace polcs
