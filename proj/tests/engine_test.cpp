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

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "polcs/elements.hpp"
#include "polcs/engine.hpp"
#include "polcs/verify.hpp"

namespace polcs {
namespace {

const ModeRegistry kTwo({hmode("3"), hmode("4")});
const double kHalf = std::sqrt(0.5);

Transform balanced() { return beam_splitter(kTwo, 0.5, hmode("3"), hmode("4")); }

TEST(TransformTest, RejectsNonUnitary) {
  Matrix m(2, 2);
  m << 1.0, 0.1, 0.0, 1.0;
  EXPECT_THROW(Transform(kTwo, m), DomainError);
  EXPECT_THROW(Transform(kTwo, Matrix::Identity(3, 3)), StructuralError);
}

TEST(PermanentTest, KnownValues) {
  EXPECT_EQ(permanent(Matrix(0, 0)), Amplitude(1.0));
  Matrix ones = Matrix::Ones(4, 4);
  EXPECT_NEAR(permanent(ones).real(), 24.0, 1e-12);
  Matrix m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  EXPECT_NEAR(permanent(m).real(), 10.0, 1e-12);
  Matrix m3(3, 3);
  m3 << 1, 2, 3, 4, 5, 6, 7, 8, 9;
  // 1(45+48) + 2(36+42) + 3(32+35)
  EXPECT_NEAR(permanent(m3).real(), 450.0, 1e-12);
}

TEST(ApplyTest, SinglePhotonSplits) {
  FockState out = apply(FockState::basis(kTwo, {1, 0}), balanced());
  EXPECT_TRUE(states_close(out, make_state(kTwo, {{{1, 0}, kHalf}, {{0, 1}, kHalf}}), 1e-15));
}

TEST(ApplyTest, HongOuMandel) {
  FockState out = apply(FockState::basis(kTwo, {1, 1}), balanced());
  EXPECT_EQ(out.amplitude({1, 1}), Amplitude(0.0));
  EXPECT_NEAR(std::abs(out.amplitude({2, 0}) - (-kHalf)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(out.amplitude({0, 2}) - kHalf), 0.0, 1e-15);
}

TEST(ApplyTest, IdentityLeavesStateUnchanged) {
  ModeRegistry reg = ModeRegistry::spatial({"A", "B"});
  FockState s = make_state(reg, {{{1, 0, 2, 0}, 0.6}, {{0, 0, 0, 0}, Amplitude(0, 0.8)}});
  EXPECT_TRUE(states_close(apply(s, Transform::identity(reg)), s, 0.0));
}

TEST(ApplyTest, RegistryMismatch) {
  EXPECT_THROW(apply(FockState::vacuum(ModeRegistry::spatial({"X"})), balanced()), StructuralError);
}

TEST(TransitionAmplitudeTest, Examples) {
  EXPECT_NEAR(std::abs(transition_amplitude(Transform::identity(kTwo), {3, 0}, {3, 0}) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(transition_amplitude(balanced(), {1, 1}, {1, 1})), 0.0, 1e-15);
  FockState out = apply(FockState::basis(kTwo, {1, 1}), balanced());
  EXPECT_NEAR(std::abs(transition_amplitude(balanced(), {1, 1}, {2, 0}) - out.amplitude({2, 0})), 0.0, 1e-12);
  EXPECT_NEAR(transition_amplitude(balanced(), {1, 1}, {2, 0}).real(), -kHalf, 1e-15);
  EXPECT_EQ(transition_amplitude(balanced(), {1, 1}, {1, 0}), Amplitude(0.0));
}

class RandomUnitaryTest : public ::testing::TestWithParam<int> {};

TEST_P(RandomUnitaryTest, OracleNormAndPhotonNumber) {
  std::mt19937_64 rng(100 + GetParam());
  const auto m = static_cast<std::size_t>(2 + GetParam() % 3);
  std::vector<ModeId> modes;
  for (std::size_t i = 0; i < m; ++i) modes.push_back(hmode("m" + std::to_string(i)));
  ModeRegistry reg(modes);
  Transform t(reg, verify::random_unitary(static_cast<Eigen::Index>(m), rng));
  std::normal_distribution<double> g;

  // random superposition across sectors 0..3
  std::vector<std::pair<OccupationVector, Amplitude>> terms;
  for (unsigned n = 0; n <= 3; ++n) {
    for (const auto& occ : verify::occupations(m, n)) terms.push_back({occ, Amplitude(g(rng), g(rng))});
  }
  FockState s = make_state(reg, terms);
  FockState out = apply(s, t);
  EXPECT_NEAR(squared_norm(out), squared_norm(s), 1e-10 * squared_norm(s));

  for (const auto& [occ, amp] : out.terms()) EXPECT_LE(occ.total(), 3u);
  for (unsigned n = 0; n <= 3; ++n) {
    for (const auto& in : verify::occupations(m, n)) {
      FockState single = apply(FockState::basis(reg, in), t);
      for (const auto& [o, a] : single.terms()) {
        EXPECT_EQ(o.total(), n);
        EXPECT_NEAR(std::abs(a - transition_amplitude(t, in, o)), 0.0, 1e-10);
      }
    }
  }

  // composition: apply(apply(s, t1), t2) == apply(s, t1.then(t2))
  Transform t2(reg, verify::random_unitary(static_cast<Eigen::Index>(m), rng));
  EXPECT_TRUE(states_close(apply(apply(s, t), t2), apply(s, t.then(t2)), 1e-10));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomUnitaryTest, ::testing::Range(0, 12));

TEST(PostSelectTest, AncillaPhotonDetected) {
  ModeRegistry reg = ModeRegistry::spatial({"S", "D"});
  FockState s = FockState::basis(reg, {0, 0, 0, 1});
  ConditionalOutcome o = post_select(s, DetectionPattern{{{hmode("D"), 1u}, {vmode("D"), 0u}}});
  EXPECT_EQ(o.state.registry(), ModeRegistry::spatial({"S"}));
  EXPECT_EQ(o.state.amplitude({0, 0}), Amplitude(1.0));
  EXPECT_DOUBLE_EQ(o.success_probability, 1.0);
}

TEST(PostSelectTest, HongOuMandelSuppression) {
  FockState s = apply(FockState::basis(kTwo, {1, 1}), balanced());
  ConditionalOutcome o = post_select(s, DetectionPattern{{{hmode("4"), 1u}}});
  EXPECT_TRUE(o.state.empty());
  EXPECT_EQ(o.success_probability, 0.0);
}

TEST(PostSelectTest, UnknownModeIsStructural) {
  EXPECT_THROW(post_select(FockState::vacuum(kTwo), DetectionPattern{{{hmode("9"), 0u}}}), StructuralError);
}

TEST(OutcomeProbabilitiesTest, SplitPhoton) {
  FockState s = apply(FockState::basis(kTwo, {1, 0}), balanced());
  auto p = all_outcome_probabilities(s, {hmode("4")});
  ASSERT_EQ(p.size(), 2u);
  EXPECT_NEAR(p.at(OccupationVector{0}), 0.5, 1e-15);
  EXPECT_NEAR(p.at(OccupationVector{1}), 0.5, 1e-15);
}

TEST(OutcomeProbabilitiesTest, VacuumAndCompleteness) {
  auto vac = all_outcome_probabilities(FockState::vacuum(kTwo), {hmode("3"), hmode("4")});
  ASSERT_EQ(vac.size(), 1u);
  EXPECT_EQ(vac.at(OccupationVector{0, 0}), 1.0);

  FockState s = apply(FockState::basis(kTwo, {2, 1}), beam_splitter(kTwo, 0.3, hmode("3"), hmode("4")));
  double total = 0.0;
  for (const auto& [pattern, prob] : all_outcome_probabilities(s, {hmode("3"), hmode("4")})) total += prob;
  EXPECT_NEAR(total, 1.0, 1e-12);

  // post-selection completeness over every pattern of one detector
  double branches = 0.0;
  for (const auto& [pattern, prob] : all_outcome_probabilities(s, {hmode("4")})) {
    ConditionalOutcome o = post_select(s, DetectionPattern{{{hmode("4"), pattern[0]}}});
    EXPECT_NEAR(o.success_probability, prob, 1e-14);
    branches += o.success_probability;
  }
  EXPECT_NEAR(branches, 1.0, 1e-10);
}

}  // namespace
}  // namespace polcs
