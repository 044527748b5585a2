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

// Acceptance checks for the simulator, shared by the `verify` CLI command
// and the acceptance test binary. Every check compares the simulation
// against an independent route: closed forms transcribed from the scheme,
// permanents, or exact algebraic constants.

#pragma once

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "polcs/analysis.hpp"
#include "polcs/elements.hpp"
#include "polcs/engine.hpp"
#include "polcs/fock.hpp"
#include "polcs/gates.hpp"

namespace polcs::verify {

// Exact reflectivities that equalize the gate diagonal.
inline const double kExactRv = 5.0 - 3.0 * std::numbers::sqrt2;
inline const double kExactRh = (3.0 - std::numbers::sqrt2) / 7.0;

inline Matrix random_unitary(Eigen::Index n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Matrix z(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) z(i, j) = Amplitude{gauss(rng), gauss(rng)};
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(n, n);
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < n; ++k) {
    Amplitude d = r(k, k);
    if (std::abs(d) > 0) q.col(k) *= d / std::abs(d);
  }
  return q;
}

inline QubitAmplitudes random_qubits(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  std::array<Amplitude, 4> v;
  double norm = 0.0;
  for (auto& z : v) {
    z = {gauss(rng), gauss(rng)};
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return QubitAmplitudes::from_array(v);
}

// Every occupation vector over `modes` modes with exactly `photons` photons.
inline std::vector<OccupationVector> occupations(std::size_t modes, unsigned photons) {
  std::vector<OccupationVector> out;
  std::vector<unsigned> c(modes, 0);
  auto recurse = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == modes) {
      c[i] = left;
      out.emplace_back(c);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      c[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (modes > 0) recurse(recurse, 0, photons);
  return out;
}

// Intermediate states of the conditional-sign network over (C:V, C:H),
// written out term by term from the closed-form expansion.
struct ExpectedStages {
  FockState psi1, psi2, psi3;
};

inline ExpectedStages transcribed_stages(const QubitAmplitudes& q, const NsConfig& cfg) {
  const ModeRegistry c = ModeRegistry::spatial({"C"});
  const double s2 = std::numbers::sqrt2;
  const double rv = cfg.r_v, rh = cfg.r_h;
  const auto [a, b, cc, d] = q.as_array();
  const double srh = std::sqrt(rh), srvrh = std::sqrt(rv * rh);
  return {
      make_state(c, {{{0, 0}, a},
                     {{0, 1}, (b - cc) / s2},
                     {{1, 0}, (b + cc) / s2},
                     {{0, 2}, -d / s2},
                     {{2, 0}, d / s2}}),
      make_state(c, {{{0, 0}, srh * a},
                     {{0, 1}, -(1 - 2 * rh) * (b - cc) / s2},
                     {{1, 0}, srvrh * (b + cc) / s2},
                     {{0, 2}, srh * (2 - 3 * rh) * d / s2},
                     {{2, 0}, rv * srh * d / s2}}),
      make_state(c, {{{0, 0}, rh * a},
                     {{0, 1}, srvrh * (1 - 2 * rh) * (b + cc) / s2},
                     {{1, 0}, -srvrh * (1 - 2 * rh) * (b - cc) / s2},
                     {{0, 2}, -rv * rh * (2 - 3 * rh) * d / s2},
                     {{2, 0}, rv * rh * (2 - 3 * rh) * d / s2}}),
  };
}

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace detail

inline CriterionResult ns_closed_form_vs_simulation() {
  const std::vector<double> rs{0.1, kExactRh, 0.5, kExactRv, 0.9};
  const ModeRegistry c = ModeRegistry::spatial({"C"});
  double worst = 0.0;
  for (double rv : rs) {
    for (double rh : rs) {
      NsConfig cfg{rv, rh};
      for (unsigned m = 0; m <= 3; ++m) {
        for (unsigned n = 0; n <= 3; ++n) {
          ConditionalOutcome o = ns_gate(FockState::basis(c, {m, n}), cfg);
          FockState expected = make_state(c, {{{m, n}, ns_closed_form(static_cast<int>(m), static_cast<int>(n), cfg)}});
          worst = std::max(worst, max_amplitude_difference(o.state, expected));
        }
      }
    }
  }
  return {1, "NS closed form vs simulation", worst <= 1e-12, "max error " + detail::sci(worst)};
}

inline CriterionResult critical_case_zero() {
  ConditionalOutcome o = ns_gate(FockState::basis(ModeRegistry::spatial({"C"}), {0, 1}), NsConfig{0.5, 0.5});
  double amp = std::abs(o.state.amplitude({0, 1}));
  return {2, "critical-case zero at R_H = 1/2", amp < 1e-12 && o.success_probability < 1e-24,
          "|amp| " + detail::sci(amp)};
}

inline CriterionResult intermediate_states(std::uint64_t seed = 3) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<NsConfig> cfgs;
  for (int i = 0; i < 10; ++i) cfgs.push_back({unif(rng), unif(rng)});
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    QubitAmplitudes q = random_qubits(rng);
    for (const auto& cfg : cfgs) {
      CsReport r = polcs::detail::run_cs_pipeline(q, cfg, {});
      ExpectedStages e = transcribed_stages(q, cfg);
      worst = std::max({worst, max_amplitude_difference(r.psi1, e.psi1), max_amplitude_difference(r.psi2, e.psi2),
                        max_amplitude_difference(r.psi3, e.psi3)});
    }
  }
  return {3, "intermediate states match closed forms", worst <= 1e-12, "max error " + detail::sci(worst)};
}

inline CriterionResult magic_point_gate() {
  NsConfig cfg{kExactRv, kExactRh};
  CsReport r = cs_gate({0.5, 0.5, 0.5, 0.5}, cfg);
  const std::array<double, 4> target{kExactRh, kExactRh, kExactRh, -kExactRh};
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) worst = std::max(worst, std::abs(r.gate_diagonal[i] - target[i]));
  const double p_exact = (3.0 - std::numbers::sqrt2) * (3.0 - std::numbers::sqrt2) / 49.0;
  const double p_err = std::abs(r.success_probability - p_exact);
  return {4, "gate diagonal R_H(1,1,1,-1) at magic point", worst <= 1e-12 && p_err <= 1e-12,
          "diag error " + detail::sci(worst) + ", P=" + std::to_string(r.success_probability)};
}

inline CriterionResult solver() {
  MagicSolution s = solve_magic_reflectivities();
  double err = std::max(std::abs(s.r_v - kExactRv), std::abs(s.r_h - kExactRh));
  double res = std::max(std::abs(s.single_photon_residual), std::abs(s.two_photon_residual));
  return {5, "magic reflectivity solver", err <= 1e-10 && res < 1e-12,
          "error " + detail::sci(err) + ", residual " + detail::sci(res)};
}

inline CriterionResult angles() {
  PlateAngles a = reflectivity_to_angles(kExactRv, kExactRh);
  double alpha = radians_to_degrees(a.alpha), beta = radians_to_degrees(a.beta);
  double round_trip = std::max(std::abs(std::pow(std::cos(a.alpha), 2) - kExactRv),
                               std::abs(std::pow(std::cos(a.beta), 2) - kExactRh));
  bool ok = std::abs(alpha - 29.5) <= 0.05 && std::abs(beta - 61.6) <= 0.05 && round_trip <= 1e-12;
  return {6, "plate angles at magic point", ok,
          "alpha " + std::to_string(alpha) + " deg, beta " + std::to_string(beta) + " deg"};
}

inline CriterionResult composite_splitter() {
  PlateAngles a = reflectivity_to_angles(kExactRv, kExactRh);
  const ModeRegistry reg = ModeRegistry::spatial({"1", "2"});
  double dist = max_entry_distance(composite_pol_bs(reg, a.alpha, a.beta, 0.0, "1", "2").matrix(),
                                   pol_beam_splitter(reg, kExactRv, kExactRh, "1", "2").matrix());
  double dev = phase_sensitivity(a.alpha, a.beta, {std::numbers::pi}).front().deviation;
  return {7, "composite splitter equals ideal splitter; phase sensitive", dist <= 1e-9 && dev > 0.1,
          "distance " + detail::sci(dist) + ", deviation at pi " + std::to_string(dev)};
}

inline CriterionResult engine_oracle(std::uint64_t seed = 8) {
  auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t pairs = 0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t m = 1 + static_cast<std::size_t>(k % 4);
    std::vector<ModeId> modes;
    for (std::size_t i = 0; i < m; ++i) modes.push_back(hmode(std::to_string(i)));
    ModeRegistry reg(std::move(modes));
    Transform t(reg, random_unitary(static_cast<Eigen::Index>(m), rng));
    for (unsigned n = 0; n <= 4; ++n) {
      const auto sector = occupations(m, n);
      for (const auto& in : sector) {
        FockState out = apply(FockState::basis(reg, in), t);
        for (const auto& o : sector) {
          worst = std::max(worst, std::abs(out.amplitude(o) - transition_amplitude(t, in, o)));
          ++pairs;
        }
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {8, "apply vs permanent oracle", worst <= 1e-10 && secs < 30.0,
          std::to_string(pairs) + " pairs, max error " + detail::sci(worst) + ", " + std::to_string(secs) + " s"};
}

inline CriterionResult probability_completeness(std::uint64_t seed = 9) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 5; ++k) {
    UnconditionedCs u = cs_unconditioned(random_qubits(rng), NsConfig{unif(rng), unif(rng)});
    double total = 0.0;
    for (const auto& [pattern, p] : all_outcome_probabilities(u.state, u.detectors)) total += p;
    worst = std::max(worst, std::abs(total - 1.0));
  }
  {
    UnconditionedCs u = cs_unconditioned({0.5, 0.5, 0.5, 0.5}, NsConfig{kExactRv, kExactRh});
    double total = 0.0;
    for (const auto& [pattern, p] : all_outcome_probabilities(u.state, u.detectors)) total += p;
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return {9, "ancilla outcome probabilities sum to 1", worst <= 1e-10, "max deviation " + detail::sci(worst)};
}

inline CriterionResult fidelity_landscape() {
  auto grid = uniform_grid(21);
  grid.emplace_back(kExactRv, kExactRh);
  std::vector<SweepRow> rows = sweep(grid);
  const SweepRow& magic = rows.back();
  bool ok = std::abs(magic.process_fidelity - 1.0) <= 1e-9;
  for (const auto& row : rows) {
    bool corner = (row.r_v == 0.0 || row.r_v == 1.0) && (row.r_h == 0.0 || row.r_h == 1.0);
    if (corner && !(row.process_fidelity < magic.process_fidelity)) ok = false;
  }
  // (1/2, 0, 0, -1/8) -> 0.625^2 / (4 * 0.265625)
  const double half_expected = 0.625 * 0.625 / (4.0 * 0.265625);
  double half = -1.0;
  for (const auto& row : rows) {
    if (row.r_v == 0.5 && row.r_h == 0.5) half = row.process_fidelity;
  }
  ok = ok && std::abs(half - half_expected) <= 1e-3;
  return {10, "fidelity landscape", ok,
          "F(magic)=" + std::to_string(magic.process_fidelity) + ", F(0.5,0.5)=" + std::to_string(half)};
}

inline std::vector<CriterionResult> run_all() {
  return {ns_closed_form_vs_simulation(), critical_case_zero(), intermediate_states(), magic_point_gate(),
          solver(),  angles(), composite_splitter(), engine_oracle(), probability_completeness(),
          fidelity_landscape()};
}

inline bool print_table(std::ostream& os, const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const auto& r : results) {
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << "  (" << r.detail << ")\n";
    all = all && r.passed;
  }
  os << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
  return all;
}

}  // namespace polcs::verify
