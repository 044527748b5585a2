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

// Reflectivity solver, reflectivity/angle conversion, diagonal-gate fidelity,
// parameter sweeps and interferometer phase sensitivity.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "polcs/elements.hpp"
#include "polcs/errors.hpp"
#include "polcs/gates.hpp"

namespace polcs {

struct RootCandidate {
  double r_h = 0.0;
  double r_v = 0.0;
  bool accepted = false;
  std::string reason;
};

struct MagicSolution {
  double r_v = 0.0;
  double r_h = 0.0;
  // sqrt(R_V R_H)(1 - 2R_H) - R_H and R_H R_V (2 - 3R_H) - R_H
  double single_photon_residual = 0.0;
  double two_photon_residual = 0.0;
  std::vector<RootCandidate> candidates;
};

namespace detail {

inline double bisect(const std::function<double(double)>& f, double lo, double hi, double tol) {
  double flo = f(lo);
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0) == (flo < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline std::pair<double, double> magic_residuals(double r_v, double r_h) {
  return {std::sqrt(r_v * r_h) * (1.0 - 2.0 * r_h) - r_h, r_h * r_v * (2.0 - 3.0 * r_h) - r_h};
}

}  // namespace detail

// Finds (R_V, R_H) in (0,1)^2 that make the |00>, |01>/|10> and |11>
// amplitudes of the conditional-sign gate equal.
//
// For R_H > 0 the two-photon condition gives R_V = 1 / (2 - 3 R_H).
// Substituting into the single-photon condition and squaring leaves
// 7 R_H^2 - 6 R_H + 1 = 0. Its roots are bracketed on a grid over (0, 1),
// refined by bisection, and kept only if R_V lands in (0, 1) and both
// unsquared conditions hold.
inline MagicSolution solve_magic_reflectivities(double tol = 1e-15) {
  if (!(tol > 0.0)) throw DomainError("solver tolerance must be positive");
  auto reduced = [](double r) { return 7.0 * r * r - 6.0 * r + 1.0; };

  MagicSolution sol;
  constexpr int kGrid = 1000;
  bool found = false;
  for (int i = 0; i < kGrid; ++i) {
    double lo = static_cast<double>(i) / kGrid;
    double hi = static_cast<double>(i + 1) / kGrid;
    if ((reduced(lo) < 0) == (reduced(hi) < 0)) continue;
    RootCandidate cand;
    cand.r_h = detail::bisect(reduced, lo, hi, tol);
    double denom = 2.0 - 3.0 * cand.r_h;
    cand.r_v = denom != 0.0 ? 1.0 / denom : std::numeric_limits<double>::infinity();
    auto [res1, res2] = detail::magic_residuals(cand.r_v, cand.r_h);
    if (!(cand.r_v > 0.0 && cand.r_v < 1.0)) {
      cand.reason = "R_V = " + std::to_string(cand.r_v) + " outside (0, 1)";
    } else if (std::abs(res1) > 1e-9 || std::abs(res2) > 1e-9) {
      cand.reason = "spurious root of the squared condition";
    } else {
      cand.accepted = true;
      if (!found) {
        sol.r_v = cand.r_v;
        sol.r_h = cand.r_h;
        sol.single_photon_residual = res1;
        sol.two_photon_residual = res2;
        found = true;
      }
    }
    sol.candidates.push_back(std::move(cand));
  }
  if (!found) throw DomainError("no admissible reflectivity pair in (0, 1)^2");
  return sol;
}

inline NsConfig magic_config() {
  MagicSolution sol = solve_magic_reflectivities();
  return {sol.r_v, sol.r_h};
}

struct PlateAngles {
  double alpha = 0.0;  // radians, V arm
  double beta = 0.0;   // radians, H arm
};

// R = cos^2(angle), principal branch in [0, pi/2].
inline PlateAngles reflectivity_to_angles(double r_v, double r_h) {
  detail::check_reflectivity(r_v, "R_V");
  detail::check_reflectivity(r_h, "R_H");
  return {std::acos(std::sqrt(r_v)), std::acos(std::sqrt(r_h))};
}

// |<d, z>|^2 / (4 |d|^2) with z = (1, 1, 1, -1).
inline double process_fidelity(const std::array<Amplitude, 4>& diag) {
  constexpr std::array<double, 4> target{1.0, 1.0, 1.0, -1.0};
  Amplitude overlap{};
  double norm = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    overlap += std::conj(diag[i]) * target[i];
    norm += std::norm(diag[i]);
  }
  if (norm == 0.0) throw DomainError("process fidelity of an all-zero diagonal is undefined");
  return std::norm(overlap) / (4.0 * norm);
}

struct SweepRow {
  double r_v = 0.0;
  double r_h = 0.0;
  std::array<Amplitude, 4> amplitudes{};
  double success_probability = 0.0;
  double process_fidelity = 0.0;
};

inline SweepRow sweep_point(double r_v, double r_h, const QubitAmplitudes& input) {
  NsConfig cfg{r_v, r_h};
  QubitAmplitudes out = cs_closed_form(input, cfg);
  SweepRow row{r_v, r_h, out.as_array(), out.squared_norm(), 0.0};
  // The gate diagonal is the output for unit input weights.
  std::array<Amplitude, 4> diag = cs_closed_form({1.0, 1.0, 1.0, 1.0}, cfg).as_array();
  bool all_zero = std::all_of(diag.begin(), diag.end(), [](Amplitude x) { return std::abs(x) == 0.0; });
  row.process_fidelity = all_zero ? 0.0 : process_fidelity(diag);
  return row;
}

// One row per grid point, in input order. The default input is the uniform
// superposition (1/2)(1,1,1,1). A configuration with no success branch
// reports fidelity 0.
inline std::vector<SweepRow> sweep(const std::vector<std::pair<double, double>>& grid,
                                   const QubitAmplitudes& input = {0.5, 0.5, 0.5, 0.5}) {
  for (const auto& [r_v, r_h] : grid) NsConfig{r_v, r_h}.validate();
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (const auto& [r_v, r_h] : grid) rows.push_back(sweep_point(r_v, r_h, input));
  return rows;
}

// steps x steps points on [0,1]^2, R_V outer, R_H inner.
inline std::vector<std::pair<double, double>> uniform_grid(int steps) {
  if (steps < 2) throw DomainError("grid needs at least 2 steps per axis");
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < steps; ++i) {
    for (int j = 0; j < steps; ++j) {
      grid.emplace_back(static_cast<double>(i) / (steps - 1), static_cast<double>(j) / (steps - 1));
    }
  }
  return grid;
}

struct PhaseDeviation {
  double phi = 0.0;
  double deviation = 0.0;
};

// Max-entry distance of the composite splitter at phase phi from the
// aligned (phi = 0) interferometer.
inline std::vector<PhaseDeviation> phase_sensitivity(double alpha, double beta, const std::vector<double>& phis) {
  const ModeRegistry reg = ModeRegistry::spatial({"1", "2"});
  const Matrix aligned = composite_pol_bs(reg, alpha, beta, 0.0, "1", "2").matrix();
  std::vector<PhaseDeviation> out;
  out.reserve(phis.size());
  for (double phi : phis) {
    out.push_back({phi, max_entry_distance(composite_pol_bs(reg, alpha, beta, phi, "1", "2").matrix(), aligned)});
  }
  return out;
}

}  // namespace polcs
