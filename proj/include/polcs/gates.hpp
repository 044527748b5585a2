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

// The polarization nonlinear sign-shift gate and the two-qubit
// conditional-sign gate assembled from two of them.

#pragma once

#include <array>
#include <cmath>
#include <string>

#include "polcs/elements.hpp"
#include "polcs/engine.hpp"
#include "polcs/errors.hpp"
#include "polcs/fock.hpp"

namespace polcs {

// Polarization-resolved reflection probabilities of the NS beam splitter.
struct NsConfig {
  double r_v = 0.5;
  double r_h = 0.5;

  void validate() const {
    if (!(r_v >= 0.0 && r_v <= 1.0) || !(r_h >= 0.0 && r_h <= 1.0)) {
      throw DomainError("NS reflectivities must lie in [0, 1] (got R_V=" + std::to_string(r_v) +
                        ", R_H=" + std::to_string(r_h) + ")");
    }
  }
};

// Success-branch amplitude multiplying |m_V; n_H>:
//   sqrt(R_V)^m sqrt(R_H)^(n-1) [R_H - n (1 - R_H)]
// For n = 0 the bracket and the negative power combine to sqrt(R_H).
inline Amplitude ns_closed_form(int m, int n, const NsConfig& cfg) {
  if (m < 0 || n < 0) throw DomainError("photon counts must be non-negative");
  cfg.validate();
  const double vertical = std::pow(std::sqrt(cfg.r_v), m);
  if (n == 0) return vertical * std::sqrt(cfg.r_h);
  const double horizontal = std::pow(std::sqrt(cfg.r_h), n - 1);
  return vertical * horizontal * (cfg.r_h - n * (1.0 - cfg.r_h));
}

// Mixes an H-polarized ancilla photon into `input` on a polarization-sensitive
// splitter and keeps the branch with exactly one H and no V photon at the
// ancilla detector. The input must occupy the (V, H) pair of one spatial mode.
inline ConditionalOutcome ns_gate(const FockState& input, const NsConfig& cfg) {
  cfg.validate();
  const ModeRegistry& reg = input.registry();
  if (reg.size() != 2 || reg[0].spatial != reg[1].spatial || reg[0].pol == reg[1].pol) {
    throw StructuralError("NS gate input must live on the V and H modes of one spatial mode");
  }
  const std::string& signal = reg[0].spatial;
  const std::string ancilla = signal == "anc" ? signal + "_anc" : "anc";

  FockState ancilla_state = FockState::basis(ModeRegistry::spatial({ancilla}), {0, 1});
  FockState joint = tensor(input, ancilla_state);
  FockState evolved = apply(joint, pol_beam_splitter(joint.registry(), cfg.r_v, cfg.r_h, signal, ancilla));
  return post_select(evolved, DetectionPattern{{{vmode(ancilla), 0u}, {hmode(ancilla), 1u}}});
}

// Wave plates of the conditional-sign network, in the order they are met.
// The defaults reproduce the intermediate states of the scheme term for term.
struct CsPlates {
  JonesMatrix combine = jones::rm90();  // input B, before the combining PBS
  JonesMatrix mix = jones::h45();       // mode C, before the first NS
  JonesMatrix swap = jones::rm90();     // between the two NS gates
  JonesMatrix unmix = jones::r45();     // after the second NS
  JonesMatrix restore = jones::rm90();  // output B, after the splitting PBS
};

struct CsReport {
  QubitAmplitudes input;
  FockState psi1{ModeRegistry{}};  // combined into mode C
  FockState psi2{ModeRegistry{}};  // after the first NS
  FockState psi3{ModeRegistry{}};  // after the second NS
  FockState psi4{ModeRegistry{}};  // split back into modes A, B
  QubitAmplitudes output;          // post-selected, unnormalized
  double first_ns_probability = 0.0;
  double success_probability = 0.0;
  std::array<Amplitude, 4> gate_diagonal{};
};

namespace detail {

inline const ModeRegistry& qubit_registry() {
  static const ModeRegistry reg = ModeRegistry::spatial({"A", "B"});
  return reg;
}

inline QubitAmplitudes read_qubits(const FockState& psi4) {
  // registry order: A:V, A:H, B:V, B:H
  return {psi4.amplitude({0, 0, 0, 0}), psi4.amplitude({0, 0, 0, 1}), psi4.amplitude({0, 1, 0, 0}),
          psi4.amplitude({0, 1, 0, 1})};
}

inline CsReport run_cs_pipeline(const QubitAmplitudes& input, const NsConfig& cfg, const CsPlates& plates) {
  const ModeRegistry& ab = qubit_registry();
  CsReport report;
  report.input = input;

  FockState s = encode_qubits(input, ab, hmode("A"), hmode("B"));
  s = apply(s, hwp(ab, plates.combine, "B").then(pbs(ab, "A", "B")));
  s = relabel(drop_empty_spatial(s, "B"), "A", "C");
  const ModeRegistry& c = s.registry();
  report.psi1 = apply(s, hwp(c, plates.mix, "C"));

  ConditionalOutcome first = ns_gate(report.psi1, cfg);
  report.psi2 = first.state;
  report.first_ns_probability = first.success_probability;

  ConditionalOutcome second = ns_gate(apply(report.psi2, hwp(c, plates.swap, "C")), cfg);
  report.psi3 = second.state;

  s = relabel(apply(report.psi3, hwp(c, plates.unmix, "C")), "C", "A");
  s = tensor(s, FockState::vacuum(ModeRegistry::spatial({"B"})));
  report.psi4 = apply(s, pbs(ab, "A", "B").then(hwp(ab, plates.restore, "B")));

  report.output = read_qubits(report.psi4);
  report.success_probability = squared_norm(report.psi4);
  return report;
}

}  // namespace detail

// Runs the full conditional-sign network with both NS post-selections
// applied in sequence. gate_diagonal holds the raw output amplitude for each
// computational basis input.
inline CsReport cs_gate(const QubitAmplitudes& input, const NsConfig& cfg, const CsPlates& plates = {}) {
  cfg.validate();
  CsReport report = detail::run_cs_pipeline(input, cfg, plates);
  for (std::size_t k = 0; k < 4; ++k) {
    std::array<Amplitude, 4> e{};
    e[k] = 1.0;
    report.gate_diagonal[k] = detail::run_cs_pipeline(QubitAmplitudes::from_array(e), cfg, plates).output.as_array()[k];
  }
  return report;
}

inline QubitAmplitudes cs_closed_form(const QubitAmplitudes& input, const NsConfig& cfg) {
  cfg.validate();
  const double single = std::sqrt(cfg.r_v * cfg.r_h) * (1.0 - 2.0 * cfg.r_h);
  const double both = -cfg.r_h * cfg.r_v * (2.0 - 3.0 * cfg.r_h);
  return {cfg.r_h * input.a, single * input.b, single * input.c, both * input.d};
}

// The whole network as one unitary with both ancillas (spatial modes N1, N2)
// left undetected.
struct UnconditionedCs {
  FockState state;
  std::vector<ModeId> detectors;  // N1:V, N1:H, N2:V, N2:H
  DetectionPattern success;       // one H photon and no V photon in each
};

inline UnconditionedCs cs_unconditioned(const QubitAmplitudes& input, const NsConfig& cfg,
                                        const CsPlates& plates = {}) {
  cfg.validate();
  const ModeRegistry& ab = detail::qubit_registry();
  const ModeRegistry ancillas = ModeRegistry::spatial({"N1", "N2"});
  FockState s = tensor(encode_qubits(input, ab, hmode("A"), hmode("B")), FockState::basis(ancillas, {0, 1, 0, 1}));
  const ModeRegistry& reg = s.registry();

  Transform network = hwp(reg, plates.combine, "B")
                          .then(pbs(reg, "A", "B"))
                          .then(hwp(reg, plates.mix, "A"))
                          .then(pol_beam_splitter(reg, cfg.r_v, cfg.r_h, "A", "N1"))
                          .then(hwp(reg, plates.swap, "A"))
                          .then(pol_beam_splitter(reg, cfg.r_v, cfg.r_h, "A", "N2"))
                          .then(hwp(reg, plates.unmix, "A"))
                          .then(pbs(reg, "A", "B"))
                          .then(hwp(reg, plates.restore, "B"));

  UnconditionedCs out{apply(s, network), {vmode("N1"), hmode("N1"), vmode("N2"), hmode("N2")}, {}};
  out.success.required = {{vmode("N1"), 0u}, {hmode("N1"), 1u}, {vmode("N2"), 0u}, {hmode("N2"), 1u}};
  return out;
}

}  // namespace polcs
