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

// JSON and CSV encodings of states, outcomes, gate reports and sweeps.

#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "polcs/analysis.hpp"
#include "polcs/engine.hpp"
#include "polcs/fock.hpp"
#include "polcs/gates.hpp"

namespace polcs {

using json = nlohmann::json;

inline json complex_to_json(Amplitude z) { return {{"re", z.real()}, {"im", z.imag()}}; }

// {"modes": ["C:V", ...], "terms": [{"occ": [...], "re": x, "im": y}, ...]}
inline json to_json(const FockState& s) {
  json modes = json::array();
  for (const auto& m : s.registry().modes()) modes.push_back(m.label());
  json terms = json::array();
  for (const auto& [occ, amp] : s.terms()) {
    terms.push_back({{"occ", occ.counts}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  return {{"modes", std::move(modes)}, {"terms", std::move(terms)}};
}

inline FockState fock_state_from_json(const json& j) {
  try {
    std::vector<ModeId> modes;
    for (const auto& label : j.at("modes")) modes.push_back(ModeId::parse(label.get<std::string>()));
    std::vector<std::pair<OccupationVector, Amplitude>> terms;
    for (const auto& t : j.at("terms")) {
      terms.emplace_back(OccupationVector(t.at("occ").get<std::vector<unsigned>>()),
                         Amplitude{t.at("re").get<double>(), t.at("im").get<double>()});
    }
    return make_state(ModeRegistry(std::move(modes)), terms);
  } catch (const json::exception& e) {
    throw StructuralError(std::string("malformed Fock state JSON: ") + e.what());
  }
}

inline json to_json(const DetectionPattern& p) {
  json out = json::object();
  for (const auto& [mode, count] : p.required) out[mode.label()] = count;
  return out;
}

inline json to_json(const ConditionalOutcome& o) {
  return {{"pattern", to_json(o.pattern)}, {"probability", o.success_probability}, {"state", to_json(o.state)}};
}

inline json to_json(const QubitAmplitudes& q) {
  return {{"a", complex_to_json(q.a)}, {"b", complex_to_json(q.b)}, {"c", complex_to_json(q.c)},
          {"d", complex_to_json(q.d)}};
}

inline json to_json(const CsReport& r) {
  json diag = json::array();
  for (Amplitude z : r.gate_diagonal) diag.push_back(complex_to_json(z));
  return {{"input", to_json(r.input)},
          {"psi1", to_json(r.psi1)},
          {"psi2", to_json(r.psi2)},
          {"psi3", to_json(r.psi3)},
          {"psi4", to_json(r.psi4)},
          {"output", to_json(r.output)},
          {"success_probability", r.success_probability},
          {"gate_diagonal", std::move(diag)}};
}

inline json to_json(const SweepRow& row) {
  json amps = json::array();
  for (Amplitude z : row.amplitudes) amps.push_back(complex_to_json(z));
  return {{"r_v", row.r_v},
          {"r_h", row.r_h},
          {"amplitudes", std::move(amps)},
          {"success_prob", row.success_probability},
          {"fidelity", row.process_fidelity}};
}

// Decimal text with 12 significant digits.
inline std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

inline double round_significant(double x) {
  if (x == 0.0) return 0.0;
  if (!std::isfinite(x)) return x;
  return std::strtod(format_number(x).c_str(), nullptr);
}

// Rounds every floating-point number in a document to 12 significant digits.
inline json rounded(json j) {
  if (j.is_number_float()) return round_significant(j.get<double>());
  if (j.is_structured()) {
    for (auto& child : j) child = rounded(child);
  }
  return j;
}

inline constexpr const char* kSweepCsvHeader =
    "r_v,r_h,amp00_re,amp00_im,amp01_re,amp01_im,amp10_re,amp10_im,amp11_re,amp11_im,success_prob,fidelity";

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    os << format_number(row.r_v) << ',' << format_number(row.r_h);
    for (Amplitude z : row.amplitudes) os << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    os << ',' << format_number(row.success_probability) << ',' << format_number(row.process_fidelity) << '\n';
  }
}

}  // namespace polcs
