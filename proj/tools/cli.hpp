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

// Command-line front end. Kept in a header so the tests can drive run()
// in-process.

#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polcs/polcs.hpp"
#include "polcs/verify.hpp"

namespace polcs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;
  int m = 0;
  int n = 0;
  double a = 0.5, b = 0.5, c = 0.5, d = 0.5;
  double r_v = 0.5;
  double r_h = 0.5;
  bool magic = false;
  double alpha_deg = 0.0;
  double beta_deg = 0.0;
  double phi_rad = 0.0;
  int grid_steps = 21;
  std::string out_path;
  std::string format = "json";
};

namespace detail {

inline json matrix_to_json(const Matrix& u) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < u.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < u.cols(); ++j) row.push_back(complex_to_json(u(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline NsConfig reflectivities(const RunConfig& cfg) {
  if (cfg.magic) return magic_config();
  NsConfig ns{cfg.r_v, cfg.r_h};
  ns.validate();
  return ns;
}

inline json run_ns(const RunConfig& cfg) {
  NsConfig ns = reflectivities(cfg);
  const ModeRegistry reg = ModeRegistry::spatial({"C"});
  OccupationVector occ{static_cast<unsigned>(cfg.m), static_cast<unsigned>(cfg.n)};
  Amplitude closed = ns_closed_form(cfg.m, cfg.n, ns);
  ConditionalOutcome outcome = ns_gate(FockState::basis(reg, occ), ns);
  return {{"m", cfg.m},
          {"n", cfg.n},
          {"r_v", ns.r_v},
          {"r_h", ns.r_h},
          {"closed_form", complex_to_json(closed)},
          {"amplitude", complex_to_json(outcome.state.amplitude(occ))},
          {"success_probability", outcome.success_probability},
          {"outcome", to_json(outcome)}};
}

inline json run_cs(const RunConfig& cfg) {
  return to_json(cs_gate({cfg.a, cfg.b, cfg.c, cfg.d}, reflectivities(cfg)));
}

inline json run_solve() {
  MagicSolution s = solve_magic_reflectivities();
  json cands = json::array();
  for (const auto& c : s.candidates) {
    cands.push_back({{"r_h", c.r_h}, {"r_v", c.r_v}, {"accepted", c.accepted}, {"reason", c.reason}});
  }
  return {{"r_v", s.r_v},
          {"r_h", s.r_h},
          {"residuals", {s.single_photon_residual, s.two_photon_residual}},
          {"candidates", std::move(cands)}};
}

inline json run_angles(const RunConfig& cfg) {
  NsConfig r = reflectivities(cfg);
  PlateAngles a = reflectivity_to_angles(r.r_v, r.r_h);
  return {{"r_v", r.r_v},
          {"r_h", r.r_h},
          {"alpha_deg", radians_to_degrees(a.alpha)},
          {"beta_deg", radians_to_degrees(a.beta)}};
}

inline json run_composite(const RunConfig& cfg) {
  double alpha = degrees_to_radians(cfg.alpha_deg);
  double beta = degrees_to_radians(cfg.beta_deg);
  if (cfg.magic) {
    NsConfig r = magic_config();
    PlateAngles a = reflectivity_to_angles(r.r_v, r.r_h);
    alpha = a.alpha;
    beta = a.beta;
  }
  const ModeRegistry reg = ModeRegistry::spatial({"1", "2"});
  Transform t = composite_pol_bs(reg, alpha, beta, cfg.phi_rad, "1", "2");
  const double r_v = std::cos(alpha) * std::cos(alpha);
  const double r_h = std::cos(beta) * std::cos(beta);
  json modes = json::array();
  for (const auto& m : reg.modes()) modes.push_back(m.label());
  return {{"alpha_deg", radians_to_degrees(alpha)},
          {"beta_deg", radians_to_degrees(beta)},
          {"phi_rad", cfg.phi_rad},
          {"r_v", r_v},
          {"r_h", r_h},
          {"modes", std::move(modes)},
          {"matrix", matrix_to_json(t.matrix())},
          {"distance_to_ideal", max_entry_distance(t.matrix(), pol_beam_splitter(reg, r_v, r_h, "1", "2").matrix())},
          {"phase_deviation", phase_sensitivity(alpha, beta, {cfg.phi_rad}).front().deviation}};
}

inline std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  auto grid = uniform_grid(cfg.grid_steps);
  if (cfg.magic) {
    NsConfig r = magic_config();
    grid.emplace_back(r.r_v, r.r_h);
  }
  return sweep(grid);
}

}  // namespace detail

// Executes one command. Reports go to `out` (or --out), diagnostics to `err`.
// Returns 0 on success, 2 on invalid input, 1 when a check fails internally.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Polarization linear-optics gate simulator", "polcs"};
  app.require_subcommand(1);

  auto add_reflectivities = [&](CLI::App* sub) {
    auto* rv = sub->add_option("--r-v", cfg.r_v, "Vertical reflectivity")->check(CLI::Range(0.0, 1.0));
    auto* rh = sub->add_option("--r-h", cfg.r_h, "Horizontal reflectivity")->check(CLI::Range(0.0, 1.0));
    sub->add_flag("--magic", cfg.magic, "Use the reflectivities that equalize the gate diagonal")
        ->excludes(rv)
        ->excludes(rh);
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", cfg.out_path, "Write the report to this file");
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  auto* ns = app.add_subcommand("ns", "Single NS gate on |m_V; n_H>");
  ns->add_option("--m", cfg.m, "Vertical photons")->check(CLI::NonNegativeNumber);
  ns->add_option("--n", cfg.n, "Horizontal photons")->check(CLI::NonNegativeNumber);
  add_reflectivities(ns);
  add_output(ns);

  auto* cs = app.add_subcommand("cs", "Conditional-sign gate on a|00>+b|01>+c|10>+d|11>");
  cs->add_option("--a", cfg.a);
  cs->add_option("--b", cfg.b);
  cs->add_option("--c", cfg.c);
  cs->add_option("--d", cfg.d);
  add_reflectivities(cs);
  add_output(cs);

  auto* solve = app.add_subcommand("solve", "Solve for the diagonal-equalizing reflectivities");
  add_output(solve);

  auto* sw = app.add_subcommand("sweep", "Success probability and fidelity over a reflectivity grid");
  sw->add_option("--grid-steps", cfg.grid_steps, "Points per axis on [0,1]")->check(CLI::Range(2, 10001));
  sw->add_flag("--magic", cfg.magic, "Append the diagonal-equalizing point");
  add_output(sw);

  auto* angles = app.add_subcommand("angles", "Wave-plate angles for given reflectivities");
  add_reflectivities(angles);
  add_output(angles);

  auto* comp = app.add_subcommand("composite-bs", "Two-PBS four-HWP variable splitter");
  auto* alpha = comp->add_option("--alpha-deg", cfg.alpha_deg, "V-arm plate angle (degrees)");
  auto* beta = comp->add_option("--beta-deg", cfg.beta_deg, "H-arm plate angle (degrees)");
  comp->add_option("--phi-rad", cfg.phi_rad, "Inter-arm phase (radians)");
  comp->add_flag("--magic", cfg.magic, "Use the angles of the diagonal-equalizing splitter")
      ->excludes(alpha)
      ->excludes(beta);
  add_output(comp);

  auto* verify = app.add_subcommand("verify", "Run the acceptance checks");

  if (!args.empty() && !args.front().starts_with('-')) {
    const auto subs = app.get_subcommands([](const CLI::App*) { return true; });
    bool known = std::any_of(subs.begin(), subs.end(), [&](const CLI::App* sub) { return sub->check_name(args.front()); });
    if (!known) {
      err << "error: unknown command '" << args.front() << "'\n\n" << app.help();
      return kExitUsage;
    }
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  if (verify->parsed()) {
    std::vector<verify::CriterionResult> results = verify::run_all();
    return verify::print_table(out, results) ? kExitOk : kExitInternal;
  }

  if (cfg.format == "csv" && !sw->parsed()) {
    err << "error: --format csv is only available for sweep\n";
    return kExitUsage;
  }

  std::ostringstream payload;
  try {
    if (sw->parsed()) {
      std::vector<SweepRow> rows = detail::run_sweep(cfg);
      if (cfg.format == "csv") {
        write_sweep_csv(payload, rows);
      } else {
        json j = json::array();
        for (const auto& row : rows) j.push_back(to_json(row));
        payload << rounded(j).dump(2) << '\n';
      }
    } else {
      json report;
      if (ns->parsed()) report = detail::run_ns(cfg);
      if (cs->parsed()) report = detail::run_cs(cfg);
      if (solve->parsed()) report = detail::run_solve();
      if (angles->parsed()) report = detail::run_angles(cfg);
      if (comp->parsed()) report = detail::run_composite(cfg);
      payload << rounded(report).dump(2) << '\n';
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }

  if (cfg.out_path.empty()) {
    out << payload.str();
  } else {
    std::ofstream file(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << " for writing\n";
      return kExitUsage;
    }
    file << payload.str();
  }
  return kExitOk;
}

}  // namespace polcs::cli
