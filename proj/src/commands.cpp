// Copyright 2026 The modeoverlap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "modeoverlap/commands.hpp"

#include <cmath>
#include <vector>

#include "modeoverlap/circuits.hpp"
#include "modeoverlap/errors.hpp"
#include "modeoverlap/field_modes.hpp"
#include "modeoverlap/parallel.hpp"

namespace modeoverlap {

namespace {

std::string join_row(std::initializer_list<std::string> cells) {
  std::string out;
  bool first = true;
  for (const auto& c : cells) {
    if (!first) out += ",";
    out += c;
    first = false;
  }
  return out + "\n";
}

}  // namespace

std::string ho_demo_csv(const HoDemoConfig& cfg) {
  if (!(cfg.r > 0.0)) throw ConfigError("squeezing r must be positive");
  if (cfg.theta_steps < 2) throw ConfigError("theta-steps must be >= 2");
  std::vector<std::string> rows(cfg.theta_steps);
  parallel_for(rows.size(), cfg.jobs, [&](std::size_t i) {
    const double theta = M_PI * (i + 1.0) / (cfg.theta_steps + 1.0);
    const HoExampleResult h = ho_example(cfg.r, theta);
    rows[i] = join_row({format_real(theta), format_real(h.log_negativity),
                        format_real(h.d_sym), format_real(h.d_c),
                        format_real(h.d_t), to_string(h.report.verdict)});
  });
  std::string out = "theta,e_n,d_sym,d_c,d_t,verdict\n";
  for (const auto& r : rows) out += r;
  return out;
}

void BallShellConfig::validate() const {
  if (subcommand != "scan-separation" && subcommand != "scan-mass" &&
      subcommand != "scan-width" && subcommand != "partner-profile") {
    throw ConfigError("unknown ball-shell subcommand '" + subcommand + "'");
  }
  if (!(d_b > 0.0) || !(d_min > 0.0) || !(r_b >= 1.0) || !(r_min > 0.0)) {
    throw ConfigError("physical lengths must be positive and R_B >= R_A");
  }
  if (!(mu >= 0.0) || !(mu_min >= 0.0) || !(sep_min >= 0.0)) {
    throw ConfigError("mass and separation must be non-negative");
  }
  if (steps < 2 || points < 2) throw ConfigError("steps must be >= 2");
  if (!(sep_max > sep_min) || !(mu_max > mu_min) || !(d_max > d_min) ||
      !(r_max > r_min) || !(tail_max > tail_min)) {
    throw ConfigError("ranges must be increasing");
  }
  if (!(tol >= 1e-15) || tol >= 1e-2) {
    throw ConfigError("tol must be in [1e-15, 1e-2)");
  }
  if (!(k_max_limit > 0.0)) throw ConfigError("k-max-limit must be positive");
}

CommandOutput run_ball_shell(const BallShellConfig& cfg) {
  cfg.validate();
  ScanSettings settings;
  settings.quad.rel_tol = cfg.tol;
  settings.quad.k_max_limit = cfg.k_max_limit;
  settings.jobs = cfg.jobs;
  CommandOutput out;
  json failures = json::array();

  if (cfg.subcommand == "partner-profile") {
    const RadialWindow w = RadialWindow::ball(1.0);
    const auto grid = log_grid(cfg.r_min, cfg.r_max, cfg.points);
    const PartnerProfile p = partner_profile(w, cfg.mu, grid, settings.quad);
    out.csv = "r,f_ap,g_ap\n";
    for (size_t i = 0; i < grid.size(); ++i) {
      out.csv += join_row({format_real(p.r_grid[i]), format_real(p.f_ap[i]),
                           format_real(p.g_ap[i])});
      if (!p.point_ok[i]) failures.push_back({{"r", p.r_grid[i]}});
    }
    json tail = json::object();
    try {
      const FalloffFit ff =
          falloff_exponent(p.r_grid, p.f_ap, cfg.tail_min, cfg.tail_max);
      const FalloffFit fg =
          falloff_exponent(p.r_grid, p.g_ap, cfg.tail_min, cfg.tail_max);
      tail = {{"f_ap_slope", ff.slope},
              {"f_ap_stderr", ff.stderr_slope},
              {"g_ap_slope", fg.slope},
              {"g_ap_stderr", fg.stderr_slope},
              {"samples", ff.samples}};
    } catch (const Error& e) {
      tail = {{"error", e.what()}};
    }
    const double k_max =
        pairing_integral(w, w, 1, cfg.mu, settings.quad).k_max;
    out.diagnostics = {{"k_max", k_max},
                       {"tol", cfg.tol},
                       {"point_failures", failures},
                       {"det_ja", p.det_ja},
                       {"tail_window", {cfg.tail_min, cfg.tail_max}},
                       {"tail_fit", tail}};
    out.exit_code = failures.empty() ? 0 : 1;
    return out;
  }

  std::vector<ScanPoint> rows;
  std::string first;
  if (cfg.subcommand == "scan-separation") {
    first = "rb_minus_ra";
    rows = scan_separation(cfg.mu, cfg.d_b, cfg.sep_min, cfg.sep_max,
                           cfg.steps, settings);
  } else if (cfg.subcommand == "scan-mass") {
    first = "mu";
    rows = scan_mass(cfg.r_b, cfg.d_b, cfg.mu_min, cfg.mu_max, cfg.steps,
                     settings);
  } else {
    first = "d_b";
    rows = scan_width(cfg.mu, cfg.r_b, cfg.d_min, cfg.d_max, cfg.steps,
                      settings);
  }
  out.csv = first + ",d_sym,d_c,d_t,w_delta,w_dt,log_negativity,verdict\n";
  double k_max = 0.0;
  for (const auto& p : rows) {
    k_max = std::max(k_max, p.k_max);
    const auto& r = p.report;
    if (!p.ok) {
      failures.push_back({{"parameter", p.parameter}, {"error", p.error}});
      const std::string nan = format_real(std::nan(""));
      out.csv += join_row({format_real(p.parameter), nan, nan, nan, nan, nan,
                           nan, "failed"});
      continue;
    }
    out.csv += join_row(
        {format_real(p.parameter), format_real(r.d_sym), format_real(r.d_c),
         format_real(r.d_t), format_real(r.w_delta),
         format_real(r.w_delta * r.d_t), format_real(r.log_negativity),
         to_string(r.verdict)});
  }
  out.diagnostics = {
      {"k_max", k_max}, {"tol", cfg.tol}, {"point_failures", failures}};
  out.exit_code = failures.empty() ? 0 : 1;
  return out;
}

RandomCheckReport random_check(const RandomCheckConfig& cfg, bool with_rows) {
  if (cfg.n_trials < 1) throw ConfigError("n_trials must be >= 1");
  const StateSpec spec =
      StateSpec::mixed(cfg.nu_min, cfg.nu_max, cfg.max_squeeze);
  struct Trial {
    Verdict verdict;
    bool disagree;
    std::string row;
  };
  const std::size_t n = cfg.n_trials;
  std::vector<Trial> trials(n);
  parallel_for(n, cfg.jobs, [&](std::size_t i) {
    const std::uint64_t seed = derive_seed(cfg.seed, i);
    const TwoModeBlocks b = two_mode_blocks(random_state(2, spec, seed));
    const CriterionReport r = criterion(b);
    Trial t{r.verdict, false, {}};
    if (r.verdict == Verdict::entangled || r.verdict == Verdict::separable) {
      const bool by_overlap = r.d_t > 0.0;
      const bool by_ppt = r.nu_tilde_minus < 1.0;
      t.disagree = by_overlap != by_ppt;
    }
    if (with_rows) {
      t.row = join_row({std::to_string(seed), format_real(b.det_ja),
                        format_real(b.det_jb), format_real(b.det_jc),
                        format_real(b.det_jab), format_real(r.d_sym),
                        format_real(r.d_c), format_real(r.d_t),
                        format_real(r.nu_tilde_minus),
                        format_real(r.log_negativity), to_string(r.verdict)});
    }
    trials[i] = std::move(t);
  });

  RandomCheckReport rep;
  rep.n_trials = n;
  if (with_rows) {
    rep.rows_csv =
        "seed,det_JA,det_JB,det_JC,det_JAB,d_sym,d_c,d_t,nu_tilde_minus,"
        "log_negativity,verdict\n";
  }
  for (const auto& t : trials) {
    switch (t.verdict) {
      case Verdict::entangled:
        ++rep.n_entangled;
        break;
      case Verdict::separable:
        ++rep.n_separable;
        break;
      case Verdict::boundary:
        ++rep.n_boundary;
        break;
      case Verdict::not_applicable:
        ++rep.n_not_applicable;
        break;
    }
    if (t.disagree) ++rep.n_disagreements;
    if (with_rows) rep.rows_csv += t.row;
  }
  return rep;
}

json to_json(const RandomCheckReport& r) {
  return {{"n_trials", r.n_trials},
          {"n_entangled", r.n_entangled},
          {"n_separable", r.n_separable},
          {"n_boundary", r.n_boundary},
          {"n_not_applicable", r.n_not_applicable},
          {"n_disagreements", r.n_disagreements}};
}

}  // namespace modeoverlap
