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

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "modeoverlap/commands.hpp"
#include "modeoverlap/errors.hpp"

namespace mo = modeoverlap;

namespace {

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    mo::write_file_atomic(path, content);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic overlap and two-mode entanglement tools"};
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.require_subcommand(1);

  std::string out;
  int jobs = 1;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  app.add_option("--out", out, "Output path (stdout when omitted)")
      ->envname("MODEOVERLAP_OUT");
  app.add_option("--jobs", jobs, "Worker threads")
      ->envname("MODEOVERLAP_JOBS")
      ->check(CLI::Range(1, 1024));
  app.add_option("--seed", seed, "Random seed")->envname("MODEOVERLAP_SEED");
  app.add_option("--tol", tol, "Relative quadrature tolerance")
      ->envname("MODEOVERLAP_TOL")
      ->check(CLI::Range(1e-15, 1e-2));

  mo::HoDemoConfig ho;
  auto* ho_cmd = app.add_subcommand("ho-demo", "Three-oscillator example");
  ho_cmd->fallthrough();
  ho_cmd->add_option("--r", ho.r, "Two-mode squeezing")
      ->envname("MODEOVERLAP_R")
      ->capture_default_str();
  ho_cmd->add_option("--theta-steps", ho.theta_steps, "Beam-splitter angles")
      ->envname("MODEOVERLAP_THETA_STEPS")
      ->check(CLI::Range(2, 10000000))
      ->capture_default_str();

  mo::BallShellConfig bs;
  std::string diagnostics;
  auto* bs_cmd = app.add_subcommand("ball-shell", "Ball and shell field modes");
  bs_cmd->fallthrough();
  bs_cmd->require_subcommand(1);
  bs_cmd->add_option("--mu", bs.mu, "Field mass m R_A")->capture_default_str();
  bs_cmd->add_option("--d-b", bs.d_b, "Shell width")->capture_default_str();
  bs_cmd->add_option("--r-b", bs.r_b, "Shell inner radius")
      ->capture_default_str();
  bs_cmd->add_option("--sep-min", bs.sep_min, "Smallest gap R_B - R_A")->capture_default_str();
  bs_cmd->add_option("--sep-max", bs.sep_max, "Largest gap")->capture_default_str();
  bs_cmd->add_option("--mu-min", bs.mu_min, "Smallest mass")->capture_default_str();
  bs_cmd->add_option("--mu-max", bs.mu_max, "Largest mass")->capture_default_str();
  bs_cmd->add_option("--d-min", bs.d_min, "Smallest shell width")->capture_default_str();
  bs_cmd->add_option("--d-max", bs.d_max, "Largest shell width")->capture_default_str();
  bs_cmd->add_option("--steps", bs.steps, "Scan points")->capture_default_str();
  bs_cmd->add_option("--r-min", bs.r_min, "Profile grid start")
      ->capture_default_str();
  bs_cmd->add_option("--r-max", bs.r_max, "Profile grid end")
      ->capture_default_str();
  bs_cmd->add_option("--points", bs.points, "Profile grid size")
      ->capture_default_str();
  bs_cmd->add_option("--k-max-limit", bs.k_max_limit,
                     "Momentum cutoff at which a point is declared failed")
      ->capture_default_str();
  bs_cmd->add_option("--tail-min", bs.tail_min, "Tail fit start")->capture_default_str();
  bs_cmd->add_option("--tail-max", bs.tail_max, "Tail fit end")->capture_default_str();
  bs_cmd->add_option("--diagnostics", diagnostics,
                     "Diagnostics JSON path (default <out>.json or stderr)");
  const std::pair<const char*, const char*> bs_subs[] = {
      {"scan-separation", "Criterion along the gap between ball and shell"},
      {"scan-mass", "Criterion along the field mass"},
      {"scan-width", "Criterion along the shell width"},
      {"partner-profile", "Radial profiles of the partner of the ball"}};
  for (const auto& [name, what] : bs_subs) {
    bs_cmd->add_subcommand(name, what)->fallthrough();
  }

  mo::RandomCheckConfig rc;
  std::string rows;
  auto* rc_cmd =
      app.add_subcommand("random-check", "Monte-Carlo criterion check");
  rc_cmd->fallthrough();
  rc_cmd->add_option("--n-trials", rc.n_trials, "Random states")->capture_default_str();
  rc_cmd->add_option("--nu-min", rc.nu_min, "Smallest symplectic eigenvalue")->capture_default_str();
  rc_cmd->add_option("--nu-max", rc.nu_max, "Largest symplectic eigenvalue")->capture_default_str();
  rc_cmd->add_option("--max-squeeze", rc.max_squeeze, "Largest squeezing parameter")->capture_default_str();
  rc_cmd->add_option("--rows", rows, "Per-trial CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (ho_cmd->parsed()) {
      ho.jobs = jobs;
      emit(out, mo::ho_demo_csv(ho));
      return 0;
    }
    if (bs_cmd->parsed()) {
      bs.subcommand = bs_cmd->get_subcommands().front()->get_name();
      bs.tol = tol;
      bs.jobs = jobs;
      const mo::CommandOutput result = mo::run_ball_shell(bs);
      emit(out, result.csv);
      const std::string diag = result.diagnostics.dump(2) + "\n";
      if (!diagnostics.empty()) {
        mo::write_file_atomic(diagnostics, diag);
      } else if (!out.empty() && out != "-") {
        mo::write_file_atomic(out + ".json", diag);
      } else {
        std::cerr << diag;
      }
      return result.exit_code;
    }
    rc.seed = seed;
    rc.jobs = jobs;
    const mo::RandomCheckReport rep = mo::random_check(rc, !rows.empty());
    if (!rows.empty()) mo::write_file_atomic(rows, rep.rows_csv);
    emit(out, mo::to_json(rep).dump(2) + "\n");
    return rep.n_disagreements == 0 ? 0 : 1;
  } catch (const mo::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const mo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
