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

#ifndef MODEOVERLAP_COMMANDS_HPP
#define MODEOVERLAP_COMMANDS_HPP

#include <cstdint>
#include <string>

#include "modeoverlap/io.hpp"

namespace modeoverlap {

/// Rows (theta, e_n, d_sym, d_c, d_t, verdict) over theta in (0, pi).
struct HoDemoConfig {
  double r = 0.5;
  int theta_steps = 200;
  int jobs = 1;
};

std::string ho_demo_csv(const HoDemoConfig& cfg);

struct BallShellConfig {
  std::string subcommand = "scan-separation";
  double mu = 0.0;
  double d_b = 0.5;
  double r_b = 1.0;
  double sep_min = 0.0;
  double sep_max = 0.2;
  double mu_min = 0.0;
  double mu_max = 3.0;
  double d_min = 0.05;
  double d_max = 4.0;
  int steps = 41;
  double tol = 1e-10;
  /// Largest k a pairing integral may reach before the point fails.
  double k_max_limit = 1e7;
  int jobs = 1;
  double r_min = 1e-2;
  double r_max = 50.0;
  int points = 400;
  double tail_min = 10.0;
  double tail_max = 50.0;

  void validate() const;
};

struct CommandOutput {
  std::string csv;
  json diagnostics;
  int exit_code = 0;
};

CommandOutput run_ball_shell(const BallShellConfig& cfg);

struct RandomCheckConfig {
  std::uint64_t n_trials = 100000;
  std::uint64_t seed = 42;
  int jobs = 1;
  double nu_min = 1.0;
  double nu_max = 3.0;
  double max_squeeze = 1.0;
};

struct RandomCheckReport {
  std::uint64_t n_trials = 0;
  std::uint64_t n_entangled = 0;
  std::uint64_t n_separable = 0;
  std::uint64_t n_boundary = 0;
  std::uint64_t n_not_applicable = 0;
  std::uint64_t n_disagreements = 0;
  /// (seed, det_JA, det_JB, det_JC, det_JAB, d_sym, d_c, d_t,
  /// nu_tilde_minus, log_negativity, verdict); filled on request.
  std::string rows_csv;
};

RandomCheckReport random_check(const RandomCheckConfig& cfg,
                               bool with_rows = false);
json to_json(const RandomCheckReport& r);

}  // namespace modeoverlap

#endif  // MODEOVERLAP_COMMANDS_HPP
