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

#ifndef MODEOVERLAP_FIELD_MODES_HPP
#define MODEOVERLAP_FIELD_MODES_HPP

#include <array>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "modeoverlap/gaussian_state.hpp"
#include "modeoverlap/measures.hpp"

namespace modeoverlap {

/// Unit-norm spherically symmetric smearing window (4 pi int r^2 f^2 = 1).
class RadialWindow {
 public:
  enum class Kind { cos_sq_ball, sin_sq_shell };

  /// K cos^2(pi r / 2R) on [0, R].
  static RadialWindow ball(double radius);
  /// K sin^2(pi (r - R_B) / d) on [R_B, R_B + d].
  static RadialWindow shell(double inner_radius, double width);

  Kind kind() const { return kind_; }
  double inner() const { return inner_; }
  double outer() const { return outer_; }
  double width() const { return outer_ - inner_; }
  double norm_constant() const { return k_; }

  double operator()(double r) const;
  double derivative(double r) const;
  /// f'' + 2 f'/r inside the support, zero outside.
  double laplacian(double r) const;
  /// (4 pi / k) int r sin(kr) f(r) dr.
  double transform(double k) const;
  /// A with |f~(k)| <= 2 A / k^4 for k >= asymptotic_onset().
  double uv_constant() const { return uv_; }
  double asymptotic_onset() const;
  /// int r^n f(r) dr for n in {2, 4, 6, 8, 10}.
  double moment(int n) const;

 private:
  RadialWindow(Kind kind, double inner, double outer);

  Kind kind_;
  double inner_;
  double outer_;
  double k_ = 0.0;
  double uv_ = 0.0;
  std::array<double, 5> moments_{};
};

double radial_ft(const RadialWindow& w, double k);

struct QuadratureOptions {
  double rel_tol = 1e-10;
  /// Tolerance is rel_tol * max(|I|, abs_floor).
  double abs_floor = 1e-4;
  /// Multiplies the k_max picked by the tail bound.
  double k_max_factor = 1.0;
  double k_max_limit = 1e7;
  int max_depth = 10;
};

struct PairingResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double k_max = 0.0;
  double tail_bound = 0.0;
  int panels = 0;
};

/// (1/2 pi^2) int k^2 omega_k^p f~X f~Y dk with p in {-1, 0, 1}.
PairingResult pairing_integral(const RadialWindow& x, const RadialWindow& y,
                               int power, double mass,
                               const QuadratureOptions& opts = {});

/// (omega^p * f)(r) by the momentum-space radial inverse transform.
double radial_inverse_transform(const RadialWindow& w, double r, int power,
                                double mass, double k_max);

/// (omega^-1 * h)(r) for radial h supported on [lo, hi], position space.
double inverse_omega_convolution(const std::function<double(double)>& h,
                                 double lo, double hi, double r, double mass,
                                 double* error_estimate = nullptr);
/// (omega^p * f)(r) in position space; p = +1 uses omega^-1 (m^2 - Laplacian).
double omega_convolution(const RadialWindow& w, double r, int power,
                         double mass, double* error_estimate = nullptr);

struct PairingSet {
  double mass = 0.0;
  double i_plus_aa = 0, i_minus_aa = 0;
  double i_plus_bb = 0, i_minus_bb = 0;
  double i_plus_ab = 0, i_minus_ab = 0;
  double k_max = 0.0;
  double error_estimate = 0.0;
};

PairingSet compute_pairings(const RadialWindow& a, const RadialWindow& b,
                            double mass, const QuadratureOptions& opts = {});

/// Two-mode covariance of the pair of smeared modes.
Eigen::Matrix4d pairing_covariance(const PairingSet& p);
TwoModeBlocks assemble_blocks(const PairingSet& p);

struct PartnerProfile {
  std::vector<double> r_grid;
  std::vector<double> f_ap;
  std::vector<double> g_ap;
  std::vector<bool> point_ok;
  double det_ja = 0.0;
  double i_plus = 0.0;
  double i_minus = 0.0;
};

/// Log grid of `points` samples over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int points);

PartnerProfile partner_profile(const RadialWindow& w, double mass,
                               std::span<const double> r_grid,
                               const QuadratureOptions& opts = {});

struct FalloffFit {
  double slope = 0.0;
  double stderr_slope = 0.0;
  int samples = 0;
};

/// Least-squares slope of log|v| against log r for r in [r_lo, r_hi].
FalloffFit falloff_exponent(std::span<const double> r,
                            std::span<const double> values, double r_lo,
                            double r_hi);

/// One ball-shell configuration with R_A = 1.
struct ScanPoint {
  double parameter = 0.0;
  double mu = 0.0;
  double r_b = 1.0;
  double d_b = 0.5;
  CriterionReport report{};
  double k_max = 0.0;
  bool ok = false;
  std::string error;
};

ScanPoint evaluate_ball_shell(double mu, double r_b, double d_b,
                              const QuadratureOptions& opts = {});

struct ScanSettings {
  QuadratureOptions quad;
  int jobs = 1;
};

/// Rows over R_B - R_A in [sep_min, sep_max].
std::vector<ScanPoint> scan_separation(double mu, double d_b, double sep_min,
                                       double sep_max, int steps,
                                       const ScanSettings& settings = {});
/// Rows over mu in [mu_min, mu_max].
std::vector<ScanPoint> scan_mass(double r_b, double d_b, double mu_min,
                                 double mu_max, int steps,
                                 const ScanSettings& settings = {});
/// Rows over d_B in [d_min, d_max].
std::vector<ScanPoint> scan_width(double mu, double r_b, double d_min,
                                  double d_max, int steps,
                                  const ScanSettings& settings = {});

}  // namespace modeoverlap

#endif  // MODEOVERLAP_FIELD_MODES_HPP
