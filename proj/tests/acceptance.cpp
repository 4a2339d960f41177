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


// Acceptance run: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "field_oracle.hpp"
#include "modeoverlap/circuits.hpp"
#include "modeoverlap/commands.hpp"
#include "modeoverlap/errors.hpp"
#include "modeoverlap/field_modes.hpp"
#include "modeoverlap/gaussian_state.hpp"
#include "modeoverlap/measures.hpp"
#include "modeoverlap/partner.hpp"
#include "test_support.hpp"

using namespace modeoverlap;
using namespace testsupport;

namespace {

const double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int jobs() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

double j_squared_defect(const GaussianState& st) {
  const Eigen::MatrixXd j = complex_structure(st).matrix();
  return max_abs(j * j + Eigen::MatrixXd::Identity(j.rows(), j.cols()));
}

Outcome criterion_1() {
  double worst = 0.0;
  int missing = 0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 4 + t % 3;
    std::mt19937_64 rng(derive_seed(1001, t));
    const GaussianState st =
        random_state(n, StateSpec::pure_state(1.0), derive_seed(1002, t));
    const ComplexStructure j = complex_structure(st);
    const ModeSubspace a = orthonormalize({random_vector(n, rng)});
    const ModeSubspace b = independent_mode(a, rng);
    const auto proj = d_sym_projection(j, a, b);
    const auto det = d_sym_determinant(two_mode_blocks(j, a, b));
    if (!proj || !det) {
      ++missing;
      continue;
    }
    worst = std::max(worst, std::abs(*proj - *det));
  }
  return {worst <= 1e-9 && missing == 0,
          "max |proj - det| = " + fmt("%.3g", worst) +
              ", uncorrelated draws = " + std::to_string(missing)};
}

Outcome criterion_2() {
  RandomCheckConfig cfg;
  cfg.n_trials = 100000;
  cfg.seed = 42;
  cfg.jobs = jobs();
  const RandomCheckReport rep = random_check(cfg);
  // Independent brute-force partial transpose on the same draws.
  const StateSpec spec = StateSpec::mixed(cfg.nu_min, cfg.nu_max, cfg.max_squeeze);
  std::uint64_t brute_disagree = 0;
  for (std::uint64_t i = 0; i < cfg.n_trials; ++i) {
    const GaussianState st = random_state(2, spec, derive_seed(cfg.seed, i));
    const CriterionReport r = criterion(two_mode_blocks(st));
    const double nu = brute_nu_minus(st);
    if (std::abs(nu - 1.0) <= kBoundaryBand) continue;
    if (r.verdict == Verdict::not_applicable) continue;
    if ((r.d_t > 0.0) != (nu < 1.0)) ++brute_disagree;
  }
  const bool decided_enough =
      rep.n_entangled + rep.n_separable > rep.n_trials / 2;
  return {rep.n_disagreements == 0 && brute_disagree == 0 && decided_enough,
          std::to_string(rep.n_trials) + " states, entangled " +
              std::to_string(rep.n_entangled) + ", separable " +
              std::to_string(rep.n_separable) + ", boundary " +
              std::to_string(rep.n_boundary) + ", disagreements " +
              std::to_string(rep.n_disagreements) + ", vs brute-force PT " +
              std::to_string(brute_disagree)};
}

Outcome criterion_3() {
  double worst_sym = 0.0, worst_c = 0.0;
  for (int ir = 1; ir <= 20; ++ir) {
    const double r = 0.1 * ir;
    for (int it = 1; it <= 200; ++it) {
      const double th = kPi * it / 201.0;
      const HoExampleResult res = ho_example(r, th);
      worst_sym = std::max(worst_sym, std::abs(res.d_sym - closed_form_d_sym(r, th)));
      worst_c = std::max(worst_c, std::abs(res.d_c - closed_form_d_c(r, th)));
    }
  }
  double worst_zero = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const HoExampleResult res = ho_example(r, 0.0);
    worst_zero = std::max({worst_zero, std::abs(res.d_sym - 2.0),
                           std::abs(res.d_c + 2.0)});
  }
  return {worst_sym <= 1e-10 && worst_c <= 1e-10 && worst_zero <= 1e-10,
          "grid max err d_sym " + fmt("%.3g", worst_sym) + ", d_c " +
              fmt("%.3g", worst_c) + "; theta=0 err " + fmt("%.3g", worst_zero)};
}

Outcome criterion_4() {
  double worst = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const GaussianState st = tmsv(r);
    const CriterionReport rep = criterion(two_mode_blocks(st));
    const double nu = std::exp(-2.0 * r);
    const double en = 2.0 * r / std::log(2.0);
    worst = std::max({worst, std::abs(rep.nu_tilde_minus - nu),
                      std::abs(rep.log_negativity - en),
                      std::abs(brute_nu_minus(st) - nu)});
  }
  return {worst <= 1e-10, "max err " + fmt("%.3g", worst)};
}

Outcome criterion_5() {
  const ModeSubspace a = ModeSubspace::mode(3, 0);
  const PhaseVector gb = darboux_mode(3, 1), gc = darboux_mode(3, 2);
  double worst = 0.0;
  for (double r : {0.3, 1.0}) {
    for (int it = 1; it < 1000; ++it) {
      const double th = kPi * it / 1000.0;
      const ComplexStructure j = complex_structure(ho_state(r, th));
      const ModeSubspace expected({std::cos(th) * gb - std::sin(th) * gc});
      worst = std::max(worst, subspace_distance(partner_subspace(j, a), expected));
    }
  }
  const double at_zero = subspace_distance(
      partner_subspace(complex_structure(ho_state(0.7, 0.0)), a),
      ModeSubspace::mode(3, 1));
  const double at_half = subspace_distance(
      partner_subspace(complex_structure(ho_state(0.7, kPi / 2)), a),
      ModeSubspace::mode(3, 2));
  return {worst <= 1e-8 && at_zero <= 1e-8 && at_half <= 1e-8,
          "max distance " + fmt("%.3g", worst) + ", theta=0 -> B " +
              fmt("%.3g", at_zero) + ", theta=pi/2 -> C " + fmt("%.3g", at_half)};
}

// A lives in the modes of the first factor, B in the second; the global
// state is a product over that split.
Outcome criterion_6() {
  double worst = 0.0;
  int evaluated = 0;
  for (int t = 0; t < 1000; ++t) {
    std::mt19937_64 rng(derive_seed(6006, t));
    const int n1 = 2 + t % 2, n2 = 2 + (t / 2) % 2;
    const int n = n1 + n2;
    std::vector<int> first, second;
    for (int i = 0; i < n1; ++i) first.push_back(i);
    for (int i = n1; i < n; ++i) second.push_back(i);
    const Eigen::MatrixXd m = embed(random_symplectic(n1, rng, 1.0), n, first) *
                              embed(random_symplectic(n2, rng, 1.0), n, second);
    // Hide the split behind a global symplectic change of frame.
    const Eigen::MatrixXd g = random_symplectic(n, rng, 1.0);
    const ComplexStructure j =
        complex_structure(transform(GaussianState::vacuum(n), g * m));
    auto local_mode = [&](const std::vector<int>& modes) {
      Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * n);
      const PhaseVector v = random_vector(n, rng);
      for (int k : modes) c.segment<2>(2 * k) = v.coeffs().segment<2>(2 * k);
      return orthonormalize({PhaseVector(Eigen::VectorXcd(g.cast<cplx>() * c))});
    };
    const ModeSubspace a = local_mode(first);
    const ModeSubspace b = local_mode(second);
    try {
      worst = std::max(worst, std::abs(overlap(partner_subspace(j, a), b)));
      worst = std::max(worst, std::abs(overlap(a, partner_subspace(j, b))));
      ++evaluated;
    } catch (const NoPartnerError&) {
    }
  }
  return {worst <= 1e-10 && evaluated > 900,
          std::to_string(evaluated) + " states with partners, max |D_ApB| " +
              fmt("%.3g", worst)};
}

struct QuadFit {
  double c = 0.0;
  double r2 = 0.0;
};

// Least squares for residual = C d_t^2.
QuadFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  double sxy = 0.0, sxx = 0.0, mean = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    const double x2 = x[i] * x[i];
    sxy += x2 * y[i];
    sxx += x2 * x2;
    mean += y[i];
  }
  mean /= static_cast<double>(y.size());
  QuadFit f;
  f.c = sxy / sxx;
  double ss_res = 0.0, ss_tot = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    ss_res += std::pow(y[i] - f.c * x[i] * x[i], 2);
    ss_tot += std::pow(y[i] - mean, 2);
  }
  f.r2 = 1.0 - ss_res / ss_tot;
  return f;
}

// Median quadratic coefficient over random entangled states pushed into the
// window by isotropic noise; fills the worst R^2.
double small_entanglement_family(std::uint64_t seed, int bases, double& worst_r2,
                                 int& points) {
  std::vector<double> cs;
  for (std::uint64_t t = 0; static_cast<int>(cs.size()) < bases; ++t) {
    const GaussianState base =
        random_state(2, StateSpec::mixed(1.0, 1.5, 1.0), derive_seed(seed, t));
    if (criterion(two_mode_blocks(base)).d_t < 1e-2) continue;
    std::vector<double> x, y;
    for (int k = 0; k < 12; ++k) {
      const double target = std::pow(10.0, -5.0 + 2.0 * (k + 0.5) / 12.0);
      const double lambda = noise_for_dt(base, target);
      if (lambda <= 0.0) continue;
      const CriterionReport rep =
          criterion(two_mode_blocks(add_noise(base, lambda)));
      if (!(rep.d_t > 1e-5 && rep.d_t < 1e-3)) continue;
      x.push_back(rep.d_t);
      y.push_back(std::abs(rep.log_negativity - rep.w_delta * rep.d_t));
    }
    if (x.size() < 8) continue;
    const QuadFit f = fit_quadratic(x, y);
    worst_r2 = std::min(worst_r2, f.r2);
    points += static_cast<int>(x.size());
    cs.push_back(f.c);
  }
  std::nth_element(cs.begin(), cs.begin() + cs.size() / 2, cs.end());
  return cs[cs.size() / 2];
}

Outcome criterion_7() {
  double worst_r2 = 1.0;
  int points = 0;
  const double c1 = small_entanglement_family(7001, 25, worst_r2, points);
  const double c2 = small_entanglement_family(7002, 25, worst_r2, points);
  const double ratio = std::max(c1, c2) / std::min(c1, c2);
  return {worst_r2 > 0.99 && ratio < 10.0,
          std::to_string(points) + " points, min R^2 " + fmt("%.6f", worst_r2) +
              ", median C " + fmt("%.4g", c1) + " / " + fmt("%.4g", c2)};
}

bool decreasing(const std::vector<ScanPoint>& pts, std::string& why) {
  for (size_t i = 1; i < pts.size(); ++i) {
    const double prev = pts[i - 1].report.log_negativity;
    const double cur = pts[i].report.log_negativity;
    if (prev > 0.0 ? !(cur < prev) : cur != 0.0) {
      why = "not decreasing at index " + std::to_string(i);
      return false;
    }
  }
  return true;
}

std::vector<ScanPoint> g_scan_points;

Outcome criterion_8() {
  ScanSettings s;
  s.jobs = jobs();
  std::string why;
  bool ok = true;

  const std::vector<ScanPoint> sep = scan_separation(0.0, 0.5, 0.0, 0.2, 41, s);
  const std::vector<ScanPoint> mass = scan_mass(1.0, 0.5, 0.0, 3.0, 41, s);
  for (const auto* v : {&sep, &mass}) {
    for (const auto& p : *v) {
      if (!p.ok) {
        ok = false;
        why = "quadrature failed: " + p.error;
      }
    }
  }
  // (a)
  ok = ok && sep.front().report.log_negativity > 0.0 && decreasing(sep, why);
  double zero_gap = -1.0;
  for (const auto& p : sep) {
    if (p.report.log_negativity == 0.0) {
      zero_gap = p.parameter;
      break;
    }
  }
  ok = ok && zero_gap > 0.0;
  // (b)
  ok = ok && decreasing(mass, why) &&
       mass.front().report.log_negativity > mass.back().report.log_negativity;
  // (c)
  int sign_mismatch = 0;
  for (const auto* v : {&sep, &mass}) {
    for (const auto& p : *v) {
      if ((p.report.log_negativity > 0.0) != (p.report.d_t > 0.0)) ++sign_mismatch;
    }
  }
  ok = ok && sign_mismatch == 0;
  // (d)
  double worst_rel = 0.0;
  const RadialWindow a = RadialWindow::ball(1.0);
  for (double gap : {0.0, 0.1}) {
    const RadialWindow b = RadialWindow::shell(1.0 + gap, 0.5);
    for (double m : {0.0, 1.0}) {
      for (int power : {-1, 1}) {
        for (auto [x, y] : {std::pair{&a, &a}, std::pair{&b, &b}, std::pair{&a, &b}}) {
          const double k_space = pairing_integral(*x, *y, power, m).value;
          const double pos = fieldoracle::position_oracle(*x, *y, power, m);
          worst_rel = std::max(worst_rel, std::abs(k_space - pos) / std::abs(pos));
        }
      }
    }
  }
  ok = ok && worst_rel <= 1e-6;
  g_scan_points = sep;
  g_scan_points.insert(g_scan_points.end(), mass.begin(), mass.end());
  std::string detail = "E_N(gap 0) " + fmt("%.4g", sep.front().report.log_negativity) +
                       ", first zero at gap " + fmt("%.3g", zero_gap) +
                       ", E_N(mu 0..3) " + fmt("%.4g", mass.front().report.log_negativity) +
                       " -> " + fmt("%.4g", mass.back().report.log_negativity) +
                       ", sign mismatches " + std::to_string(sign_mismatch) +
                       ", oracle rel err " + fmt("%.3g", worst_rel);
  if (!why.empty()) detail += "; " + why;
  return {ok, detail};
}

Outcome criterion_9() {
  const std::vector<double> grid = log_grid(1e-2, 50.0, 400);
  const PartnerProfile prof = partner_profile(RadialWindow::ball(1.0), 0.0, grid);
  bool all_ok = std::all_of(prof.point_ok.begin(), prof.point_ok.end(),
                            [](bool b) { return b; });
  const FalloffFit f = falloff_exponent(grid, prof.f_ap, 10.0, 50.0);
  const FalloffFit g = falloff_exponent(grid, prof.g_ap, 10.0, 50.0);
  return {all_ok && std::abs(f.slope + 4.0) <= 0.3 && std::abs(g.slope + 2.0) <= 0.3,
          "f_Ap slope " + fmt("%.4f", f.slope) + ", g_Ap slope " +
              fmt("%.4f", g.slope) + " over " + std::to_string(f.samples) +
              " points in [10, 50]"};
}

Outcome criterion_10() {
  double pure_defect = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 5;
    pure_defect = std::max(pure_defect,
                           j_squared_defect(random_state(
                               n, StateSpec::pure_state(1.0), derive_seed(1010, t))));
  }
  for (int ir = 1; ir <= 20; ++ir) {
    for (int it = 0; it <= 20; ++it) {
      pure_defect = std::max(pure_defect,
                             j_squared_defect(ho_state(0.1 * ir, kPi * it / 20.0)));
    }
  }
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    pure_defect = std::max(pure_defect, j_squared_defect(tmsv(r)));
  }

  double nu_min = 2.0;
  for (int t = 0; t < 10000; ++t) {
    const int n = 2 + t % 3;
    const auto spec = williamson_spectrum(
        random_state(n, StateSpec::mixed(1.0, 3.0, 1.0), derive_seed(1011, t)));
    nu_min = std::min(nu_min, *std::min_element(spec.begin(), spec.end()));
  }

  double det_gap = 0.0;
  for (const auto& p : g_scan_points) {
    const RadialWindow a = RadialWindow::ball(1.0);
    const RadialWindow b = RadialWindow::shell(p.r_b, p.d_b);
    const PairingSet ps = compute_pairings(a, b, p.mu);
    const TwoModeBlocks bl = assemble_blocks(ps);
    const cplx det_a = bl.j_a.determinant(), det_b = bl.j_b.determinant();
    det_gap = std::max({det_gap, std::abs(det_a - ps.i_plus_aa * ps.i_minus_aa),
                        std::abs(det_b - ps.i_plus_bb * ps.i_minus_bb)});
  }
  return {pure_defect <= 1e-9 && nu_min >= 1.0 - 1e-9 && det_gap <= 1e-10 &&
              !g_scan_points.empty(),
          "max |J^2+1| " + fmt("%.3g", pure_defect) + ", min nu " +
              fmt("%.12f", nu_min) + ", max |det J - I+ I-| " +
              fmt("%.3g", det_gap) + " over " +
              std::to_string(g_scan_points.size()) + " field points"};
}

}  // namespace

int main() {
  struct Entry {
    int id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> entries = {
      {1, 30.0, criterion_1},  {2, 60.0, criterion_2},  {3, 0.0, criterion_3},
      {4, 0.0, criterion_4},   {5, 0.0, criterion_5},   {6, 0.0, criterion_6},
      {7, 0.0, criterion_7},   {8, 600.0, criterion_8}, {9, 120.0, criterion_9},
      {10, 0.0, criterion_10},
  };
  int failures = 0;
  for (const auto& e : entries) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = e.run();
    } catch (const std::exception& ex) {
      out = {false, std::string("exception: ") + ex.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (e.budget_s > 0.0 && secs >= e.budget_s) {
      out.pass = false;
      out.detail += "; over time budget " + fmt("%.0f s", e.budget_s);
    }
    if (!out.pass) ++failures;
    std::printf("%s criterion %d: %s (%.2f s)\n", out.pass ? "PASS" : "FAIL",
                e.id, out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
