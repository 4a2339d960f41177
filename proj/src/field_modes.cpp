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

#include "modeoverlap/field_modes.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>

#include "modeoverlap/errors.hpp"
#include "modeoverlap/parallel.hpp"

namespace modeoverlap {

namespace {

constexpr double kPi = M_PI;

double sinc(double x) {
  if (std::abs(x) < 1e-4) return 1.0 - x * x / 6.0;
  return std::sin(x) / x;
}

// (sin x - x cos x) / x^2, odd in x.
double sin_minus_cos(double x) {
  if (std::abs(x) < 0.5) {
    // sum_{n>=1} (-1)^(n+1) 2n x^(2n-1) / (2n+1)!
    double x2 = x * x;
    double term = x / 3.0;  // n = 1
    double sum = term;
    for (int n = 2; n < 12; ++n) {
      term *= -x2 * n / ((n - 1.0) * (2.0 * n) * (2.0 * n + 1.0));
      sum += term;
    }
    return sum;
  }
  return (std::sin(x) - x * std::cos(x)) / (x * x);
}

// int_{c-h}^{c+h} r sin(q r + phi) dr.
double r_sin_primitive(double q, double phi, double c, double h) {
  const double alpha = phi + q * c;
  return 2.0 * c * std::sin(alpha) * h * sinc(q * h) +
         2.0 * std::cos(alpha) * h * h * sin_minus_cos(q * h);
}

double omega_power(double k, int power, double mass) {
  if (power == 0) return 1.0;
  const double om = std::hypot(k, mass);
  if (power == 1) return om;
  return om > 0.0 ? 1.0 / om : 0.0;
}

void check_power_mass(int power, double mass) {
  if (power < -1 || power > 1) {
    throw ConfigError("pairing power must be -1, 0 or 1");
  }
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    throw ConfigError("mass must be finite and non-negative");
  }
}

// Neumaier compensated sum.
struct CompensatedSum {
  double sum = 0.0;
  double c = 0.0;
  void add(double v) {
    double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      c += (sum - t) + v;
    } else {
      c += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + c; }
};

// GK31 on [a, b], bisected while the estimate exceeds max(rel * L1, abs_tol).
template <class F>
double panel_integral(const F& f, double a, double b, double rel, double abs_tol,
                      int depth, double* err) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  double e = 0.0, l1 = 0.0;
  const double v = GK::integrate(f, a, b, 0, 0.0, &e, &l1);
  if (depth <= 0 || e <= std::max(rel * l1, abs_tol)) {
    *err += e;
    return v;
  }
  const double m = 0.5 * (a + b);
  return panel_integral(f, a, m, rel, 0.5 * abs_tol, depth - 1, err) +
         panel_integral(f, m, b, rel, 0.5 * abs_tol, depth - 1, err);
}

}  // namespace

RadialWindow::RadialWindow(Kind kind, double inner, double outer)
    : kind_(kind), inner_(inner), outer_(outer) {
  if (kind_ == Kind::cos_sq_ball) {
    const double r = outer_;
    k_ = 2.0 / std::pow(r, 1.5) * std::sqrt(kPi / (2.0 * kPi * kPi - 15.0));
    uv_ = 2.0 * kPi * kPi * kPi * k_ / r;
  } else {
    const double rb = inner_, d = outer_ - inner_;
    const double shape = 3.0 * rb * rb / 8.0 + 3.0 * rb * d / 8.0 +
                         d * d * (0.125 - 15.0 / (64.0 * kPi * kPi));
    k_ = 1.0 / std::sqrt(4.0 * kPi * d * shape);
    uv_ = 4.0 * kPi * (2.0 * kPi * kPi * k_ / (d * d)) * (inner_ + outer_);
  }
  for (int i = 0; i < 5; ++i) {
    const int n = 2 * i + 2;
    moments_[i] = boost::math::quadrature::gauss<double, 30>::integrate(
        [&](double r) { return std::pow(r, n) * (*this)(r); }, inner_, outer_);
  }
}

RadialWindow RadialWindow::ball(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw ConfigError("ball radius must be positive");
  }
  return RadialWindow(Kind::cos_sq_ball, 0.0, radius);
}

RadialWindow RadialWindow::shell(double inner_radius, double width) {
  if (!(inner_radius > 0.0) || !(width > 0.0) || !std::isfinite(inner_radius) ||
      !std::isfinite(width)) {
    throw ConfigError("shell radius and width must be positive");
  }
  return RadialWindow(Kind::sin_sq_shell, inner_radius, inner_radius + width);
}

double RadialWindow::operator()(double r) const {
  if (r < inner_ || r > outer_) return 0.0;
  if (kind_ == Kind::cos_sq_ball) {
    const double c = std::cos(kPi * r / (2.0 * outer_));
    return k_ * c * c;
  }
  const double s = std::sin(kPi * (r - inner_) / width());
  return k_ * s * s;
}

double RadialWindow::derivative(double r) const {
  if (r < inner_ || r > outer_) return 0.0;
  if (kind_ == Kind::cos_sq_ball) {
    const double a = kPi / outer_;
    return -0.5 * k_ * a * std::sin(a * r);
  }
  const double b = 2.0 * kPi / width();
  return 0.5 * k_ * b * std::sin(b * (r - inner_));
}

double RadialWindow::laplacian(double r) const {
  if (r < inner_ || r > outer_) return 0.0;
  if (kind_ == Kind::cos_sq_ball) {
    const double a = kPi / outer_;
    return -0.5 * k_ * a * a * (std::cos(a * r) + 2.0 * sinc(a * r));
  }
  const double b = 2.0 * kPi / width();
  const double x = b * (r - inner_);
  return 0.5 * k_ * b * b * std::cos(x) + k_ * b * std::sin(x) / r;
}

double RadialWindow::asymptotic_onset() const {
  return 20.0 / (kind_ == Kind::cos_sq_ball ? outer_ : width());
}

double RadialWindow::moment(int n) const {
  if (n < 2 || n > 10 || n % 2 != 0) {
    throw ConfigError("moment order must be even in [2, 10]");
  }
  return moments_[(n - 2) / 2];
}

double RadialWindow::transform(double k) const {
  k = std::abs(k);
  if (k * outer_ < 0.05) {
    double sum = 0.0, coef = 1.0, k2n = 1.0;
    for (int n = 0; n < 5; ++n) {
      sum += coef * k2n * moments_[n];
      k2n *= k * k;
      coef *= -1.0 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    }
    return 4.0 * kPi * sum;
  }
  double integral;
  if (kind_ == Kind::cos_sq_ball) {
    const double a = kPi / outer_, c = 0.5 * outer_;
    integral = 0.5 * k_ *
               (r_sin_primitive(k, 0.0, c, c) +
                0.5 * r_sin_primitive(k + a, 0.0, c, c) +
                0.5 * r_sin_primitive(k - a, 0.0, c, c));
  } else {
    const double b = 2.0 * kPi / width();
    const double c = 0.5 * (inner_ + outer_), h = 0.5 * width();
    integral = 0.5 * k_ *
               (r_sin_primitive(k, 0.0, c, h) -
                0.5 * r_sin_primitive(k + b, -b * inner_, c, h) -
                0.5 * r_sin_primitive(k - b, b * inner_, c, h));
  }
  return 4.0 * kPi * integral / k;
}

double radial_ft(const RadialWindow& w, double k) { return w.transform(k); }

PairingResult pairing_integral(const RadialWindow& x, const RadialWindow& y,
                               int power, double mass,
                               const QuadratureOptions& opts) {
  check_power_mass(power, mass);
  auto integrand = [&](double k) {
    return k * k * omega_power(k, power, mass) * x.transform(k) *
           y.transform(k);
  };
  const double panel = 4.0 * kPi / (x.outer() + y.outer());
  const double onset = std::max(x.asymptotic_onset(), y.asymptotic_onset());
  const double env = 2.0 * (2.0 * x.uv_constant()) * (2.0 * y.uv_constant()) /
                     (4.0 * kPi * kPi);
  auto tail = [&](double kk) {
    if (power == 1) {
      return env * (1.0 / (4.0 * std::pow(kk, 4)) +
                    mass / (5.0 * std::pow(kk, 5)));
    }
    if (power == 0) return env / (5.0 * std::pow(kk, 5));
    return env / (6.0 * std::pow(kk, 6));
  };

  CompensatedSum sum;
  PairingResult out;
  double a = 0.0;
  double k_stop = std::numeric_limits<double>::infinity();
  while (a < k_stop) {
    const double b = a + panel;
    const double budget =
        1e-3 * opts.rel_tol * std::max(std::abs(sum.value()), opts.abs_floor);
    sum.add(panel_integral(integrand, a, b, 1e-13, budget, opts.max_depth,
                           &out.error_estimate));
    ++out.panels;
    a = b;
    if (!std::isfinite(k_stop) && a >= onset) {
      const double tol =
          opts.rel_tol * std::max(std::abs(sum.value()), opts.abs_floor);
      if (tail(a) <= 0.1 * tol) k_stop = a * std::max(1.0, opts.k_max_factor);
    }
    if (a > opts.k_max_limit) {
      throw QuadratureError("pairing integral did not reach its tail bound",
                            a, tail(a));
    }
  }
  out.value = sum.value() / (2.0 * kPi * kPi);
  out.tail_bound = tail(a) / (2.0 * kPi * kPi);
  out.error_estimate = out.error_estimate / (2.0 * kPi * kPi) + out.tail_bound;
  out.k_max = a;
  if (!std::isfinite(out.value)) {
    throw QuadratureError("pairing integral is not finite", a,
                          out.error_estimate);
  }
  return out;
}

double radial_inverse_transform(const RadialWindow& w, double r, int power,
                                double mass, double k_max) {
  check_power_mass(power, mass);
  if (!(r > 0.0)) throw ConfigError("radius must be positive");
  auto integrand = [&](double k) {
    return k * std::sin(k * r) * omega_power(k, power, mass) * w.transform(k);
  };
  const double panel = 2.0 * kPi / (r + w.outer());
  CompensatedSum sum;
  for (double a = 0.0; a < k_max; a += panel) {
    const double b = std::min(a + panel, k_max);
    double err = 0.0;
    sum.add(panel_integral(integrand, a, b, 1e-13, 1e-16, 6, &err));
  }
  return sum.value() / (2.0 * kPi * kPi * r);
}

double inverse_omega_convolution(const std::function<double(double)>& h,
                                 double lo, double hi, double r, double mass,
                                 double* error_estimate) {
  check_power_mass(-1, mass);
  if (!(r > 0.0)) throw ConfigError("radius must be positive");
  static thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  auto kernel = [&](double rp, double dist) {
    if (!(dist > 0.0)) return 0.0;
    if (mass == 0.0) return std::log1p(2.0 * std::min(r, rp) / dist);
    return boost::math::cyl_bessel_k(0, mass * dist) -
           boost::math::cyl_bessel_k(0, mass * (r + rp));
  };
  double total = 0.0, err_total = 0.0;
  auto piece = [&](double a, double b) {
    if (!(b > a)) return;
    const bool r_at_a = (a == r), r_at_b = (b == r);
    auto f = [&](double rp, double xc) {
      double dist;
      if (r_at_b && xc > 0.0) {
        dist = xc;
      } else if (r_at_a && xc < 0.0) {
        dist = -xc;
      } else {
        dist = std::abs(r - rp);
      }
      return rp * h(rp) * kernel(rp, dist);
    };
    double err = 0.0;
    total += integrator.integrate(f, a, b, 1e-13, &err);
    err_total += err;
  };
  if (r > lo && r < hi) {
    piece(lo, r);
    piece(r, hi);
  } else {
    piece(lo, hi);
  }
  if (error_estimate) *error_estimate = err_total / (kPi * r);
  return total / (kPi * r);
}

double omega_convolution(const RadialWindow& w, double r, int power,
                         double mass, double* error_estimate) {
  check_power_mass(power, mass);
  if (power == 0) return w(r);
  if (power == -1) {
    return inverse_omega_convolution([&](double x) { return w(x); }, w.inner(),
                                     w.outer(), r, mass, error_estimate);
  }
  return inverse_omega_convolution(
      [&](double x) { return mass * mass * w(x) - w.laplacian(x); }, w.inner(),
      w.outer(), r, mass, error_estimate);
}

PairingSet compute_pairings(const RadialWindow& a, const RadialWindow& b,
                            double mass, const QuadratureOptions& opts) {
  PairingSet p;
  p.mass = mass;
  auto run = [&](const RadialWindow& x, const RadialWindow& y, int power) {
    PairingResult r = pairing_integral(x, y, power, mass, opts);
    p.k_max = std::max(p.k_max, r.k_max);
    p.error_estimate += r.error_estimate;
    return r.value;
  };
  p.i_plus_aa = run(a, a, 1);
  p.i_minus_aa = run(a, a, -1);
  p.i_plus_bb = run(b, b, 1);
  p.i_minus_bb = run(b, b, -1);
  p.i_plus_ab = run(a, b, 1);
  p.i_minus_ab = run(a, b, -1);
  return p;
}

Eigen::Matrix4d pairing_covariance(const PairingSet& p) {
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s(0, 0) = p.i_minus_aa;
  s(1, 1) = p.i_plus_aa;
  s(2, 2) = p.i_minus_bb;
  s(3, 3) = p.i_plus_bb;
  s(0, 2) = s(2, 0) = p.i_minus_ab;
  s(1, 3) = s(3, 1) = p.i_plus_ab;
  return s;
}

TwoModeBlocks assemble_blocks(const PairingSet& p) {
  if (!(p.i_plus_aa > 0.0) || !(p.i_minus_aa > 0.0) || !(p.i_plus_bb > 0.0) ||
      !(p.i_minus_bb > 0.0)) {
    throw QuadratureError("self pairings must be positive", p.k_max,
                          p.error_estimate);
  }
  try {
    return two_mode_blocks(GaussianState(Eigen::MatrixXd(pairing_covariance(p))));
  } catch (const PhysicalityError& e) {
    throw QuadratureError(
        std::string("pairings violate physicality, quadrature insufficient: ") +
            e.what(),
        p.k_max, p.error_estimate);
  } catch (const InconsistentBlocksError& e) {
    throw QuadratureError(
        std::string("pairings give inconsistent blocks: ") + e.what(),
        p.k_max, p.error_estimate);
  }
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2) {
    throw ConfigError("log grid needs 0 < lo < hi and at least two points");
  }
  std::vector<double> g(points);
  const double step = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo * std::exp(step * i);
  g.back() = hi;
  return g;
}

PartnerProfile partner_profile(const RadialWindow& w, double mass,
                               std::span<const double> r_grid,
                               const QuadratureOptions& opts) {
  PartnerProfile out;
  out.i_plus = pairing_integral(w, w, 1, mass, opts).value;
  out.i_minus = pairing_integral(w, w, -1, mass, opts).value;
  out.det_ja = out.i_plus * out.i_minus;
  if (out.det_ja <= 1.0 + kValidationTol) {
    throw NearPureReductionError("det J_A is within tolerance of one");
  }
  const double norm = std::sqrt(out.det_ja - 1.0);
  for (size_t i = 0; i < r_grid.size(); ++i) {
    if (!(r_grid[i] > 0.0) || (i > 0 && !(r_grid[i] > r_grid[i - 1]))) {
      throw ConfigError("r grid must be positive and ascending");
    }
  }
  out.r_grid.assign(r_grid.begin(), r_grid.end());
  out.f_ap.resize(r_grid.size());
  out.g_ap.resize(r_grid.size());
  out.point_ok.resize(r_grid.size());
  for (size_t i = 0; i < r_grid.size(); ++i) {
    const double r = r_grid[i];
    double e_plus = 0.0, e_minus = 0.0;
    const double wf = omega_convolution(w, r, 1, mass, &e_plus);
    const double wi = omega_convolution(w, r, -1, mass, &e_minus);
    const double f = w(r);
    out.f_ap[i] = (wf - out.i_plus * f) / norm;
    out.g_ap[i] = -(wi - out.i_minus * f) / norm;
    const bool finite = std::isfinite(out.f_ap[i]) && std::isfinite(out.g_ap[i]);
    const double budget = 1e-8 * std::max(1e-6, std::abs(wf) + std::abs(wi));
    out.point_ok[i] = finite && e_plus + e_minus <= budget;
  }
  return out;
}

FalloffFit falloff_exponent(std::span<const double> r,
                            std::span<const double> values, double r_lo,
                            double r_hi) {
  if (r.size() != values.size()) {
    throw DimensionError("radii and values differ in length");
  }
  std::vector<double> lx, ly;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] < r_lo || r[i] > r_hi) continue;
    if (!(std::abs(values[i]) > 0.0) || !std::isfinite(values[i])) {
      throw Error("falloff window contains a zero or non-finite sample");
    }
    lx.push_back(std::log(r[i]));
    ly.push_back(std::log(std::abs(values[i])));
  }
  const int n = static_cast<int>(lx.size());
  if (n < 10) {
    throw Error("falloff fit needs at least 10 samples, got " +
                std::to_string(n));
  }
  double mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    mx += lx[i];
    my += ly[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (int i = 0; i < n; ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  FalloffFit fit;
  fit.samples = n;
  fit.slope = sxy / sxx;
  double rss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double res = ly[i] - my - fit.slope * (lx[i] - mx);
    rss += res * res;
  }
  fit.stderr_slope = std::sqrt(rss / (n - 2) / sxx);
  return fit;
}

ScanPoint evaluate_ball_shell(double mu, double r_b, double d_b,
                              const QuadratureOptions& opts) {
  ScanPoint pt;
  pt.mu = mu;
  pt.r_b = r_b;
  pt.d_b = d_b;
  if (!(r_b >= 1.0 - 1e-12)) {
    throw ConfigError("shell inner radius must satisfy R_B >= R_A");
  }
  if (!(d_b > 0.0) || !(mu >= 0.0)) {
    throw ConfigError("shell width must be positive and mass non-negative");
  }
  try {
    const RadialWindow a = RadialWindow::ball(1.0);
    const RadialWindow b = RadialWindow::shell(std::max(r_b, 1.0), d_b);
    const PairingSet p = compute_pairings(a, b, mu, opts);
    pt.k_max = p.k_max;
    pt.report = criterion(assemble_blocks(p));
    pt.ok = true;
  } catch (const QuadratureError& e) {
    pt.ok = false;
    pt.k_max = e.k_max();
    pt.error = e.what();
  }
  return pt;
}

namespace {

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 2 || !(hi > lo)) {
    throw ConfigError("scan needs steps >= 2 and an increasing range");
  }
  std::vector<double> g(steps);
  for (int i = 0; i < steps; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / (steps - 1);
  }
  return g;
}

template <class Eval>
std::vector<ScanPoint> run_scan(const std::vector<double>& grid, int jobs,
                                Eval&& eval) {
  std::vector<ScanPoint> rows(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    rows[i] = eval(grid[i]);
    rows[i].parameter = grid[i];
  });
  return rows;
}

}  // namespace

std::vector<ScanPoint> scan_separation(double mu, double d_b, double sep_min,
                                       double sep_max, int steps,
                                       const ScanSettings& settings) {
  if (sep_min < 0.0) throw ConfigError("separation must be non-negative");
  return run_scan(linear_grid(sep_min, sep_max, steps), settings.jobs,
                  [&](double sep) {
                    return evaluate_ball_shell(mu, 1.0 + sep, d_b,
                                               settings.quad);
                  });
}

std::vector<ScanPoint> scan_mass(double r_b, double d_b, double mu_min,
                                 double mu_max, int steps,
                                 const ScanSettings& settings) {
  if (mu_min < 0.0) throw ConfigError("mass must be non-negative");
  return run_scan(linear_grid(mu_min, mu_max, steps), settings.jobs,
                  [&](double mu) {
                    return evaluate_ball_shell(mu, r_b, d_b, settings.quad);
                  });
}

std::vector<ScanPoint> scan_width(double mu, double r_b, double d_min,
                                  double d_max, int steps,
                                  const ScanSettings& settings) {
  if (!(d_min > 0.0)) throw ConfigError("shell width must be positive");
  return run_scan(linear_grid(d_min, d_max, steps), settings.jobs,
                  [&](double d) {
                    return evaluate_ball_shell(mu, r_b, d, settings.quad);
                  });
}

}  // namespace modeoverlap
