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

#include "modeoverlap/circuits.hpp"

#include <cmath>
#include <limits>

#include "modeoverlap/errors.hpp"
#include "modeoverlap/partner.hpp"

namespace modeoverlap {

namespace {

void check_mode(int m, int n_modes) {
  if (n_modes < 1 || m < 0 || m >= n_modes) {
    throw IndexError("mode " + std::to_string(m) + " out of range for " +
                     std::to_string(n_modes) + " modes");
  }
}

void check_pair(int i, int j, int n_modes) {
  check_mode(i, n_modes);
  check_mode(j, n_modes);
  if (i == j) throw IndexError("two-mode gate needs distinct modes");
}

}  // namespace

std::string GateLabel::describe() const {
  switch (kind) {
    case Kind::squeezer:
      return "squeezer(r=" + std::to_string(parameter) + ", " +
             std::to_string(mode_i) + "," + std::to_string(mode_j) + ")";
    case Kind::beam_splitter:
      return "beam_splitter(theta=" + std::to_string(parameter) + ", " +
             std::to_string(mode_i) + "," + std::to_string(mode_j) + ")";
    case Kind::rotation:
      return "rotation(phi=" + std::to_string(parameter) + ", " +
             std::to_string(mode_i) + ")";
    case Kind::custom:
      return "custom";
  }
  return "custom";
}

SymplecticGate::SymplecticGate(Eigen::MatrixXd matrix, GateLabel label)
    : matrix_(std::move(matrix)), label_(label) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0 ||
      matrix_.rows() % 2 != 0) {
    throw DimensionError("gate matrix must be square of even size");
  }
  const Eigen::MatrixXd omega = symplectic_form(dim_modes());
  const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
  const double err =
      (matrix_.transpose() * omega * matrix_ - omega).cwiseAbs().maxCoeff();
  if (err > kIdentityTol * scale * scale) {
    throw Error("gate matrix is not symplectic (error " + std::to_string(err) +
                ")");
  }
}

SymplecticGate squeezer(double r, int i, int j, int n_modes) {
  check_pair(i, j, n_modes);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  const double ch = std::cosh(r), sh = std::sinh(r);
  s(2 * i, 2 * i) = s(2 * j, 2 * j) = ch;
  s(2 * i, 2 * j) = s(2 * j, 2 * i) = sh;
  s(2 * i + 1, 2 * i + 1) = s(2 * j + 1, 2 * j + 1) = ch;
  s(2 * i + 1, 2 * j + 1) = s(2 * j + 1, 2 * i + 1) = -sh;
  return SymplecticGate(std::move(s),
                        {GateLabel::Kind::squeezer, r, i, j});
}

SymplecticGate beam_splitter(double theta, int i, int j, int n_modes) {
  check_pair(i, j, n_modes);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  const double c = std::cos(theta), sn = std::sin(theta);
  for (int q = 0; q < 2; ++q) {
    s(2 * i + q, 2 * i + q) = c;
    s(2 * i + q, 2 * j + q) = sn;
    s(2 * j + q, 2 * i + q) = -sn;
    s(2 * j + q, 2 * j + q) = c;
  }
  return SymplecticGate(std::move(s),
                        {GateLabel::Kind::beam_splitter, theta, i, j});
}

SymplecticGate rotation(double phi, int mode, int n_modes) {
  check_mode(mode, n_modes);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  const double c = std::cos(phi), sn = std::sin(phi);
  s(2 * mode, 2 * mode) = c;
  s(2 * mode, 2 * mode + 1) = sn;
  s(2 * mode + 1, 2 * mode) = -sn;
  s(2 * mode + 1, 2 * mode + 1) = c;
  return SymplecticGate(std::move(s),
                        {GateLabel::Kind::rotation, phi, mode, -1});
}

SymplecticGate single_mode_squeezer(double r, int mode, int n_modes) {
  check_mode(mode, n_modes);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes);
  s(2 * mode, 2 * mode) = std::exp(-r);
  s(2 * mode + 1, 2 * mode + 1) = std::exp(r);
  return SymplecticGate(std::move(s));
}

SymplecticGate identity_gate(int n_modes) {
  if (n_modes < 1) throw DimensionError("need at least one mode");
  return SymplecticGate(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticGate compose(const SymplecticGate& second,
                       const SymplecticGate& first) {
  if (second.dim_modes() != first.dim_modes()) {
    throw DimensionError("gates act on different numbers of modes");
  }
  return SymplecticGate(second.matrix() * first.matrix());
}

GaussianState apply(const GaussianState& state, const SymplecticGate& g) {
  if (state.dim_modes() != g.dim_modes()) {
    throw DimensionError("gate and state sizes differ");
  }
  Eigen::MatrixXd sigma = g.matrix() * state.sigma() * g.matrix().transpose();
  return GaussianState(0.5 * (sigma + sigma.transpose()),
                       g.matrix() * state.mu());
}

GaussianState ho_state(double r, double theta) {
  GaussianState s = apply(GaussianState::vacuum(3), squeezer(r, 0, 1, 3));
  return apply(s, beam_splitter(theta, 1, 2, 3));
}

HoExampleResult ho_example(double r, double theta) {
  const GaussianState state = ho_state(r, theta);
  const ComplexStructure j = complex_structure(state);
  const ModeSubspace a = ModeSubspace::mode(3, 0);
  const ModeSubspace b = ModeSubspace::mode(3, 1);
  const ModeSubspace c = ModeSubspace::mode(3, 2);

  HoExampleResult out{};
  const PhaseVector gap = partner_basis_vector(j, a);
  out.weight_b = symplectic_product(b[0], gap);
  out.weight_c = symplectic_product(c[0], gap);

  const TwoModeBlocks blocks = two_mode_blocks(j, a, b);
  out.report = criterion(blocks);
  const double guard = std::abs(std::cos(theta));
  if (guard < 1e-6) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out.report.verdict = Verdict::not_applicable;
    out.report.d_sym = out.report.d_c = out.report.d_t = nan;
    out.report.w_delta = out.report.first_order_logneg = nan;
  }
  out.d_sym = out.report.d_sym;
  out.d_c = out.report.d_c;
  out.d_t = out.report.d_t;
  out.log_negativity = out.report.log_negativity;
  return out;
}

}  // namespace modeoverlap
