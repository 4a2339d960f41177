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

#ifndef MODEOVERLAP_CIRCUITS_HPP
#define MODEOVERLAP_CIRCUITS_HPP

#include <string>

#include <Eigen/Dense>

#include "modeoverlap/gaussian_state.hpp"
#include "modeoverlap/measures.hpp"

namespace modeoverlap {

struct GateLabel {
  enum class Kind { squeezer, beam_splitter, rotation, custom };
  Kind kind = Kind::custom;
  double parameter = 0.0;
  int mode_i = -1;
  int mode_j = -1;

  std::string describe() const;
};

/// Dense symplectic matrix with S^T Omega S = Omega.
class SymplecticGate {
 public:
  SymplecticGate(Eigen::MatrixXd matrix, GateLabel label = {});

  int dim_modes() const { return static_cast<int>(matrix_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  const GateLabel& label() const { return label_; }

 private:
  Eigen::MatrixXd matrix_;
  GateLabel label_;
};

/// Two-mode squeezer: x-block [[ch, sh], [sh, ch]], p-block [[ch, -sh], [-sh, ch]].
SymplecticGate squeezer(double r, int i, int j, int n_modes);
/// x_i' = cos x_i + sin x_j, x_j' = -sin x_i + cos x_j; same for p.
SymplecticGate beam_splitter(double theta, int i, int j, int n_modes);
SymplecticGate rotation(double phi, int mode, int n_modes);
/// Single-mode squeezer diag(e^-r, e^r).
SymplecticGate single_mode_squeezer(double r, int mode, int n_modes);
SymplecticGate identity_gate(int n_modes);

/// second after first.
SymplecticGate compose(const SymplecticGate& second,
                       const SymplecticGate& first);

GaussianState apply(const GaussianState& state, const SymplecticGate& g);

/// Three oscillators: squeeze A,B by r then split B,C at angle theta.
GaussianState ho_state(double r, double theta);

struct HoExampleResult {
  /// <gamma_B, gamma_Ap> and <gamma_C, gamma_Ap>.
  cplx weight_b;
  cplx weight_c;
  double d_sym;
  double d_c;
  double d_t;
  double log_negativity;
  CriterionReport report;
};

HoExampleResult ho_example(double r, double theta);

}  // namespace modeoverlap

#endif  // MODEOVERLAP_CIRCUITS_HPP
