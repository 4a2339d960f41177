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

#ifndef MODEOVERLAP_GAUSSIAN_STATE_HPP
#define MODEOVERLAP_GAUSSIAN_STATE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "modeoverlap/symplectic.hpp"

namespace modeoverlap {

/// Covariance sigma (vacuum = identity) and first moments mu.
class GaussianState {
 public:
  /// Throws PhysicalityError when a symplectic eigenvalue is below one.
  explicit GaussianState(Eigen::MatrixXd sigma, Eigen::VectorXd mu = {});

  static GaussianState vacuum(int n_modes);
  static GaussianState thermal(int n_modes, double nu);

  int dim_modes() const { return static_cast<int>(sigma_.rows() / 2); }
  const Eigen::MatrixXd& sigma() const { return sigma_; }
  const Eigen::VectorXd& mu() const { return mu_; }

 private:
  Eigen::MatrixXd sigma_;
  Eigen::VectorXd mu_;
};

/// J^a_b with sigma(u,v) = -i<u*, J v>.
class ComplexStructure {
 public:
  explicit ComplexStructure(Eigen::MatrixXd j);

  int dim_modes() const { return static_cast<int>(j_.rows() / 2); }
  const Eigen::MatrixXd& matrix() const { return j_; }
  PhaseVector apply(const PhaseVector& v) const;

 private:
  Eigen::MatrixXd j_;
};

ComplexStructure complex_structure(const GaussianState& state);

/// nu_I from the eigenvalues of J, descending.
std::vector<double> symplectic_spectrum(const ComplexStructure& j);
/// nu_I from the Hermitian matrix i sigma^1/2 Omega sigma^1/2, descending.
std::vector<double> williamson_spectrum(const GaussianState& state);

bool is_pure(const ComplexStructure& j, double tol = kValidationTol);
/// Euclidean residual of Pi_S^perp(J gamma) for each basis vector.
bool is_uncorrelated(const ComplexStructure& j, const ModeSubspace& s,
                     double tol = kValidationTol);

GaussianState reduce(const GaussianState& state, const ModeSubspace& s);

/// Restricted complex structure of two single modes A, B.
struct TwoModeBlocks {
  Eigen::Matrix4cd j_ab;
  Eigen::Matrix2cd j_a, j_b, j_c;
  double det_ja = 0, det_jb = 0, det_jc = 0, det_jab = 0;
  /// det J_X - 1 evaluated before rounding the determinant.
  double excess_ja = 0, excess_jb = 0, excess_jab = 0;
  double delta = 0;
  double delta_tilde = 0;
  double nu_tilde_plus = 0;
  double nu_tilde_minus = 0;
};

/// Partially transposed symplectic eigenvalues (plus, minus) from invariants.
std::pair<double, double> partially_transposed_eigenvalues(double det_ja,
                                                           double det_jb,
                                                           double det_jc,
                                                           double det_jab);

TwoModeBlocks two_mode_blocks(const ComplexStructure& j, const ModeSubspace& a,
                              const ModeSubspace& b);
/// Blocks between mode 0 and mode 1 of a two-mode state.
TwoModeBlocks two_mode_blocks(const GaussianState& two_mode);

struct StateSpec {
  bool pure = true;
  double nu_min = 1.0;
  double nu_max = 1.0;
  double max_squeeze = 1.0;

  static StateSpec pure_state(double max_squeeze = 1.0) {
    return {true, 1.0, 1.0, max_squeeze};
  }
  static StateSpec mixed(double nu_min, double nu_max,
                         double max_squeeze = 1.0) {
    return {false, nu_min, nu_max, max_squeeze};
  }
};

/// Haar-random passive (orthogonal symplectic) transformation.
Eigen::MatrixXd random_passive(int n_modes, std::mt19937_64& rng);
/// O2 * squeezers * O1 with squeezing uniform in [-max_squeeze, max_squeeze].
Eigen::MatrixXd random_symplectic(int n_modes, std::mt19937_64& rng,
                                  double max_squeeze);
GaussianState random_state(int n_modes, const StateSpec& spec,
                           std::uint64_t seed);

/// Seed of trial `index` of a run seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace modeoverlap

#endif  // MODEOVERLAP_GAUSSIAN_STATE_HPP
