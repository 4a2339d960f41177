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

#ifndef MODEOVERLAP_SYMPLECTIC_HPP
#define MODEOVERLAP_SYMPLECTIC_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace modeoverlap {

using cplx = std::complex<double>;

/// Tolerances shared across modules.
inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kValidationTol = 1e-9;
inline constexpr double kConditionLimit = 1e8;

/// Complex phase-space vector in Darboux ordering (x1, p1, ..., xN, pN).
class PhaseVector {
 public:
  PhaseVector() = default;
  explicit PhaseVector(Eigen::VectorXcd coeffs);
  explicit PhaseVector(const Eigen::VectorXd& coeffs);

  static PhaseVector zero(int n_modes);
  /// Real unit vector along Darboux coordinate `index`.
  static PhaseVector unit(int n_modes, int index);

  int dim_modes() const { return static_cast<int>(coeffs_.size() / 2); }
  const Eigen::VectorXcd& coeffs() const { return coeffs_; }
  cplx operator[](int i) const { return coeffs_[i]; }

  PhaseVector conjugate() const;
  double euclidean_norm() const { return coeffs_.norm(); }

  PhaseVector operator+(const PhaseVector& o) const;
  PhaseVector operator-(const PhaseVector& o) const;
  PhaseVector operator-() const;
  PhaseVector& operator+=(const PhaseVector& o);
  PhaseVector& operator-=(const PhaseVector& o);
  friend PhaseVector operator*(cplx a, const PhaseVector& v);
  friend PhaseVector operator*(const PhaseVector& v, cplx a) { return a * v; }
  PhaseVector operator/(cplx a) const;

 private:
  Eigen::VectorXcd coeffs_;
};

/// Matrix Omega^{ab}: N blocks [[0,1],[-1,0]].
Eigen::MatrixXd symplectic_form(int n_modes);

/// <u,v> = (1/i) Omega(u*, v), conjugate-linear in u.
cplx symplectic_product(const PhaseVector& u, const PhaseVector& v);

/// Standard annihilation-type vector of mode `mode`: (i e_x + e_p)/sqrt2.
PhaseVector darboux_mode(int n_modes, int mode);

/// Symplectically orthonormal family {gamma_I}; conjugates are implied.
class ModeSubspace {
 public:
  ModeSubspace() = default;
  /// Validates the Gram conditions at `tol`, scaled by the basis norms.
  explicit ModeSubspace(std::vector<PhaseVector> basis,
                        double tol = kValidationTol);

  /// Single Darboux mode of an N-mode space.
  static ModeSubspace mode(int n_modes, int mode);
  /// Several Darboux modes.
  static ModeSubspace modes(int n_modes, std::span<const int> which);

  int ambient_dim_modes() const { return ambient_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<PhaseVector>& basis() const { return basis_; }
  const PhaseVector& operator[](int i) const { return basis_[i]; }

  /// Columns gamma_1..gamma_k, gamma_1*..gamma_k*.
  Eigen::MatrixXcd spanning_matrix() const;

 private:
  int ambient_ = 0;
  std::vector<PhaseVector> basis_;
};

/// Pi_S v = sum_I gamma_I<gamma_I,v> - gamma_I*<gamma_I*,v>.
PhaseVector project(const ModeSubspace& s, const PhaseVector& v);
PhaseVector complement_project(const ModeSubspace& s, const PhaseVector& v);

/// Symplectic Gram-Schmidt with pivoting.
ModeSubspace orthonormalize(std::span<const PhaseVector> vectors);
ModeSubspace orthonormalize(const std::vector<PhaseVector>& vectors);

/// Basis of the union of two independent subspaces.
ModeSubspace direct_sum(const ModeSubspace& a, const ModeSubspace& b);

/// Sine of the largest principal angle between the complex spans.
/// Returns 1 when the dimensions differ.
double subspace_distance(const ModeSubspace& a, const ModeSubspace& b);

}  // namespace modeoverlap

#endif  // MODEOVERLAP_SYMPLECTIC_HPP
