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

#include "modeoverlap/gaussian_state.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "modeoverlap/errors.hpp"

namespace modeoverlap {

namespace {

void require_square_even(const Eigen::MatrixXd& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw DimensionError(std::string(what) + " must be square of even size");
  }
}

std::vector<double> positive_half_sorted(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::vector<double> out;
  for (size_t i = 0; i < values.size(); i += 2) out.push_back(values[i]);
  return out;
}

std::vector<double> williamson_of(const Eigen::MatrixXd& sigma) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sigma);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw PhysicalityError("covariance is not positive definite",
                           std::max(0.0, es.eigenvalues().minCoeff()));
  }
  Eigen::MatrixXd root = es.operatorSqrt();
  const int n = static_cast<int>(sigma.rows() / 2);
  Eigen::MatrixXcd h = cplx(0.0, 1.0) *
                       (root * symplectic_form(n) * root).cast<cplx>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> hs(h, Eigen::EigenvaluesOnly);
  std::vector<double> vals(hs.eigenvalues().data(),
                           hs.eigenvalues().data() + hs.eigenvalues().size());
  for (auto& v : vals) v = std::abs(v);
  return positive_half_sorted(std::move(vals));
}

}  // namespace

GaussianState::GaussianState(Eigen::MatrixXd sigma, Eigen::VectorXd mu)
    : sigma_(std::move(sigma)), mu_(std::move(mu)) {
  require_square_even(sigma_, "covariance");
  if (!sigma_.allFinite()) throw Error("covariance has non-finite entries");
  const double scale = std::max(1.0, sigma_.cwiseAbs().maxCoeff());
  if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() >
      kIdentityTol * scale) {
    throw Error("covariance is not symmetric");
  }
  sigma_ = 0.5 * (sigma_ + sigma_.transpose()).eval();
  if (mu_.size() == 0) {
    mu_ = Eigen::VectorXd::Zero(sigma_.rows());
  } else if (mu_.size() != sigma_.rows()) {
    throw DimensionError("first moments do not match covariance size");
  }
  auto nu = williamson_of(sigma_);
  if (nu.back() < 1.0 - kValidationTol) {
    throw PhysicalityError(
        "symplectic eigenvalue " + std::to_string(nu.back()) + " below one",
        nu.back());
  }
}

GaussianState GaussianState::vacuum(int n_modes) {
  if (n_modes < 1) throw DimensionError("need at least one mode");
  return GaussianState(Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState GaussianState::thermal(int n_modes, double nu) {
  if (n_modes < 1) throw DimensionError("need at least one mode");
  return GaussianState(nu *
                       Eigen::MatrixXd::Identity(2 * n_modes, 2 * n_modes));
}

ComplexStructure::ComplexStructure(Eigen::MatrixXd j) : j_(std::move(j)) {
  require_square_even(j_, "complex structure");
}

PhaseVector ComplexStructure::apply(const PhaseVector& v) const {
  if (v.coeffs().size() != j_.rows()) {
    throw DimensionError("vector and complex structure sizes differ");
  }
  return PhaseVector(Eigen::VectorXcd(j_.cast<cplx>() * v.coeffs()));
}

ComplexStructure complex_structure(const GaussianState& state) {
  return ComplexStructure(-state.sigma() * symplectic_form(state.dim_modes()));
}

std::vector<double> symplectic_spectrum(const ComplexStructure& j) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(j.matrix(), false);
  std::vector<double> vals;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    vals.push_back(std::abs(es.eigenvalues()[i].imag()));
  }
  return positive_half_sorted(std::move(vals));
}

std::vector<double> williamson_spectrum(const GaussianState& state) {
  return williamson_of(state.sigma());
}

bool is_pure(const ComplexStructure& j, double tol) {
  const auto n = j.matrix().rows();
  Eigen::MatrixXd r = j.matrix() * j.matrix() + Eigen::MatrixXd::Identity(n, n);
  return r.cwiseAbs().maxCoeff() <= tol;
}

bool is_uncorrelated(const ComplexStructure& j, const ModeSubspace& s,
                     double tol) {
  if (s.ambient_dim_modes() != j.dim_modes()) {
    throw DimensionError("subspace and complex structure sizes differ");
  }
  for (const auto& g : s.basis()) {
    if (complement_project(s, j.apply(g)).euclidean_norm() > tol) return false;
  }
  return true;
}

GaussianState reduce(const GaussianState& state, const ModeSubspace& s) {
  if (s.ambient_dim_modes() != state.dim_modes()) {
    throw DimensionError("subspace and state sizes differ");
  }
  const int k = s.size();
  std::vector<PhaseVector> u;
  for (const auto& g : s.basis()) {
    u.emplace_back(Eigen::VectorXd(M_SQRT2 * g.coeffs().real()));
    u.emplace_back(Eigen::VectorXd(-M_SQRT2 * g.coeffs().imag()));
  }
  ComplexStructure j = complex_structure(state);
  Eigen::MatrixXd sigma(2 * k, 2 * k);
  Eigen::VectorXd mu(2 * k);
  const Eigen::MatrixXd omega = symplectic_form(state.dim_modes());
  for (int a = 0; a < 2 * k; ++a) {
    PhaseVector ju = j.apply(u[a]);
    for (int b = 0; b < 2 * k; ++b) {
      sigma(b, a) = (cplx(0.0, -1.0) * symplectic_product(u[b], ju)).real();
    }
    mu[a] = (omega * u[a].coeffs().real()).dot(state.mu());
  }
  return GaussianState(0.5 * (sigma + sigma.transpose()), mu);
}

std::pair<double, double> partially_transposed_eigenvalues(double det_ja,
                                                           double det_jb,
                                                           double det_jc,
                                                           double det_jab) {
  const double dt = det_ja + det_jb - 2.0 * det_jc;
  double disc = dt * dt - 4.0 * det_jab;
  if (disc < -kValidationTol * std::max(1.0, dt * dt)) {
    throw InconsistentBlocksError("partially transposed spectrum is complex");
  }
  disc = std::max(0.0, disc);
  const double s = dt + std::sqrt(disc);
  if (!(s > 0.0) || det_jab < 0.0) {
    throw InconsistentBlocksError("partially transposed spectrum is not real");
  }
  return {std::sqrt(0.5 * s), std::sqrt(2.0 * det_jab / s)};
}

TwoModeBlocks two_mode_blocks(const ComplexStructure& j, const ModeSubspace& a,
                              const ModeSubspace& b) {
  if (a.size() != 1 || b.size() != 1) {
    throw InvalidSubspaceError("two_mode_blocks needs single-mode subsystems");
  }
  if (a.ambient_dim_modes() != j.dim_modes() ||
      b.ambient_dim_modes() != j.dim_modes()) {
    throw DimensionError("subsystems and complex structure sizes differ");
  }
  const PhaseVector& ga = a[0];
  const PhaseVector& gb = b[0];
  const double cross =
      std::max(std::abs(symplectic_product(ga, gb)),
               std::abs(symplectic_product(ga, gb.conjugate())));
  if (cross > kValidationTol) {
    throw IndependenceError("subsystems A and B are not independent");
  }
  // Extended precision keeps det J_X - 1 accurate near pure reductions.
  using lcplx = std::complex<long double>;
  using Vec = Eigen::Matrix<lcplx, Eigen::Dynamic, 1>;
  const Eigen::Index dim = 2 * j.dim_modes();
  const Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic> jl =
      j.matrix().cast<long double>();
  Vec e[4];
  e[0] = ga.coeffs().cast<lcplx>();
  e[1] = e[0].conjugate();
  e[2] = gb.coeffs().cast<lcplx>();
  e[3] = e[2].conjugate();
  auto product = [dim](const Vec& u, const Vec& v) {
    lcplx acc = 0;
    for (Eigen::Index k = 0; k < dim; k += 2) {
      acc += std::conj(u[k]) * v[k + 1] - std::conj(u[k + 1]) * v[k];
    }
    return lcplx(0, 1) * acc;
  };

  Eigen::Matrix<lcplx, 4, 4> m;
  for (int c = 0; c < 4; ++c) {
    const Vec je = jl.cast<lcplx>() * e[c];
    for (int r = 0; r < 4; ++r) {
      // Divide by the actual norm, which differs from +-1 by rounding.
      m(r, c) = product(e[r], je) / product(e[r], e[r]).real();
    }
  }

  TwoModeBlocks out;
  out.j_ab = m.cast<cplx>();
  out.j_a = out.j_ab.topLeftCorner<2, 2>();
  out.j_b = out.j_ab.bottomRightCorner<2, 2>();
  out.j_c = out.j_ab.topRightCorner<2, 2>();

  // Reality is judged against the Hadamard bound of the matrix.
  auto real_det = [](const auto& mm, const char* name) {
    const lcplx d = mm.determinant();
    long double bound = 1.0L;
    for (Eigen::Index r = 0; r < mm.rows(); ++r) bound *= mm.row(r).norm();
    if (std::abs(d.imag()) > 1e-10L * std::max(1.0L, bound)) {
      throw InconsistentBlocksError(std::string(name) +
                                    " has a non-negligible imaginary part");
    }
    return d.real();
  };
  const long double da = real_det(m.topLeftCorner<2, 2>().eval(), "det J_A");
  const long double db =
      real_det(m.bottomRightCorner<2, 2>().eval(), "det J_B");
  const long double dc = real_det(m.topRightCorner<2, 2>().eval(), "det J_C");
  const long double dab = real_det(m, "det J_AB");
  out.det_ja = static_cast<double>(da);
  out.det_jb = static_cast<double>(db);
  out.det_jc = static_cast<double>(dc);
  out.det_jab = static_cast<double>(dab);
  out.excess_ja = static_cast<double>(da - 1.0L);
  out.excess_jb = static_cast<double>(db - 1.0L);
  out.excess_jab = static_cast<double>(dab - 1.0L);
  out.delta = out.det_ja + out.det_jb + 2.0 * out.det_jc;
  out.delta_tilde = out.det_ja + out.det_jb - 2.0 * out.det_jc;

  const double scale = std::max(1.0, out.delta * out.delta);
  if (out.det_ja < 1.0 - kValidationTol * std::max(1.0, out.det_ja) ||
      out.det_jb < 1.0 - kValidationTol * std::max(1.0, out.det_jb) ||
      out.det_jab - out.delta + 1.0 < -kValidationTol * scale ||
      out.delta * out.delta - 4.0 * out.det_jab < -kValidationTol * scale) {
    throw InconsistentBlocksError("two-mode invariants violate positivity");
  }
  auto [plus, minus] = partially_transposed_eigenvalues(
      out.det_ja, out.det_jb, out.det_jc, out.det_jab);
  out.nu_tilde_plus = plus;
  out.nu_tilde_minus = minus;
  return out;
}

TwoModeBlocks two_mode_blocks(const GaussianState& two_mode) {
  if (two_mode.dim_modes() != 2) {
    throw DimensionError("expected a two-mode state");
  }
  return two_mode_blocks(complex_structure(two_mode), ModeSubspace::mode(2, 0),
                         ModeSubspace::mode(2, 1));
}

Eigen::MatrixXd random_passive(int n_modes, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXcd z(n_modes, n_modes);
  for (int r = 0; r < n_modes; ++r) {
    for (int c = 0; c < n_modes; ++c) z(r, c) = cplx(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  Eigen::MatrixXcd rm = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < n_modes; ++c) {
    cplx d = rm(c, c);
    q.col(c) *= d / std::abs(d);
  }
  Eigen::MatrixXd o(2 * n_modes, 2 * n_modes);
  for (int r = 0; r < n_modes; ++r) {
    for (int c = 0; c < n_modes; ++c) {
      const double x = q(r, c).real(), y = q(r, c).imag();
      o(2 * r, 2 * c) = x;
      o(2 * r, 2 * c + 1) = -y;
      o(2 * r + 1, 2 * c) = y;
      o(2 * r + 1, 2 * c + 1) = x;
    }
  }
  return o;
}

Eigen::MatrixXd random_symplectic(int n_modes, std::mt19937_64& rng,
                                  double max_squeeze) {
  Eigen::MatrixXd o1 = random_passive(n_modes, rng);
  Eigen::MatrixXd o2 = random_passive(n_modes, rng);
  std::uniform_real_distribution<double> squeeze(-max_squeeze, max_squeeze);
  Eigen::VectorXd d(2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    const double s = squeeze(rng);
    d[2 * k] = std::exp(-s);
    d[2 * k + 1] = std::exp(s);
  }
  return o2 * d.asDiagonal() * o1;
}

GaussianState random_state(int n_modes, const StateSpec& spec,
                           std::uint64_t seed) {
  if (n_modes < 1) throw DimensionError("need at least one mode");
  if (!spec.pure && (spec.nu_min < 1.0 || spec.nu_max < spec.nu_min)) {
    throw ConfigError("symplectic eigenvalue range must satisfy 1 <= min <= max");
  }
  std::mt19937_64 rng(seed);
  Eigen::MatrixXd s = random_symplectic(n_modes, rng, spec.max_squeeze);
  Eigen::VectorXd nu = Eigen::VectorXd::Ones(2 * n_modes);
  if (!spec.pure) {
    std::uniform_real_distribution<double> pick(spec.nu_min, spec.nu_max);
    for (int k = 0; k < n_modes; ++k) nu[2 * k] = nu[2 * k + 1] = pick(rng);
  }
  Eigen::MatrixXd sigma = s * nu.asDiagonal() * s.transpose();
  return GaussianState(0.5 * (sigma + sigma.transpose()));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace modeoverlap
