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

#include "modeoverlap/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modeoverlap/errors.hpp"

namespace modeoverlap {

namespace {

void require_same_dim(const PhaseVector& u, const PhaseVector& v) {
  if (u.coeffs().size() != v.coeffs().size()) {
    throw DimensionError("phase vectors of " + std::to_string(u.dim_modes()) +
                         " and " + std::to_string(v.dim_modes()) + " modes");
  }
}

// Largest-magnitude component made real-positive; first index wins ties.
PhaseVector fix_phase(const PhaseVector& v) {
  const auto& c = v.coeffs();
  Eigen::Index best = 0;
  double best_abs = -1.0;
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    double a = std::abs(c[i]);
    if (a > best_abs * (1.0 + 1e-12)) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs <= 0.0) return v;
  return (std::conj(c[best]) / best_abs) * v;
}

}  // namespace

PhaseVector::PhaseVector(Eigen::VectorXcd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0 || coeffs_.size() % 2 != 0) {
    throw DimensionError("phase vector length must be even and positive, got " +
                         std::to_string(coeffs_.size()));
  }
  if (!coeffs_.allFinite()) {
    throw Error("phase vector has non-finite components");
  }
}

PhaseVector::PhaseVector(const Eigen::VectorXd& coeffs)
    : PhaseVector(Eigen::VectorXcd(coeffs.cast<cplx>())) {}

PhaseVector PhaseVector::zero(int n_modes) {
  if (n_modes < 1) throw DimensionError("need at least one mode");
  return PhaseVector(Eigen::VectorXcd(Eigen::VectorXcd::Zero(2 * n_modes)));
}

PhaseVector PhaseVector::unit(int n_modes, int index) {
  if (n_modes < 1) throw DimensionError("need at least one mode");
  if (index < 0 || index >= 2 * n_modes) {
    throw IndexError("Darboux index " + std::to_string(index) +
                     " out of range");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * n_modes);
  c[index] = 1.0;
  return PhaseVector(std::move(c));
}

PhaseVector PhaseVector::conjugate() const {
  PhaseVector out;
  out.coeffs_ = coeffs_.conjugate();
  return out;
}

PhaseVector PhaseVector::operator+(const PhaseVector& o) const {
  require_same_dim(*this, o);
  PhaseVector out;
  out.coeffs_ = coeffs_ + o.coeffs_;
  return out;
}

PhaseVector PhaseVector::operator-(const PhaseVector& o) const {
  require_same_dim(*this, o);
  PhaseVector out;
  out.coeffs_ = coeffs_ - o.coeffs_;
  return out;
}

PhaseVector PhaseVector::operator-() const {
  PhaseVector out;
  out.coeffs_ = -coeffs_;
  return out;
}

PhaseVector& PhaseVector::operator+=(const PhaseVector& o) {
  require_same_dim(*this, o);
  coeffs_ += o.coeffs_;
  return *this;
}

PhaseVector& PhaseVector::operator-=(const PhaseVector& o) {
  require_same_dim(*this, o);
  coeffs_ -= o.coeffs_;
  return *this;
}

PhaseVector operator*(cplx a, const PhaseVector& v) {
  PhaseVector out;
  out.coeffs_ = a * v.coeffs_;
  return out;
}

PhaseVector PhaseVector::operator/(cplx a) const {
  PhaseVector out;
  out.coeffs_ = coeffs_ / a;
  return out;
}

Eigen::MatrixXd symplectic_form(int n_modes) {
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(2 * n_modes, 2 * n_modes);
  for (int k = 0; k < n_modes; ++k) {
    omega(2 * k, 2 * k + 1) = 1.0;
    omega(2 * k + 1, 2 * k) = -1.0;
  }
  return omega;
}

cplx symplectic_product(const PhaseVector& u, const PhaseVector& v) {
  require_same_dim(u, v);
  const auto& a = u.coeffs();
  const auto& b = v.coeffs();
  cplx acc = 0.0;
  for (Eigen::Index k = 0; k < a.size(); k += 2) {
    acc += std::conj(a[k]) * b[k + 1] - std::conj(a[k + 1]) * b[k];
  }
  return cplx(0.0, 1.0) * acc;
}

PhaseVector darboux_mode(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes) {
    throw IndexError("mode " + std::to_string(mode) + " out of range for " +
                     std::to_string(n_modes) + " modes");
  }
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * n_modes);
  c[2 * mode] = cplx(0.0, M_SQRT1_2);
  c[2 * mode + 1] = M_SQRT1_2;
  return PhaseVector(std::move(c));
}

ModeSubspace::ModeSubspace(std::vector<PhaseVector> basis, double tol)
    : basis_(std::move(basis)) {
  if (basis_.empty()) throw InvalidSubspaceError("empty basis");
  ambient_ = basis_.front().dim_modes();
  for (const auto& g : basis_) {
    if (g.dim_modes() != ambient_) {
      throw DimensionError("basis vectors live in different spaces");
    }
  }
  if (size() > ambient_) {
    throw InvalidSubspaceError("more basis vectors than modes");
  }
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      double scale = std::max(1.0, basis_[i].euclidean_norm() *
                                       basis_[j].euclidean_norm());
      cplx g = symplectic_product(basis_[i], basis_[j]);
      cplx h = symplectic_product(basis_[i], basis_[j].conjugate());
      double target = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - target) > tol * scale || std::abs(h) > tol * scale) {
        throw InvalidSubspaceError(
            "basis is not symplectically orthonormal at (" +
            std::to_string(i) + "," + std::to_string(j) + ")");
      }
    }
  }
}

ModeSubspace ModeSubspace::mode(int n_modes, int mode) {
  return ModeSubspace({darboux_mode(n_modes, mode)});
}

ModeSubspace ModeSubspace::modes(int n_modes, std::span<const int> which) {
  std::vector<PhaseVector> basis;
  for (int m : which) basis.push_back(darboux_mode(n_modes, m));
  return ModeSubspace(std::move(basis));
}

Eigen::MatrixXcd ModeSubspace::spanning_matrix() const {
  const int k = size();
  Eigen::MatrixXcd m(2 * ambient_, 2 * k);
  for (int i = 0; i < k; ++i) {
    m.col(i) = basis_[i].coeffs();
    m.col(k + i) = basis_[i].coeffs().conjugate();
  }
  return m;
}

PhaseVector project(const ModeSubspace& s, const PhaseVector& v) {
  if (s.ambient_dim_modes() != v.dim_modes()) {
    throw DimensionError("vector and subspace live in different spaces");
  }
  PhaseVector out = PhaseVector::zero(v.dim_modes());
  for (const auto& g : s.basis()) {
    PhaseVector gc = g.conjugate();
    out += symplectic_product(g, v) * g;
    out -= symplectic_product(gc, v) * gc;
  }
  return out;
}

PhaseVector complement_project(const ModeSubspace& s, const PhaseVector& v) {
  return v - project(s, v);
}

namespace {

// Real span of {Re v, Im v}; throws when Omega restricted to it is singular.
int checked_symplectic_rank(std::span<const PhaseVector> vectors) {
  const int dim = static_cast<int>(vectors.front().coeffs().size());
  Eigen::MatrixXd r(dim, 2 * vectors.size());
  for (size_t i = 0; i < vectors.size(); ++i) {
    r.col(2 * i) = vectors[i].coeffs().real();
    r.col(2 * i + 1) = vectors[i].coeffs().imag();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv[0] <= 0.0) {
    throw NonSymplecticSubspaceError("input vectors are all zero");
  }
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > 1e-10 * sv[0]) ++rank;
  }
  if (rank % 2 != 0) {
    throw NonSymplecticSubspaceError("real span has odd dimension " +
                                     std::to_string(rank));
  }
  Eigen::MatrixXd q = svd.matrixU().leftCols(rank);
  Eigen::MatrixXd omega_low = -symplectic_form(dim / 2);
  Eigen::MatrixXd gram = q.transpose() * omega_low * q;
  Eigen::JacobiSVD<Eigen::MatrixXd> gsvd(gram);
  const auto& gs = gsvd.singularValues();
  // Relative to |Omega| = 1 on the orthonormal real basis.
  double smax = std::max(1.0, gs[0]);
  double smin = gs[gs.size() - 1];
  if (!(smin > 0.0) || smax / smin > kConditionLimit) {
    throw NonSymplecticSubspaceError(
        "restricted symplectic form is degenerate (condition " +
        std::to_string(smin > 0.0 ? smax / smin : INFINITY) + ")");
  }
  return rank;
}

PhaseVector remove_component(const PhaseVector& v, const PhaseVector& g) {
  PhaseVector gc = g.conjugate();
  return v - symplectic_product(g, v) * g + symplectic_product(gc, v) * gc;
}

}  // namespace

ModeSubspace orthonormalize(std::span<const PhaseVector> vectors) {
  if (vectors.empty()) throw NonSymplecticSubspaceError("no input vectors");
  const int n_modes = vectors.front().dim_modes();
  for (const auto& v : vectors) {
    if (v.dim_modes() != n_modes) {
      throw DimensionError("input vectors live in different spaces");
    }
  }
  const int target = checked_symplectic_rank(vectors) / 2;

  double scale = 0.0;
  for (const auto& v : vectors) scale = std::max(scale, v.euclidean_norm());
  const double drop = 1e-10 * scale;

  std::vector<PhaseVector> pool(vectors.begin(), vectors.end());
  std::vector<PhaseVector> basis;
  while (static_cast<int>(basis.size()) < target) {
    std::erase_if(pool, [&](const PhaseVector& v) {
      return v.euclidean_norm() <= drop;
    });
    if (pool.empty()) {
      throw NonSymplecticSubspaceError("ran out of vectors while pairing");
    }

    // Best single pivot versus best pairing of two null-ish vectors.
    double best_single = -1.0;
    size_t single_at = 0;
    for (size_t i = 0; i < pool.size(); ++i) {
      double n2 = pool[i].coeffs().squaredNorm();
      double q = std::abs(symplectic_product(pool[i], pool[i]).real()) / n2;
      if (q > best_single) {
        best_single = q;
        single_at = i;
      }
    }
    double best_pair = -1.0;
    size_t pi = 0, pj = 0;
    bool pair_conj = false;
    cplx pair_val = 0.0;
    for (size_t i = 0; i < pool.size(); ++i) {
      for (size_t j = i; j < pool.size(); ++j) {
        double nn = pool[i].euclidean_norm() * pool[j].euclidean_norm();
        for (int c = 0; c < 2; ++c) {
          if (i == j && c == 0) continue;
          PhaseVector w = c ? pool[j].conjugate() : pool[j];
          cplx s = symplectic_product(pool[i], w);
          double q = std::abs(s) / nn;
          if (q > best_pair) {
            best_pair = q;
            pi = i;
            pj = j;
            pair_conj = c != 0;
            pair_val = s;
          }
        }
      }
    }

    PhaseVector cand;
    if (best_single >= 0.5 * best_pair) {
      cand = pool[single_at];
    } else {
      PhaseVector w = pair_conj ? pool[pj].conjugate() : pool[pj];
      cplx c = std::conj(pair_val) / std::abs(pair_val) *
               (pool[pi].euclidean_norm() / w.euclidean_norm());
      cand = pool[pi] + c * w;
    }
    double n = symplectic_product(cand, cand).real();
    if (std::abs(n) <= 1e-14 * cand.coeffs().squaredNorm()) {
      throw NonSymplecticSubspaceError("no vector with nonzero symplectic norm");
    }
    PhaseVector g = n > 0 ? cand / std::sqrt(n)
                          : cand.conjugate() / std::sqrt(-n);
    // Re-orthogonalize against earlier basis vectors, then renormalize.
    for (const auto& b : basis) g = remove_component(g, b);
    g = g / std::sqrt(symplectic_product(g, g).real());
    basis.push_back(g);

    for (auto& v : pool) {
      v = remove_component(v, g);
      v = remove_component(v, g);
    }
  }
  for (auto& g : basis) g = fix_phase(g);
  return ModeSubspace(std::move(basis));
}

ModeSubspace orthonormalize(const std::vector<PhaseVector>& vectors) {
  return orthonormalize(std::span<const PhaseVector>(vectors));
}

ModeSubspace direct_sum(const ModeSubspace& a, const ModeSubspace& b) {
  std::vector<PhaseVector> basis = a.basis();
  basis.insert(basis.end(), b.basis().begin(), b.basis().end());
  try {
    return ModeSubspace(std::move(basis));
  } catch (const InvalidSubspaceError&) {
    throw IndependenceError("subspaces are not symplectically independent");
  }
}

double subspace_distance(const ModeSubspace& a, const ModeSubspace& b) {
  if (a.ambient_dim_modes() != b.ambient_dim_modes()) {
    throw DimensionError("subspaces live in different spaces");
  }
  if (a.size() != b.size()) return 1.0;
  Eigen::HouseholderQR<Eigen::MatrixXcd> qa(a.spanning_matrix());
  Eigen::HouseholderQR<Eigen::MatrixXcd> qb(b.spanning_matrix());
  const Eigen::Index k = 2 * a.size();
  const Eigen::Index n = a.spanning_matrix().rows();
  Eigen::MatrixXcd ua = qa.householderQ() * Eigen::MatrixXcd::Identity(n, k);
  Eigen::MatrixXcd ub = qb.householderQ() * Eigen::MatrixXcd::Identity(n, k);
  Eigen::MatrixXcd residual = ub - ua * (ua.adjoint() * ub);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(residual);
  return std::min(1.0, svd.singularValues()[0]);
}

}  // namespace modeoverlap
