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

#include <doctest.h>

#include <cmath>
#include <random>

#include "modeoverlap/circuits.hpp"
#include "modeoverlap/errors.hpp"
#include "modeoverlap/gaussian_state.hpp"
#include "test_support.hpp"

using namespace modeoverlap;
using testsupport::max_abs;
using testsupport::tmsv;

namespace {

Eigen::MatrixXd identity(int n) { return Eigen::MatrixXd::Identity(n, n); }

// Positive-norm eigenvector of J for eigenvalue +i nu, normalized.
PhaseVector eigen_mode(const ComplexStructure& j, int which) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(j.matrix());
  int seen = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    if (es.eigenvalues()[k].imag() > 0 && seen++ == which) {
      PhaseVector v(Eigen::VectorXcd(es.eigenvectors().col(k)));
      const double n = symplectic_product(v, v).real();
      return v / std::sqrt(n);
    }
  }
  throw Error("eigenvector not found");
}

}  // namespace

TEST_CASE("complex structure of vacuum, thermal and three-oscillator states") {
  for (int n = 1; n <= 4; ++n) {
    const ComplexStructure j = complex_structure(GaussianState::vacuum(n));
    CHECK(max_abs(j.matrix() * j.matrix() + identity(2 * n)) < 1e-15);
  }
  const auto th = symplectic_spectrum(
      complex_structure(GaussianState::thermal(1, 2.0)));
  REQUIRE(th.size() == 1);
  CHECK(th[0] == doctest::Approx(2.0).epsilon(1e-14));
  const ComplexStructure j = complex_structure(ho_state(0.5, 0.9));
  CHECK(max_abs(j.matrix() * j.matrix() + identity(6)) < 1e-12);
  CHECK(is_pure(j));
}

TEST_CASE("unphysical and malformed covariances are rejected") {
  try {
    GaussianState s(0.5 * identity(2));
    FAIL("expected a physicality error");
  } catch (const PhysicalityError& e) {
    CHECK(e.nu() == doctest::Approx(0.5));
  }
  Eigen::MatrixXd tilted = identity(4);
  tilted(0, 1) = 0.3;
  CHECK_THROWS_AS(GaussianState{tilted}, Error);
  CHECK_THROWS_AS(GaussianState{Eigen::MatrixXd::Identity(3, 3)},
                  DimensionError);
  // Squeezed below the vacuum in both quadratures.
  Eigen::MatrixXd bad = identity(2);
  bad(0, 0) = 0.5;
  bad(1, 1) = 1.5;
  CHECK_THROWS_AS(GaussianState{bad}, PhysicalityError);
}

TEST_CASE("symplectic spectra of vacuum and two-mode squeezed vacuum") {
  for (double v : symplectic_spectrum(complex_structure(GaussianState::vacuum(3)))) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  }
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const GaussianState s = tmsv(r);
    const auto full = symplectic_spectrum(complex_structure(s));
    CHECK(std::abs(full[0] - 1.0) < 1e-10);
    CHECK(std::abs(full[1] - 1.0) < 1e-10);
    const GaussianState a = reduce(s, ModeSubspace::mode(2, 0));
    const auto nu = symplectic_spectrum(complex_structure(a));
    CHECK(nu[0] == doctest::Approx(std::cosh(2 * r)).epsilon(1e-13));
    CHECK(max_abs(a.sigma() - std::cosh(2 * r) * identity(2)) <
          1e-12 * std::cosh(2 * r));
  }
}

TEST_CASE("purity tests") {
  CHECK(is_pure(complex_structure(GaussianState::vacuum(2))));
  CHECK_FALSE(is_pure(complex_structure(GaussianState::thermal(2, 2.0))));
  CHECK(is_pure(complex_structure(ho_state(1.3, 0.2))));
}

TEST_CASE("uncorrelated subsystems") {
  const ModeSubspace a = ModeSubspace::mode(2, 0);
  CHECK(is_uncorrelated(complex_structure(GaussianState::vacuum(2)), a));
  CHECK_FALSE(is_uncorrelated(complex_structure(tmsv(0.3)), a));
  CHECK(is_uncorrelated(complex_structure(tmsv(0.0)), a));
  // Eigenvector pairs of J span invariant subspaces.
  const ComplexStructure j = complex_structure(ho_state(0.7, 0.4));
  for (int w = 0; w < 3; ++w) {
    const ModeSubspace e({eigen_mode(j, w)});
    CHECK(is_uncorrelated(j, e));
  }
}

TEST_CASE("reduction of vacuum, full space and first moments") {
  const GaussianState vac = GaussianState::vacuum(3);
  CHECK(max_abs(reduce(vac, ModeSubspace::mode(3, 1)).sigma() - identity(2)) <
        1e-15);

  std::mt19937_64 rng(3);
  const GaussianState s = random_state(3, StateSpec::mixed(1.0, 2.0), 17);
  const int all[] = {0, 1, 2};
  const GaussianState same = reduce(s, ModeSubspace::modes(3, all));
  CHECK(max_abs(same.sigma() - s.sigma()) < 1e-12 * max_abs(s.sigma()));

  // Random orthonormal basis of the whole space: same spectrum.
  const Eigen::MatrixXd m = random_symplectic(3, rng, 0.5);
  std::vector<PhaseVector> basis;
  for (int k = 0; k < 3; ++k) {
    basis.emplace_back(Eigen::VectorXcd(m.cast<cplx>() * darboux_mode(3, k).coeffs()));
  }
  const GaussianState rotated = reduce(s, ModeSubspace(basis));
  const auto nu1 = symplectic_spectrum(complex_structure(s));
  const auto nu2 = symplectic_spectrum(complex_structure(rotated));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(nu1[k] - nu2[k]) < 1e-10);

  Eigen::VectorXd mu(4);
  mu << 0.5, -1.0, 2.0, 3.0;
  const GaussianState shifted(identity(4), mu);
  const GaussianState b = reduce(shifted, ModeSubspace::mode(2, 1));
  CHECK(b.mu()[0] == doctest::Approx(2.0));
  CHECK(b.mu()[1] == doctest::Approx(3.0));
}

TEST_CASE("two-mode blocks of vacuum and two-mode squeezed vacuum") {
  const TwoModeBlocks v = two_mode_blocks(GaussianState::vacuum(2));
  CHECK(v.det_ja == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(v.det_jb == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(v.det_jc) < 1e-15);
  CHECK(v.det_jab == doctest::Approx(1.0).epsilon(1e-15));
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const TwoModeBlocks b = two_mode_blocks(tmsv(r));
    const double c2 = std::pow(std::cosh(2 * r), 2);
    const double s2 = std::pow(std::sinh(2 * r), 2);
    CHECK(std::abs(b.det_ja - c2) < 1e-10 * c2);
    CHECK(std::abs(b.det_jb - c2) < 1e-10 * c2);
    CHECK(std::abs(b.det_jc + s2) < 1e-10 * c2);
    CHECK(std::abs(b.det_jab - 1.0) < 1e-10 * c2);
  }
}

TEST_CASE("two-mode blocks in the three-oscillator state") {
  const ComplexStructure j = complex_structure(ho_state(0.8, M_PI / 2));
  const TwoModeBlocks b =
      two_mode_blocks(j, ModeSubspace::mode(3, 0), ModeSubspace::mode(3, 1));
  CHECK(std::abs(b.det_jc) < 1e-12);
  CHECK(b.det_jb == doctest::Approx(1.0));
  CHECK_THROWS_AS(
      two_mode_blocks(j, ModeSubspace::mode(3, 0), ModeSubspace::mode(3, 0)),
      IndependenceError);
  CHECK_THROWS_AS(two_mode_blocks(j, ModeSubspace::mode(3, 0),
                                  orthonormalize({darboux_mode(3, 0),
                                                  darboux_mode(3, 1)})),
                  InvalidSubspaceError);
}

TEST_CASE("random states: purity, spectrum range and determinism") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 1 + seed % 6;
    const GaussianState p = random_state(n, StateSpec::pure_state(), seed);
    CHECK(is_pure(complex_structure(p)));
    const GaussianState m = random_state(n, StateSpec::mixed(1.5, 3.0), seed);
    for (double v : symplectic_spectrum(complex_structure(m))) {
      CHECK(v >= 1.5 - 1e-9);
      CHECK(v <= 3.0 + 1e-9);
    }
    const GaussianState again = random_state(n, StateSpec::mixed(1.5, 3.0), seed);
    CHECK((again.sigma().array() == m.sigma().array()).all());
  }
  CHECK(derive_seed(42, 0) != derive_seed(42, 1));
  CHECK(derive_seed(42, 5) == derive_seed(42, 5));
}

TEST_CASE("eigenvalue and Williamson spectra agree") {
  for (std::uint64_t seed = 100; seed < 160; ++seed) {
    const int n = 1 + seed % 5;
    const GaussianState s = random_state(n, StateSpec::mixed(1.0, 4.0), seed);
    const auto a = symplectic_spectrum(complex_structure(s));
    const auto b = williamson_spectrum(s);
    REQUIRE(a.size() == static_cast<size_t>(n));
    REQUIRE(b.size() == static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      CHECK(std::abs(a[k] - b[k]) < 1e-8 * a[k]);
      if (k > 0) CHECK(a[k] <= a[k - 1]);
    }
  }
}

TEST_CASE("two-mode invariants are locally symplectic invariant") {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const GaussianState s = random_state(2, StateSpec::mixed(1.0, 3.0), seed);
    const TwoModeBlocks b0 = two_mode_blocks(s);
    const GaussianState t =
        testsupport::transform(s, testsupport::random_local(2, {0, 1}, rng));
    const TwoModeBlocks b1 = two_mode_blocks(t);
    const double scale = std::max(1.0, std::abs(b0.det_ja));
    CHECK(std::abs(b0.det_ja - b1.det_ja) < 1e-8 * scale);
    CHECK(std::abs(b0.det_jb - b1.det_jb) < 1e-8 * std::max(1.0, b0.det_jb));
    CHECK(std::abs(b0.det_jc - b1.det_jc) <
          1e-8 * std::max(1.0, std::abs(b0.det_jc)));
    CHECK(std::abs(b0.det_jab - b1.det_jab) < 1e-8 * std::max(1.0, b0.det_jab));
  }
}

TEST_CASE("reduce then two_mode_blocks agrees with the global blocks") {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const GaussianState s = random_state(4, StateSpec::mixed(1.0, 2.0), seed);
    const ComplexStructure j = complex_structure(s);
    const ModeSubspace a = orthonormalize({testsupport::random_vector(4, rng)});
    // B: a mode symplectically orthogonal to A.
    PhaseVector v = complement_project(a, testsupport::random_vector(4, rng));
    const ModeSubspace b = orthonormalize({v});
    const TwoModeBlocks global = two_mode_blocks(j, a, b);
    const GaussianState red = reduce(s, direct_sum(a, b));
    const TwoModeBlocks local = two_mode_blocks(red);
    CHECK(std::abs(global.det_ja - local.det_ja) < 1e-10 * std::max(1.0, global.det_ja));
    CHECK(std::abs(global.det_jb - local.det_jb) < 1e-10 * std::max(1.0, global.det_jb));
    CHECK(std::abs(global.det_jc - local.det_jc) <
          1e-10 * std::max(1.0, std::abs(global.det_jc)));
  }
}

TEST_CASE("uncorrelated subsystems factorize under reduction") {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const GaussianState pair = random_state(2, StateSpec::mixed(1.0, 2.0), seed);
    const GaussianState single = random_state(1, StateSpec::mixed(1.0, 2.0), seed + 1000);
    Eigen::MatrixXd sigma = Eigen::MatrixXd::Zero(6, 6);
    sigma.topLeftCorner(4, 4) = pair.sigma();
    sigma.bottomRightCorner(2, 2) = single.sigma();
    const GaussianState s(sigma);
    const ComplexStructure j = complex_structure(s);
    const ModeSubspace c = ModeSubspace::mode(3, 2);
    REQUIRE(is_uncorrelated(j, c));
    const GaussianState red = reduce(s, direct_sum(ModeSubspace::mode(3, 0), c));
    CHECK(red.sigma().block(0, 2, 2, 2).cwiseAbs().maxCoeff() < 1e-9);
  }
}
