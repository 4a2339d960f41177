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

#ifndef MODEOVERLAP_MEASURES_HPP
#define MODEOVERLAP_MEASURES_HPP

#include <optional>
#include <string>
#include <utility>

#include "modeoverlap/gaussian_state.hpp"
#include "modeoverlap/symplectic.hpp"

namespace modeoverlap {

/// Half-width of the dead zone around the separability boundary.
inline constexpr double kBoundaryBand = 1e-9;

enum class Verdict { entangled, separable, boundary, not_applicable };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Unavailable quantities are NaN.
struct CriterionReport {
  double d_sym;
  double d_c;
  double d_t;
  double log_negativity;
  double nu_tilde_minus;
  Verdict verdict;
  double w_delta;
  double first_order_logneg;
};

/// D_XY = sum_J <Pi_X gamma_J^Y, Pi_X gamma_J^Y>, evaluated as
/// sum_IJ |<gamma_J^Y, gamma_I^X>|^2 - |<gamma_J^Y*, gamma_I^X>|^2.
double overlap(const ModeSubspace& x, const ModeSubspace& y);

/// D_{A_p B} + D_{B_p A}; nullopt when a partner is undefined.
std::optional<double> d_sym_projection(const ComplexStructure& j,
                                       const ModeSubspace& a,
                                       const ModeSubspace& b);
/// Same for multimode A, B, with orthonormalized partner spans.
std::optional<double> d_sym_multimode(const ComplexStructure& j,
                                      const ModeSubspace& a,
                                      const ModeSubspace& b);

std::optional<double> d_sym_determinant(const TwoModeBlocks& blocks);
std::optional<double> d_critical(const TwoModeBlocks& blocks);

/// (nu_plus, nu_minus) of the partially transposed state.
std::pair<double, double> pt_spectrum(const TwoModeBlocks& blocks);
double log_negativity(const TwoModeBlocks& blocks);

/// (1/ln2) D_A D_B / (D_AB (D_A + D_B)) with D_X = det J_X - 1.
std::optional<double> w_coefficient(const TwoModeBlocks& blocks);

CriterionReport criterion(const TwoModeBlocks& blocks);

}  // namespace modeoverlap

#endif  // MODEOVERLAP_MEASURES_HPP
