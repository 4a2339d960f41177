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

#ifndef MODEOVERLAP_PARTNER_HPP
#define MODEOVERLAP_PARTNER_HPP

#include "modeoverlap/gaussian_state.hpp"
#include "modeoverlap/symplectic.hpp"

namespace modeoverlap {

/// det of the single-mode block of J restricted to gamma.
double single_mode_det(const ComplexStructure& j, const PhaseVector& gamma);

/// gamma_Ap = (det J_A - 1)^(-1/2) Pi_A^perp(J gamma_A*). Single-mode A only.
PhaseVector partner_basis_vector(const ComplexStructure& j,
                                 const ModeSubspace& a);

/// Span of Pi_A^perp(J Gamma_A). For several modes only the span is fixed.
ModeSubspace partner_subspace(const ComplexStructure& j, const ModeSubspace& a);

}  // namespace modeoverlap

#endif  // MODEOVERLAP_PARTNER_HPP
