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

#include "modeoverlap/partner.hpp"

#include <cmath>
#include <vector>

#include "modeoverlap/errors.hpp"

namespace modeoverlap {

namespace {

void require_partner_preconditions(const ComplexStructure& j,
                                   const ModeSubspace& a) {
  if (a.ambient_dim_modes() != j.dim_modes()) {
    throw DimensionError("subsystem and complex structure sizes differ");
  }
  if (!is_pure(j)) throw PurityError("global state is not pure");
  if (is_uncorrelated(j, a)) {
    throw NoPartnerError("subsystem is uncorrelated; no partner exists");
  }
}

}  // namespace

double single_mode_det(const ComplexStructure& j, const PhaseVector& gamma) {
  const PhaseVector gc = gamma.conjugate();
  const PhaseVector jg = j.apply(gamma);
  const PhaseVector jgc = j.apply(gc);
  const cplx a = symplectic_product(gamma, jg);
  const cplx b = symplectic_product(gamma, jgc);
  const cplx c = -symplectic_product(gc, jg);
  const cplx d = -symplectic_product(gc, jgc);
  return (a * d - b * c).real();
}

PhaseVector partner_basis_vector(const ComplexStructure& j,
                                 const ModeSubspace& a) {
  if (a.size() != 1) {
    throw InvalidSubspaceError("partner_basis_vector needs a single mode");
  }
  require_partner_preconditions(j, a);
  const double det = single_mode_det(j, a[0]);
  if (det <= 1.0 + kValidationTol) {
    throw NearPureReductionError("det J_A is within tolerance of one");
  }
  PhaseVector w = complement_project(a, j.apply(a[0].conjugate()));
  return w / std::sqrt(det - 1.0);
}

ModeSubspace partner_subspace(const ComplexStructure& j,
                              const ModeSubspace& a) {
  if (a.size() == 1) return ModeSubspace({partner_basis_vector(j, a)});
  require_partner_preconditions(j, a);
  std::vector<PhaseVector> images;
  for (const auto& g : a.basis()) {
    images.push_back(complement_project(a, j.apply(g)));
  }
  return orthonormalize(images);
}

}  // namespace modeoverlap
