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

#include "modeoverlap/measures.hpp"

#include <cmath>
#include <limits>

#include "modeoverlap/errors.hpp"
#include "modeoverlap/partner.hpp"

namespace modeoverlap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool reduced_near_pure(const TwoModeBlocks& b) {
  return b.excess_ja <= kValidationTol || b.excess_jb <= kValidationTol;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::entangled:
      return "entangled";
    case Verdict::separable:
      return "separable";
    case Verdict::boundary:
      return "boundary";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "unknown";
}

Verdict verdict_from_string(const std::string& s) {
  if (s == "entangled") return Verdict::entangled;
  if (s == "separable") return Verdict::separable;
  if (s == "boundary") return Verdict::boundary;
  if (s == "not_applicable") return Verdict::not_applicable;
  throw Error("unknown verdict '" + s + "'");
}

double overlap(const ModeSubspace& x, const ModeSubspace& y) {
  if (x.ambient_dim_modes() != y.ambient_dim_modes()) {
    throw DimensionError("subspaces live in different spaces");
  }
  // Expanded form; avoids cancellation in <Pi_X g, Pi_X g>.
  double total = 0.0;
  for (const auto& gy : y.basis()) {
    const PhaseVector gy_conj = gy.conjugate();
    for (const auto& gx : x.basis()) {
      total += std::norm(symplectic_product(gy, gx)) -
               std::norm(symplectic_product(gy_conj, gx));
    }
  }
  return total;
}

std::optional<double> d_sym_projection(const ComplexStructure& j,
                                       const ModeSubspace& a,
                                       const ModeSubspace& b) {
  if (a.size() != 1 || b.size() != 1) {
    throw InvalidSubspaceError("d_sym_projection needs single modes");
  }
  return d_sym_multimode(j, a, b);
}

std::optional<double> d_sym_multimode(const ComplexStructure& j,
                                      const ModeSubspace& a,
                                      const ModeSubspace& b) {
  if (!is_pure(j)) throw PurityError("global state is not pure");
  try {
    ModeSubspace ap = partner_subspace(j, a);
    ModeSubspace bp = partner_subspace(j, b);
    return overlap(ap, b) + overlap(a, bp);
  } catch (const PartnerUndefinedError&) {
    return std::nullopt;
  }
}

std::optional<double> d_sym_determinant(const TwoModeBlocks& b) {
  if (reduced_near_pure(b)) return std::nullopt;
  return -b.det_jc * (1.0 / b.excess_ja + 1.0 / b.excess_jb);
}

std::optional<double> d_critical(const TwoModeBlocks& b) {
  if (reduced_near_pure(b)) return std::nullopt;
  return 0.5 * ((b.excess_jab - b.excess_ja) / b.excess_jb +
                (b.excess_jab - b.excess_jb) / b.excess_ja) -
         1.0;
}

std::pair<double, double> pt_spectrum(const TwoModeBlocks& b) {
  return partially_transposed_eigenvalues(b.det_ja, b.det_jb, b.det_jc,
                                          b.det_jab);
}

double log_negativity(const TwoModeBlocks& b) {
  return std::max(0.0, -std::log2(pt_spectrum(b).second));
}

std::optional<double> w_coefficient(const TwoModeBlocks& b) {
  const double da = b.excess_ja;
  const double db = b.excess_jb;
  const double dab = b.excess_jab;
  if (da <= kValidationTol || db <= kValidationTol || dab <= kValidationTol) {
    return std::nullopt;
  }
  return da * db / (dab * (da + db)) / std::log(2.0);
}

CriterionReport criterion(const TwoModeBlocks& b) {
  CriterionReport r{};
  r.nu_tilde_minus = pt_spectrum(b).second;
  r.log_negativity = std::max(0.0, -std::log2(r.nu_tilde_minus));
  r.d_sym = r.d_c = r.d_t = r.w_delta = r.first_order_logneg = kNaN;

  const bool uncorrelated = b.j_c.cwiseAbs().maxCoeff() <= kValidationTol;
  if (reduced_near_pure(b) || uncorrelated) {
    r.verdict = Verdict::not_applicable;
    return r;
  }
  r.d_sym = *d_sym_determinant(b);
  r.d_c = *d_critical(b);
  r.d_t = r.d_sym - r.d_c;
  if (auto w = w_coefficient(b)) {
    r.w_delta = *w;
    r.first_order_logneg = std::max(0.0, r.w_delta * r.d_t);
  }
  if (std::abs(r.nu_tilde_minus - 1.0) <= kBoundaryBand ||
      std::abs(r.d_t) <= kBoundaryBand) {
    r.verdict = Verdict::boundary;
  } else {
    r.verdict = r.d_t > 0.0 ? Verdict::entangled : Verdict::separable;
  }
  return r;
}

}  // namespace modeoverlap
