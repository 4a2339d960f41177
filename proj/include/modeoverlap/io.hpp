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

#ifndef MODEOVERLAP_IO_HPP
#define MODEOVERLAP_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "modeoverlap/gaussian_state.hpp"
#include "modeoverlap/measures.hpp"
#include "modeoverlap/symplectic.hpp"

namespace modeoverlap {

using json = nlohmann::json;

/// Arrays of [re, im] pairs in Darboux ordering.
json to_json(const PhaseVector& v);
PhaseVector phase_vector_from_json(const json& j);
json to_json(const ModeSubspace& s);
ModeSubspace mode_subspace_from_json(const json& j);

/// {n_modes, sigma (row-major), mu}.
json to_json(const GaussianState& s);
GaussianState gaussian_state_from_json(const json& j);

/// NaN fields become null.
json to_json(const CriterionReport& r);
CriterionReport criterion_report_from_json(const json& j);

/// 17 significant digits; NaN prints as "nan".
std::string format_real(double v);

/// CSV with columns (index, nu).
std::string spectrum_csv(const std::vector<double>& nu);

/// Writes through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace modeoverlap

#endif  // MODEOVERLAP_IO_HPP
