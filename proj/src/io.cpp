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

#include "modeoverlap/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "modeoverlap/errors.hpp"

namespace modeoverlap {

json to_json(const PhaseVector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.coeffs().size(); ++i) {
    arr.push_back({v.coeffs()[i].real(), v.coeffs()[i].imag()});
  }
  return arr;
}

PhaseVector phase_vector_from_json(const json& j) {
  if (!j.is_array()) throw Error("phase vector JSON must be an array");
  Eigen::VectorXcd c(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    const auto& pair = j[i];
    if (!pair.is_array() || pair.size() != 2) {
      throw Error("phase vector entries must be [re, im] pairs");
    }
    c[i] = cplx(pair[0].get<double>(), pair[1].get<double>());
  }
  return PhaseVector(std::move(c));
}

json to_json(const ModeSubspace& s) {
  json arr = json::array();
  for (const auto& g : s.basis()) arr.push_back(to_json(g));
  return arr;
}

ModeSubspace mode_subspace_from_json(const json& j) {
  if (!j.is_array()) throw Error("mode subspace JSON must be an array");
  std::vector<PhaseVector> basis;
  for (const auto& v : j) basis.push_back(phase_vector_from_json(v));
  return ModeSubspace(std::move(basis));
}

json to_json(const GaussianState& s) {
  json sigma = json::array();
  for (Eigen::Index r = 0; r < s.sigma().rows(); ++r) {
    for (Eigen::Index c = 0; c < s.sigma().cols(); ++c) {
      sigma.push_back(s.sigma()(r, c));
    }
  }
  json mu = json::array();
  for (Eigen::Index i = 0; i < s.mu().size(); ++i) mu.push_back(s.mu()[i]);
  return {{"n_modes", s.dim_modes()}, {"sigma", sigma}, {"mu", mu}};
}

GaussianState gaussian_state_from_json(const json& j) {
  const int n = j.at("n_modes").get<int>();
  const auto& sj = j.at("sigma");
  if (n < 1 || sj.size() != static_cast<size_t>(4 * n * n)) {
    throw DimensionError("sigma length does not match n_modes");
  }
  Eigen::MatrixXd sigma(2 * n, 2 * n);
  for (int r = 0; r < 2 * n; ++r) {
    for (int c = 0; c < 2 * n; ++c) sigma(r, c) = sj[r * 2 * n + c].get<double>();
  }
  Eigen::VectorXd mu = Eigen::VectorXd::Zero(2 * n);
  if (j.contains("mu")) {
    const auto& mj = j.at("mu");
    if (mj.size() != static_cast<size_t>(2 * n)) {
      throw DimensionError("mu length does not match n_modes");
    }
    for (int i = 0; i < 2 * n; ++i) mu[i] = mj[i].get<double>();
  }
  return GaussianState(std::move(sigma), std::move(mu));
}

namespace {

json real_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

double real_from(const json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return v.get<double>();
}

}  // namespace

json to_json(const CriterionReport& r) {
  return {{"d_sym", real_or_null(r.d_sym)},
          {"d_c", real_or_null(r.d_c)},
          {"d_t", real_or_null(r.d_t)},
          {"log_negativity", real_or_null(r.log_negativity)},
          {"nu_tilde_minus", real_or_null(r.nu_tilde_minus)},
          {"verdict", to_string(r.verdict)},
          {"w_delta", real_or_null(r.w_delta)},
          {"first_order_logneg", real_or_null(r.first_order_logneg)}};
}

CriterionReport criterion_report_from_json(const json& j) {
  CriterionReport r{};
  r.d_sym = real_from(j, "d_sym");
  r.d_c = real_from(j, "d_c");
  r.d_t = real_from(j, "d_t");
  r.log_negativity = real_from(j, "log_negativity");
  r.nu_tilde_minus = real_from(j, "nu_tilde_minus");
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
  r.w_delta = real_from(j, "w_delta");
  r.first_order_logneg = real_from(j, "first_order_logneg");
  return r;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string spectrum_csv(const std::vector<double>& nu) {
  std::string out = "index,nu\n";
  for (size_t i = 0; i < nu.size(); ++i) {
    out += std::to_string(i) + "," + format_real(nu[i]) + "\n";
  }
  return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
    if (!out) throw Error("failed writing " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace modeoverlap
