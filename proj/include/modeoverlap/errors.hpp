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

#ifndef MODEOVERLAP_ERRORS_HPP
#define MODEOVERLAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modeoverlap {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

/// Basis fails the symplectic orthonormality checks.
class InvalidSubspaceError : public Error {
 public:
  using Error::Error;
};

/// Restricted symplectic form is degenerate or badly conditioned.
class NonSymplecticSubspaceError : public Error {
 public:
  using Error::Error;
};

/// Covariance violates the uncertainty principle.
class PhysicalityError : public Error {
 public:
  PhysicalityError(const std::string& what, double nu)
      : Error(what), nu_(nu) {}
  double nu() const { return nu_; }

 private:
  double nu_;
};

class PurityError : public Error {
 public:
  using Error::Error;
};

/// Two subsystems share phase-space directions.
class IndependenceError : public Error {
 public:
  using Error::Error;
};

class InconsistentBlocksError : public Error {
 public:
  using Error::Error;
};

/// Partner of a subsystem cannot be formed.
class PartnerUndefinedError : public Error {
 public:
  using Error::Error;
};

/// A is uncorrelated with the rest of the system.
class NoPartnerError : public PartnerUndefinedError {
 public:
  using PartnerUndefinedError::PartnerUndefinedError;
};

/// det J_A too close to one for the partner normalization.
class NearPureReductionError : public PartnerUndefinedError {
 public:
  using PartnerUndefinedError::PartnerUndefinedError;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double k_max, double error_estimate)
      : Error(what), k_max_(k_max), error_estimate_(error_estimate) {}
  double k_max() const { return k_max_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double k_max_;
  double error_estimate_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace modeoverlap

#endif  // MODEOVERLAP_ERRORS_HPP
