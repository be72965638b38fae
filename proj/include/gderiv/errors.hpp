// Copyright 2026 The gderiv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GDERIV_ERRORS_HPP
#define GDERIV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gderiv {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation (poles,
// wrong half-plane, parameter out of range).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A continuation path touches a branch point or crosses a cut.
class PathError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Evaluation requested exactly at a singular point of the integrand.
class SingularPointError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A numerical scheme failed to reach the requested tolerance.  Carries
// the best estimate available together with its estimated error so that
// callers may still inspect the partial result.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_logmod, double best_phase,
                double err_estimate)
      : Error(what),
        best_logmod_(best_logmod),
        best_phase_(best_phase),
        err_estimate_(err_estimate) {}
  explicit AccuracyError(const std::string& what)
      : AccuracyError(what, 0.0, 0.0, 0.0) {}

  double best_logmod() const { return best_logmod_; }
  double best_phase() const { return best_phase_; }
  double err_estimate() const { return err_estimate_; }

 private:
  double best_logmod_;
  double best_phase_;
  double err_estimate_;
};

// A log-scaled value cannot be materialised as a native complex number.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An integrand evaluation produced NaN.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

// Observed data contradicts a structural guarantee (e.g. more than one
// sign change where a zero is provably unique).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

}  // namespace gderiv

#endif  // GDERIV_ERRORS_HPP
