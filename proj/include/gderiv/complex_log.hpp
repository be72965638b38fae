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

#ifndef GDERIV_COMPLEX_LOG_HPP
#define GDERIV_COMPLEX_LOG_HPP

#include <complex>

#include "gderiv/errors.hpp"

namespace gderiv {

using Complex = std::complex<double>;

// exp(logmod) overflows a double just above this point.
inline constexpr double kOverflowLogmod = 709.0;

// ls_add treats the smaller operand as invisible beyond this logmod gap.
inline constexpr double kAddLogmodCutoff = 40.0;

// Complex value stored as (log of modulus, phase).  The phase is kept as
// accumulated along the computation, never reduced mod 2*pi, so products
// of many factors keep a well-defined continuous argument.  An exact zero
// is encoded as logmod = -infinity with phase 0.
struct LogScaled {
  double logmod;
  double phase;

  static LogScaled zero();
  static LogScaled one() { return {0.0, 0.0}; }
  static LogScaled from(Complex v);
  static LogScaled from_real(double x);
  // No normalisation: callers own the phase sheet.
  static LogScaled from_parts(double logmod, double phase) {
    return {logmod, phase};
  }

  bool is_zero() const;

  // Materialise as a native complex number.  Throws OverflowError when
  // |value| exceeds the double range; the message names the logmod.
  Complex value() const;
};

LogScaled operator*(const LogScaled& a, const LogScaled& b);
LogScaled operator/(const LogScaled& a, const LogScaled& b);
// Rescales by the larger logmod before adding.  Exact when either operand
// is zero; returns the larger operand unchanged when the logmods differ
// by more than kAddLogmodCutoff.
LogScaled operator+(const LogScaled& a, const LogScaled& b);
LogScaled operator-(const LogScaled& a, const LogScaled& b);
LogScaled neg(const LogScaled& a);

// |a - b| / max(|a|, |b|), evaluated without leaving log space.
double rel_gap(const LogScaled& a, const LogScaled& b);

// log on the branch mapping the closed upper half plane onto the strip
// 0 <= Im <= pi: log 1 = 0, log(-1) = i*pi, positive reals map to the
// real axis.  Throws DomainError at 0 and for Im(zeta) < 0.
Complex log_upper(Complex zeta);

// log(log zeta) with the inner log taken by log_upper.  Defined on the
// integration contour: for zeta in (0,1) the inner log is a negative
// real, placed on the upper side of the cut, so
//   log(log t) = log(-log t) + i*pi,   0 < t < 1.
// Throws SingularPointError at zeta = 1 (outer log of 0).
Complex log_log_contour(Complex zeta);

// Principal log with arg(negative real axis) = +pi, i.e. the limit from
// above.  Used for continuation paths that may touch the cut.
Complex log_principal_upper_cut(Complex zeta);

// exp(exponent * base_log) as a LogScaled.  base_log == 0 gives exactly
// one for every exponent (1^lambda = 1 on this branch).
LogScaled pow_from_log(Complex base_log, Complex exponent);

}  // namespace gderiv

#endif  // GDERIV_COMPLEX_LOG_HPP
