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

#include "gderiv/complex_log.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace gderiv {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

LogScaled LogScaled::zero() { return {-kInf, 0.0}; }

bool LogScaled::is_zero() const { return logmod == -kInf; }

LogScaled LogScaled::from(Complex v) {
  if (v == Complex(0.0, 0.0)) return zero();
  double ph = std::arg(v);
  // Keep exact negative reals on the upper side of the cut.
  if (ph == -kPi) ph = kPi;
  return {std::log(std::abs(v)), ph};
}

LogScaled LogScaled::from_real(double x) {
  if (x == 0.0) return zero();
  return {std::log(std::fabs(x)), x > 0.0 ? 0.0 : kPi};
}

Complex LogScaled::value() const {
  if (is_zero()) return {0.0, 0.0};
  if (logmod > kOverflowLogmod) {
    std::ostringstream os;
    os << "log-scaled value with logmod " << logmod
       << " exceeds the double-precision range";
    throw OverflowError(os.str());
  }
  const double m = std::exp(logmod);
  return {m * std::cos(phase), m * std::sin(phase)};
}

LogScaled operator*(const LogScaled& a, const LogScaled& b) {
  if (a.is_zero() || b.is_zero()) return LogScaled::zero();
  return {a.logmod + b.logmod, a.phase + b.phase};
}

LogScaled operator/(const LogScaled& a, const LogScaled& b) {
  if (b.is_zero()) throw DomainError("division by a log-scaled zero");
  if (a.is_zero()) return LogScaled::zero();
  return {a.logmod - b.logmod, a.phase - b.phase};
}

LogScaled operator+(const LogScaled& a, const LogScaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const LogScaled& big = (a.logmod >= b.logmod) ? a : b;
  const LogScaled& small = (a.logmod >= b.logmod) ? b : a;
  const double d = small.logmod - big.logmod;
  if (d < -kAddLogmodCutoff) return big;
  // w = 1 + (small/big); |w| in [0, 2], no overflow possible.
  const double m = std::exp(d);
  const double dp = small.phase - big.phase;
  const Complex w = Complex(1.0, 0.0) + Complex(m * std::cos(dp), m * std::sin(dp));
  if (w == Complex(0.0, 0.0)) return LogScaled::zero();
  // The phase moves by arg(w) in (-pi, pi]: staying on big's sheet.
  return {big.logmod + std::log(std::abs(w)), big.phase + std::arg(w)};
}

LogScaled neg(const LogScaled& a) {
  if (a.is_zero()) return a;
  return {a.logmod, a.phase + kPi};
}

LogScaled operator-(const LogScaled& a, const LogScaled& b) { return a + neg(b); }

double rel_gap(const LogScaled& a, const LogScaled& b) {
  if (a.is_zero() && b.is_zero()) return 0.0;
  const LogScaled d = a - b;
  if (d.is_zero()) return 0.0;
  const double ref = std::max(a.logmod, b.logmod);
  return std::exp(d.logmod - ref);
}

Complex log_upper(Complex zeta) {
  if (zeta == Complex(0.0, 0.0))
    throw DomainError("log_upper: argument is zero");
  const double im = zeta.imag();
  if (im < 0.0)
    throw DomainError("log_upper: argument below the real axis");
  if (im == 0.0) {
    const double re = zeta.real();
    // Negative reals sit on the upper edge of the cut: arg = +pi.
    return {std::log(std::fabs(re)), re > 0.0 ? 0.0 : kPi};
  }
  return {std::log(std::abs(zeta)), std::arg(zeta)};
}

Complex log_log_contour(Complex zeta) {
  if (zeta == Complex(1.0, 0.0))
    throw SingularPointError("log_log_contour: log zeta vanishes at zeta = 1");
  return log_upper(log_upper(zeta));
}

Complex log_principal_upper_cut(Complex zeta) {
  if (zeta == Complex(0.0, 0.0))
    throw DomainError("log_principal_upper_cut: argument is zero");
  if (zeta.imag() == 0.0 && zeta.real() < 0.0)
    return {std::log(-zeta.real()), kPi};
  return std::log(zeta);
}

LogScaled pow_from_log(Complex base_log, Complex exponent) {
  if (base_log == Complex(0.0, 0.0)) return LogScaled::one();
  const Complex w = exponent * base_log;
  return {w.real(), w.imag()};
}

}  // namespace gderiv
