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

#include "gderiv/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gderiv/errors.hpp"
#include "gderiv/quadrature.hpp"

namespace gderiv {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
}  // namespace

double psi(double t) {
  if (!(t >= 1.0)) throw DomainError("psi: requires t >= 1");
  return t * std::log(t);
}

OmegaSolve omega(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("omega: requires lambda >= 0");
  if (lambda == 0.0) return {0.0, 1.0, 0.0};

  const double target = 1e-13 * std::max(1.0, lambda);
  // psi is convex and increasing, so Newton started at or above the root
  // converges monotonically; the small-lambda seed 1 + lambda always lies
  // above, the large-lambda seed lambda/log(lambda) below (one overshoot).
  double x = (lambda <= kE) ? 1.0 + lambda : lambda / std::log(lambda);
  bool ok = false;
  for (int it = 0; it < 100; ++it) {
    const double f = x * std::log(x) - lambda;
    if (std::fabs(f) <= target) {
      ok = true;
      break;
    }
    x -= f / (1.0 + std::log(x));
    if (x < 1.0) x = 1.0;
  }
  if (!ok) {
    // Bisection fallback; psi(2 + lambda) > lambda for all lambda >= 0.
    double lo = 1.0, hi = 2.0 + lambda;
    for (int it = 0; it < 200; ++it) {
      x = 0.5 * (lo + hi);
      const double f = x * std::log(x) - lambda;
      if (std::fabs(f) <= target) break;
      (f > 0.0 ? hi : lo) = x;
    }
  }
  const double resid = std::fabs(x * std::log(x) - lambda);
  if (resid > 1e-12 * std::max(1.0, lambda)) {
    std::ostringstream os;
    os << "omega: residual " << resid << " above tolerance at lambda = "
       << lambda;
    throw AccuracyError(os.str(), std::log(x), 0.0, resid);
  }
  return {lambda, x, resid};
}

double laplace_curvature(double lambda) {
  if (!(lambda > 0.0)) throw DomainError("laplace_curvature: requires lambda > 0");
  const double w = omega(lambda).omega;
  const double lw = std::log(w);
  if (lw <= 0.0)
    throw DomainError("laplace_curvature: omega(lambda) must exceed 1");
  return lambda * (1.0 + lw) / (2.0 * lw * lw);
}

AsymptoticEstimate tail_leading_order(double lambda, Complex z) {
  if (!(lambda > kE))
    throw DomainError("tail_leading_order: requires lambda > e");
  const double w = omega(lambda).omega;
  const double u = std::log(w);
  const double a = laplace_curvature(lambda);
  AsymptoticEstimate est;
  est.leading = LogScaled::from_parts(
      0.5 * std::log(kPi) + lambda * std::log(u) - w + z.real() * u -
          0.5 * std::log(a),
      z.imag() * u);
  est.error_exponent = 0.4;  // within the guaranteed (1/3, 1/2) band
  return est;
}

AsymptoticEstimate tail_leading_order_coarse(double lambda, Complex z) {
  if (!(lambda > 1.0))
    throw DomainError("tail_leading_order_coarse: requires lambda > 1");
  const double w = omega(lambda).omega;
  const double u = std::log(w);
  const double ll = std::log(lambda / std::log(lambda));
  AsymptoticEstimate est;
  est.leading = LogScaled::from_parts(
      0.5 * std::log(0.5 * kPi) + lambda * std::log(u) - w +
          (z.real() - 0.5) * ll,
      z.imag() * ll);
  // Inherits the saddle-point window; the omega and curvature
  // substitutions add factors that only the logmod tracks.
  est.error_exponent = 0.4;
  return est;
}

LogScaled deriv_large_order(int m, Complex z, int n_terms) {
  if (m < 2) throw DomainError("deriv_large_order: requires m >= 2");
  if (!(z.real() > 0.0))
    throw DomainError("deriv_large_order: requires Re z > 0");
  if (n_terms < 1) throw DomainError("deriv_large_order: requires n_terms >= 1");

  const double lg_m1 = std::lgamma(static_cast<double>(m) + 1.0);
  LogScaled sum = LogScaled::zero();
  for (int n = 0; n < n_terms; ++n) {
    const Complex lp = static_cast<double>(m + 1) * std::log(z + static_cast<double>(n));
    const LogScaled term = LogScaled::from_parts(
        lg_m1 - std::lgamma(static_cast<double>(n) + 1.0) - lp.real(),
        kPi * (m + n) - lp.imag());
    sum = sum + term;
  }
  return sum + tail_leading_order_coarse(static_cast<double>(m), z).leading;
}

double neg_half_series_closed(double lambda) {
  if (!(lambda > 1.0))
    throw DomainError("neg_half_series_closed: requires lambda > 1");
  double s = 0.0;
  double fact = 1.0;  // (n+1)!
  for (int n = 0; n < 400; ++n) {
    fact *= (n + 1);
    const double term =
        ((n % 2 == 0) ? 1.0 : -1.0) / (fact * std::pow(2.0 * n + 1.0, lambda));
    s += term;
    if (std::fabs(term) < 1e-18 * std::fabs(s)) break;
  }
  return s / (2.0 * lambda);
}

double neg_half_series_quad(double lambda) {
  if (!(lambda > 1.0))
    throw DomainError("neg_half_series_quad: requires lambda > 1");
  double s = 0.0;
  double fact = 1.0;  // n!
  for (int n = 0; n < 60; ++n) {
    if (n > 0) fact *= n;
    const double c = 2.0 * n + 1.0;
    PanelOptions opts;
    opts.rel_tol = 1e-13;
    const QuadResult q = integrate_interval(
        [lambda, c](double xi) -> Complex {
          return {std::pow(1.0 - xi, lambda - 1.0) /
                      std::pow(c + xi, lambda + 1.0),
                  0.0};
        },
        0.0, 1.0, opts);
    const double qn = q.value.is_zero()
                          ? 0.0
                          : std::exp(q.value.logmod) * std::cos(q.value.phase);
    const double term = ((n % 2 == 0) ? 1.0 : -1.0) / fact * qn;
    s += term;
    if (std::fabs(term) < 1e-16 * std::fabs(s)) break;
  }
  return s;
}

LogScaled deriv_at_neg_half_asym(int m) {
  if (m < 1) throw DomainError("deriv_at_neg_half_asym: requires m >= 1");
  // Alternating correction sum starting at n = 1; bounded by its first
  // term 1/(2 * 3^{m+1}).
  double s1 = 0.0;
  double fact = 1.0;  // (n+1)!
  for (int n = 0; n < 400; ++n) {
    fact *= (n + 1);
    if (n >= 1) {
      const double term = ((n % 2 == 0) ? 1.0 : -1.0) /
                          (fact * std::pow(2.0 * n + 1.0, m + 1.0));
      s1 += term;
      if (std::fabs(term) < 1e-18 * (std::fabs(s1) + 1e-300)) break;
    }
  }
  const double sign_m = (m % 2 == 0) ? 1.0 : -1.0;
  const double brace = ((m % 2 == 0) ? -2.0 : 0.0) - sign_m * s1;
  LogScaled pole_part = LogScaled::zero();
  if (brace != 0.0) {
    pole_part = LogScaled::from_parts(
        (m + 1) * std::log(2.0) + std::lgamma(static_cast<double>(m) + 1.0) +
            std::log(std::fabs(brace)),
        brace > 0.0 ? 0.0 : kPi);
  }
  const double w = omega(static_cast<double>(m) + 1.0).omega;
  const double u = std::log(w);
  const LogScaled tail = LogScaled::from_parts(
      (m + 1.0) * std::log(u) - std::log(m + 1.0) - w +
          0.5 * std::log(0.5 * kPi),
      0.0);
  return pole_part + tail;
}

double dominant_pole_deriv(int m) {
  if (m < 0) throw DomainError("dominant_pole_deriv: requires m >= 0");
  if (m % 2 == 1) return 0.0;
  // (-1)^m m! ((-2)^{m+1} - 2^{m+1}) = -2^{m+2} m! for even m.
  return -std::pow(2.0, m + 2.0) * std::tgamma(static_cast<double>(m) + 1.0);
}

LogScaled endpoint_power_integral(double lambda) {
  if (!(lambda > 1.0))
    throw DomainError("endpoint_power_integral: requires lambda > 1");
  const double c = 0.5 * std::log(lambda / std::log(lambda));
  PanelOptions opts;
  opts.rel_tol = 1e-12;
  const QuadResult q = integrate_log_interval(
      [lambda, c](double xi) -> Complex {
        if (xi >= 1.0) return {-std::numeric_limits<double>::infinity(), 0.0};
        return {(lambda - 1.0) * std::log1p(-xi) + c * xi, 0.0};
      },
      0.0, 1.0, opts);
  LogScaled out = q.value;
  out.phase += kPi * (lambda - 1.0);  // upper-branch (xi-1)^{lambda-1}
  return out;
}

}  // namespace gderiv
