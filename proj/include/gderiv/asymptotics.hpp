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

#ifndef GDERIV_ASYMPTOTICS_HPP
#define GDERIV_ASYMPTOTICS_HPP

#include "gderiv/complex_log.hpp"

namespace gderiv {

// psi(t) = t log t on [1, inf), strictly increasing from 0.
double psi(double t);

struct OmegaSolve {
  double lambda;
  double omega;
  double residual;  // |psi(omega) - lambda|
};

// Inverse of psi on [0, inf): omega(0) = 1 exactly; Newton from above the
// root (psi is convex), bisection fallback on [1, 2 + lambda].  Residual
// bounded by 1e-12 * max(1, lambda).
OmegaSolve omega(double lambda);

// Curvature A = lambda (1 + log w) / (2 log^2 w), w = omega(lambda): the
// Gaussian coefficient of the saddle at t = omega.  Requires lambda > 0.
double laplace_curvature(double lambda);

struct AsymptoticEstimate {
  LogScaled leading;
  // Declared error exponent: relative error O(lambda^{-alpha}).
  double error_exponent;
};

// Leading order of the tail integral over (1, inf):
//   sqrt(pi) e^{lambda log log w} e^{-w} w^z / sqrt(A),  w = omega(lambda).
// Requires lambda > e so all iterated logs are positive.
AsymptoticEstimate tail_leading_order(double lambda, Complex z);

// Coarser closed form with omega and A replaced by their log-accurate
// estimates:
//   sqrt(pi/2) (log w)^lambda e^{-w} (lambda / log lambda)^{z - 1/2}.
// Tracks the tail only up to a factor e^{O(log log lambda)}; its logmod,
// not its value, converges to the tail's.
AsymptoticEstimate tail_leading_order_coarse(double lambda, Complex z);

// Large-order derivative estimate for Re z > 0, m >= 2: the truncated
// alternating series (-1)^m m! sum_{n<n_terms} (-1)^n / (n! (n+z)^{m+1})
// plus the coarse tail term at lambda = m.
LogScaled deriv_large_order(int m, Complex z, int n_terms);

// Series coefficient entering the expansion at z = -1/2, two routes:
// term-by-term quadrature of
//   sum_n (-1)^n/n! int_0^1 (1-xi)^{lambda-1} (2n+1+xi)^{-(lambda+1)} dxi
// and the closed form (1/(2 lambda)) sum_n (-1)^n / ((n+1)! (2n+1)^lambda).
// Requires lambda > 1.
double neg_half_series_quad(double lambda);
double neg_half_series_closed(double lambda);

// Large-order estimate of the m-th derivative at z = -1/2: the pole-pair
// part plus the series correction and the tail leading order at m + 1.
LogScaled deriv_at_neg_half_asym(int m);

// m-th derivative at -1/2 of the pole pair 1/z - 1/(z+1):
// (-1)^m m! ((-2)^{m+1} - 2^{m+1}); zero for odd m.
double dominant_pole_deriv(int m);

// int_0^1 (xi-1)^{lambda-1} (lambda/log lambda)^{xi/2} dxi with the factor
// (xi-1)^{lambda-1} on the upper branch, e^{i pi (lambda-1)} (1-xi)^{lambda-1}.
// lambda * |integral| tends to 1 from above.  Requires lambda > 1.
LogScaled endpoint_power_integral(double lambda);

}  // namespace gderiv

#endif  // GDERIV_ASYMPTOTICS_HPP
