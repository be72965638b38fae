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

#ifndef GDERIV_GAMMA_HPP
#define GDERIV_GAMMA_HPP

#include <functional>
#include <vector>

#include "gderiv/complex_log.hpp"

namespace gderiv {

// log Gamma(z), Lanczos approximation with reflection for Re z < 1/2.
// Throws DomainError at the poles z = 0, -1, -2, ...  The imaginary part
// is continuous on |arg| < pi up to multiples of 2*pi, which downstream
// arithmetic never depends on.
Complex log_gamma(Complex z);

// Gamma(z) in log-scaled form.
LogScaled gamma(Complex z);

// Incomplete gammas split at t = 1, by quadrature of e^{-t} t^{z-1}.
// upper: integral over (1, inf), entire in z.
// lower: integral over (0, 1), requires Re z > 0.
LogScaled upper_incomplete_at_one(Complex z);
LogScaled lower_incomplete_at_one(Complex z);

// m-th derivative of an analytic function from its values on a circle
// |zeta - z0| = radius (trapezoidal Cauchy integral, node doubling from 64
// to 8192 until successive sums agree to 1e-12 or hit the double-precision
// cancellation floor).  f_log returns log f; the result is log-scaled, so
// huge prefactors m! / radius^m never overflow.
LogScaled cauchy_deriv(int m, Complex z0, double radius,
                       const std::function<Complex(Complex)>& f_log);

// cauchy_deriv specialised to Gamma.  The closed disc must avoid the
// poles; otherwise DomainError.
LogScaled deriv_oracle(int m, Complex z0, double radius);

// All orders 0..m from one set of circle evaluations.
std::vector<LogScaled> deriv_oracle_all(int m, Complex z0, double radius);

// Gamma^(m)(z) for Re z in (-1, 0) by the recursion
//   Gamma^(j)(z) = (Gamma^(j)(z+1) - j Gamma^(j-1)(z)) / z,
// seeded with circle-oracle values at z+1.
LogScaled deriv_left_of_zero(int m, Complex z);

// Same, plus the cancellation factor exp(max input logmod - result logmod)
// used by callers that must budget for lost precision.
struct LeftDerivResult {
  LogScaled value;
  double cancellation;
};
LeftDerivResult deriv_left_of_zero_diag(int m, Complex z);

// Sign of Gamma^(m)(x) for real x > 0 (from the oracle's phase).
int deriv_sign(int m, double x);

}  // namespace gderiv

#endif  // GDERIV_GAMMA_HPP
