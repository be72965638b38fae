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

#ifndef GDERIV_G_EVAL_HPP
#define GDERIV_G_EVAL_HPP

#include "gderiv/complex_log.hpp"
#include "gderiv/quadrature.hpp"

namespace gderiv {

// G(lambda, z): the entire-in-lambda interpolant of the Gamma derivatives,
//   G(lambda, z) = int_C e^{-zeta} (log zeta)^lambda zeta^{z-1} d zeta,
// over the contour [0, 1-r] + upper semicircle + [1+r, inf), with the
// branch fixed by log_upper / log_log_contour.  G(m, z) = Gamma^(m)(z) for
// integer m >= 0.

enum class Method {
  kAuto,          // series_plus_tail, contour, or continuation by region
  kContour,       // direct contour quadrature (moderate |lambda| only)
  kSplit,         // both pieces split at t = 1 by quadrature
  kSeriesPlusTail // series for the lower piece, quadrature for the tail
};

struct EvalOptions {
  Method method = Method::kAuto;
  double contour_radius = 0.5;
  double rel_tol = 1e-10;
};

struct EvalResult {
  LogScaled value;
  // Error estimate relative to exp(value.logmod).
  double abs_err = 0.0;
  long n_evals = 0;
  // True when the value was reached by analytic continuation across Re z <= 0.
  bool continued = false;
};

EvalResult eval(Complex lambda, Complex z, const EvalOptions& opts = {});

// Contour quadrature.  Requires Re z > 0 and radius in (0, 1); the result
// does not depend on the radius.  Magnitudes are kept in native doubles,
// so very large Re lambda must use the split/series route instead.
QuadResult eval_contour(Complex lambda, Complex z, double radius,
                        double rel_tol);

// G = lower + tail, split at t = 1:
//   lower = e^{i pi lambda} int_0^1 e^{-t} (-log t)^lambda t^{z-1} dt
//   tail  =                 int_1^inf e^{-t} (log t)^lambda t^{z-1} dt
// Requires Re lambda > -1 and Re z > 0.
struct SplitResult {
  QuadResult lower;
  QuadResult tail;
};
SplitResult eval_split(Complex lambda, Complex z, double rel_tol);

// Lower piece by the alternating series
//   e^{i pi lambda} Gamma(lambda+1) sum_n (-1)^n / (n! (n+z)^{lambda+1}),
// always taking at least 10 terms.  Requires Re lambda > -1, Re z > 0.
LogScaled lower_series(Complex lambda, Complex z, double rel_tol,
                       double* err_out = nullptr, long* n_terms = nullptr);

// Tail piece by log-scaled quadrature; safe for lambda far beyond the
// overflow range of native doubles.
QuadResult tail_integral(Complex lambda, Complex z, double rel_tol);

EvalResult eval_series_plus_tail(Complex lambda, Complex z, double rel_tol);

// |G(lambda, z+1) - z G(lambda, z) - lambda G(lambda-1, z)| relative to
// |G(lambda, z+1)|.
double recurrence_residual(Complex lambda, Complex z, double rel_tol = 1e-11);

// d/dz G(lambda, z), which equals G(lambda+1, z).  Requires Re z > 0.
EvalResult dz(Complex lambda, Complex z, double rel_tol = 1e-10);

// Continuation one strip to the left:
//   G(lambda-1, z) = z^{-lambda} [ z0^lambda G(lambda-1, z0)
//                                  + int_{z0}^{z} zeta^{lambda-1} G(lambda, zeta+1) d zeta ]
// along the straight segment from z0 (Re z0 > 0) to z (Re z > -1).  The
// segment must not cross the cut (-inf, 0); a real path through 0 is
// accepted when Re lambda > 0, where the integrand stays integrable.
EvalResult continue_left(Complex lambda, Complex z, Complex z0,
                         double rel_tol = 1e-12);

// z^{lambda+1} G(lambda, z) / (e^{i pi lambda} Gamma(lambda+1)), which
// tends to 1 as z -> 0.  small_z_gap returns ratio - 1 computed without
// cancellation, so the approach to the limit is measurable at any scale.
Complex small_z_ratio(Complex lambda, Complex z);
LogScaled small_z_gap(Complex lambda, Complex z);

// int_0^1 (-log t)^lambda t^{n+z-1} dt  =  Gamma(lambda+1) / (n+z)^{lambda+1}.
// Left side by quadrature; used to pin the quadrature against the closed
// form.  Requires Re lambda > -1 and Re(n + z) > 0.
QuadResult log_power_moment(Complex lambda, int n, Complex z, double rel_tol);

}  // namespace gderiv

#endif  // GDERIV_G_EVAL_HPP
