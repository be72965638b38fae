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

#ifndef GDERIV_QUADRATURE_HPP
#define GDERIV_QUADRATURE_HPP

#include <functional>

#include "gderiv/complex_log.hpp"

namespace gderiv {

// Returns the integrand value at a real parameter.
using RealIntegrand = std::function<Complex(double)>;
// Returns the *log* of the integrand value; Re = -inf encodes an exact
// zero.  Lets the engine integrate values far outside the double range.
using LogIntegrand = std::function<Complex(double)>;
using ContourIntegrand = std::function<Complex(Complex)>;

struct QuadResult {
  LogScaled value;
  // Error estimate on the scale of exp(value.logmod), i.e. the absolute
  // error divided by the modulus of the result.  Conservative by design.
  double abs_err = 0.0;
  long n_evals = 0;
};

struct PanelOptions {
  double rel_tol = 1e-10;
  // Absolute floor (same scale as the raw integral) below which further
  // refinement stops; 0 disables it.
  double abs_floor = 0.0;
  int max_panels = 4000;
  // Split panels geometrically towards an endpoint where the integrand is
  // singular instead of bisecting.
  bool singular_left = false;
  bool singular_right = false;
  // When false, a budget overrun returns the best estimate instead of
  // throwing AccuracyError.
  bool throw_on_failure = true;
};

struct TailOptions {
  double rel_tol = 1e-10;
  // Eventual decay rate: |f(t)| <= C exp(-decay_rate * t) past the peak.
  double decay_rate = 0.5;
  // Location of the integrand maximum, if known; guides truncation.
  double peak_hint = 0.0;
  double start_width = 40.0;
  int max_panels = 6000;
  bool singular_left = false;
};

// Contour [0, 1-r] + upper semicircle around 1 + [1+r, truncation].
struct ContourSpec {
  double radius = 0.5;
  double truncation = 40.0;
};

QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              double rel_tol);
QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              const PanelOptions& opts);

// Integrates exp(g(t)) over [a, b]; the returned logmod carries the
// internal scaling shift, so arbitrarily large or small integrands are
// handled without overflow.
QuadResult integrate_log_interval(const LogIntegrand& g, double a, double b,
                                  const PanelOptions& opts);

QuadResult integrate_tail(const RealIntegrand& f, double a, double rel_tol);
QuadResult integrate_tail(const RealIntegrand& f, double a,
                          const TailOptions& opts);
QuadResult integrate_log_tail(const LogIntegrand& g, double a,
                              const TailOptions& opts);

// Integrates f over the three contour segments in order and sums them.
QuadResult integrate_contour(const ContourIntegrand& f, const ContourSpec& spec,
                             double rel_tol);

}  // namespace gderiv

#endif  // GDERIV_QUADRATURE_HPP
