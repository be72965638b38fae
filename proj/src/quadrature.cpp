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

#include "gderiv/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>
#include <vector>

#include "gderiv/errors.hpp"

namespace gderiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// 15-point Kronrod extension of 7-point Gauss (QUADPACK dqk15 nodes).
// All nodes are interior, so endpoint singularities are never sampled.
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.2293532201052922e-1, 0.6309209262997855e-1, 0.1047900103222502,
    0.1406532597155259,    0.1690047266392679,    0.1903505780647854,
    0.2044329400752989,    0.2094821410847278};
constexpr double kWg[4] = {0.1294849661688697, 0.2797053914892767,
                           0.3818300505051189, 0.4179591836734694};

// Fraction of the width kept at a singular endpoint when splitting.
constexpr double kGradeRatio = 0.125;

struct Panel {
  double a, b;
  Complex value;
  double err;
  bool touches_left, touches_right;
};

struct PanelCmp {
  bool operator()(const Panel& x, const Panel& y) const { return x.err < y.err; }
};

struct RawResult {
  Complex value{0.0, 0.0};
  double err = 0.0;
  long n_evals = 0;
  bool converged = true;
  // Largest value of Re(g - shift) seen by a scaled run.
  double max_scaled_log = -kInf;
};

void check_finite(Complex v, double t) {
  if (std::isnan(v.real()) || std::isnan(v.imag())) {
    std::ostringstream os;
    os << "integrand produced NaN at t = " << t;
    throw EvaluationError(os.str());
  }
}

Panel gk15(const RealIntegrand& f, double a, double b, bool tl, bool tr) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Complex resg{0.0, 0.0};
  Complex resk{0.0, 0.0};
  const Complex fc = f(c);
  check_finite(fc, c);
  resk = kWgk[7] * fc;
  resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double x = h * kXgk[j];
    const Complex f1 = f(c - x);
    check_finite(f1, c - x);
    const Complex f2 = f(c + x);
    check_finite(f2, c + x);
    const Complex fsum = f1 + f2;
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  resk *= h;
  resg *= h;
  return Panel{a, b, resk, std::abs(resk - resg), tl, tr};
}

// Global adaptive refinement over [a, b].  Convergence: the summed panel
// error estimate drops below max(rel_tol * |integral|, abs_floor).
RawResult adaptive(const RealIntegrand& f, double a, double b,
                   const PanelOptions& opts) {
  RawResult out;
  if (a == b) return out;

  std::priority_queue<Panel, std::vector<Panel>, PanelCmp> heap;
  heap.push(gk15(f, a, b, true, true));
  out.n_evals += 15;
  int n_panels = 1;
  Complex total = heap.top().value;
  double total_err = heap.top().err;

  // Resolving an integrable endpoint singularity t^p with p near -1 needs
  // panel widths far below eps * span, so the width guard is relative to
  // the panel's own coordinates; only double exhaustion stops a split.
  auto splittable = [](const Panel& p) {
    const double local =
        std::max(1e-280, 4.0 * std::numeric_limits<double>::epsilon() *
                             std::max(std::fabs(p.a), std::fabs(p.b)));
    return p.b - p.a > local;
  };

  while (total_err > std::max(opts.rel_tol * std::abs(total), opts.abs_floor)) {
    if (n_panels >= opts.max_panels) {
      out.converged = false;
      break;
    }
    Panel worst = heap.top();
    if (!splittable(worst) || worst.err == 0.0) {
      out.converged = worst.err == 0.0;
      break;
    }
    heap.pop();
    total -= worst.value;
    total_err -= worst.err;

    double mid;
    if (opts.singular_left && worst.touches_left)
      mid = worst.a + (worst.b - worst.a) * kGradeRatio;
    else if (opts.singular_right && worst.touches_right)
      mid = worst.b - (worst.b - worst.a) * kGradeRatio;
    else
      mid = 0.5 * (worst.a + worst.b);

    Panel left = gk15(f, worst.a, mid, worst.touches_left, false);
    Panel right = gk15(f, mid, worst.b, false, worst.touches_right);
    out.n_evals += 30;
    ++n_panels;
    total += left.value + right.value;
    total_err += left.err + right.err;
    heap.push(left);
    heap.push(right);
  }

  // Deterministic summation order: ascending left endpoint.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  Complex sum{0.0, 0.0};
  double err = 0.0;
  for (const Panel& p : panels) {
    sum += p.value;
    err += p.err;
  }
  out.value = sum;
  out.err = err;
  return out;
}

QuadResult finish(const RawResult& raw, const PanelOptions& opts,
                  const char* what) {
  QuadResult q;
  q.n_evals = raw.n_evals;
  const double mag = std::abs(raw.value);
  if (mag == 0.0) {
    q.value = LogScaled::zero();
    q.abs_err = raw.err;
  } else {
    q.value = LogScaled::from(raw.value);
    q.abs_err = raw.err / mag;
  }
  if (!raw.converged && opts.throw_on_failure) {
    std::ostringstream os;
    os << what << ": panel budget exhausted at estimated relative error "
       << q.abs_err;
    throw AccuracyError(os.str(), q.value.logmod, q.value.phase, q.abs_err);
  }
  return q;
}

}  // namespace

QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              double rel_tol) {
  PanelOptions opts;
  opts.rel_tol = rel_tol;
  return integrate_interval(f, a, b, opts);
}

QuadResult integrate_interval(const RealIntegrand& f, double a, double b,
                              const PanelOptions& opts) {
  return finish(adaptive(f, a, b, opts), opts, "integrate_interval");
}

namespace {

// Internal signal: the presampled shift underestimated the peak enough to
// risk overflow in the weighted sums; restart with a larger shift.
struct RescaleNeeded {
  double observed_log;
};

double presample_shift(const LogIntegrand& g, double a, double b) {
  double s = -kInf;
  const int n = 32;
  for (int k = 0; k <= n; ++k) {
    const double t = a + (b - a) * static_cast<double>(k) / n;
    const Complex w = g(t);
    const double re = w.real();
    if (std::isfinite(re) && re > s) s = re;
  }
  return s;
}

}  // namespace

QuadResult integrate_log_interval(const LogIntegrand& g, double a, double b,
                                  const PanelOptions& opts) {
  if (a == b) return QuadResult{LogScaled::zero(), 0.0, 0};
  double shift = presample_shift(g, a, b);
  if (shift == -kInf) {
    // Integrand vanished on every sample; treat as an exact zero.
    return QuadResult{LogScaled::zero(), 0.0, 33};
  }
  long evals = 33;
  RawResult raw;
  PanelOptions inner = opts;
  inner.throw_on_failure = false;
  bool scaled_ok = false;
  for (int attempt = 0; attempt < 8 && !scaled_ok; ++attempt) {
    auto f = [&](double t) -> Complex {
      const Complex w = g(t);
      // Contract: a singular sample reports logmod -inf (a zero), never
      // +inf or NaN; +inf would poison the shift.
      if (std::isnan(w.real()) || std::isnan(w.imag()) || w.real() == kInf) {
        std::ostringstream os;
        os << "log-integrand not finite at t = " << t;
        throw EvaluationError(os.str());
      }
      const double e = w.real() - shift;
      if (e == -kInf) return {0.0, 0.0};
      if (e > 400.0) throw RescaleNeeded{w.real()};
      const double m = std::exp(e);
      return {m * std::cos(w.imag()), m * std::sin(w.imag())};
    };
    try {
      raw = adaptive(f, a, b, inner);
      evals += raw.n_evals;
      scaled_ok = true;
    } catch (const RescaleNeeded& r) {
      shift = r.observed_log;
    }
  }
  if (!scaled_ok)
    throw AccuracyError(
        "integrate_log_interval: shift rescaling failed to stabilise");

  QuadResult q;
  q.n_evals = evals;
  const double mag = std::abs(raw.value);
  if (mag == 0.0) {
    q.value = LogScaled::zero();
    q.abs_err = raw.err;
  } else {
    LogScaled v = LogScaled::from(raw.value);
    v.logmod += shift;
    q.value = v;
    q.abs_err = raw.err / mag;
  }
  if (!raw.converged && opts.throw_on_failure) {
    std::ostringstream os;
    os << "integrate_log_interval: panel budget exhausted at estimated "
          "relative error "
       << q.abs_err;
    throw AccuracyError(os.str(), q.value.logmod, q.value.phase, q.abs_err);
  }
  return q;
}

QuadResult integrate_tail(const RealIntegrand& f, double a, double rel_tol) {
  TailOptions opts;
  opts.rel_tol = rel_tol;
  return integrate_tail(f, a, opts);
}

namespace {

// Truncation point for a decaying tail: walk right until the integrand's
// log-magnitude has dropped 60 below the largest sample seen (covers any
// rel_tol >= 1e-13 with margin).  Returns the chosen T.
double find_truncation(const std::function<double(double)>& logmag, double a,
                       const TailOptions& opts, long* evals) {
  double peak = -kInf;
  auto probe = [&](double t) {
    const double v = logmag(t);
    ++*evals;
    if (std::isfinite(v) && v > peak) peak = v;
    return v;
  };
  if (opts.peak_hint > a) probe(opts.peak_hint);
  probe(a + 0.25 * opts.start_width);
  double T = std::max(a + opts.start_width,
                      opts.peak_hint + 0.5 * opts.start_width);
  for (int i = 0; i < 400; ++i) {
    const double v = probe(T);
    if (v < peak - 60.0) break;  // also true once v = -inf with finite peak
    T = T * 1.35 + 2.0;
    if (T > 1e8) break;
  }
  return T;
}

}  // namespace

QuadResult integrate_tail(const RealIntegrand& f, double a,
                          const TailOptions& opts) {
  const double beta = std::max(opts.decay_rate, 1e-3);
  long probe_evals = 0;
  auto logmag = [&](double t) {
    const Complex v = f(t);
    check_finite(v, t);
    const double m = std::abs(v);
    return m == 0.0 ? -kInf : std::log(m);
  };
  const double T = find_truncation(logmag, a, opts, &probe_evals);
  PanelOptions popts;
  popts.rel_tol = opts.rel_tol;
  popts.max_panels = opts.max_panels;
  popts.singular_left = opts.singular_left;
  QuadResult q = integrate_interval(f, a, T, popts);
  q.n_evals += probe_evals + 1;
  // Analytic bound on the discarded tail: |f(T)| * exp(-beta (t-T))
  // integrates to |f(T)| / beta; inflate by 4 for safety.
  const double bound = 4.0 * std::abs(f(T)) / beta;
  q.abs_err += q.value.is_zero() ? bound : bound / std::exp(q.value.logmod);
  return q;
}

QuadResult integrate_log_tail(const LogIntegrand& g, double a,
                              const TailOptions& opts) {
  const double beta = std::max(opts.decay_rate, 1e-3);
  long probe_evals = 0;
  auto logmag = [&](double t) { return g(t).real(); };
  const double T = find_truncation(logmag, a, opts, &probe_evals);
  PanelOptions popts;
  popts.rel_tol = opts.rel_tol;
  popts.max_panels = opts.max_panels;
  popts.singular_left = opts.singular_left;
  QuadResult q = integrate_log_interval(g, a, T, popts);
  q.n_evals += probe_evals + 1;
  const double gT = g(T).real();
  if (!q.value.is_zero() && std::isfinite(gT)) {
    // exp(gT - logmod) stays tiny by construction of T.
    q.abs_err += 4.0 / beta * std::exp(gT - q.value.logmod);
  }
  return q;
}

QuadResult integrate_contour(const ContourIntegrand& f, const ContourSpec& spec,
                             double rel_tol) {
  const double r = spec.radius;
  if (!(r > 0.0 && r < 1.0))
    throw DomainError("integrate_contour: radius must lie in (0, 1)");
  if (!(spec.truncation > 1.0 + r))
    throw DomainError("integrate_contour: truncation must exceed 1 + radius");

  PanelOptions left_opts;
  left_opts.rel_tol = rel_tol;
  left_opts.singular_left = true;  // integrand may blow up mildly at 0
  QuadResult q1 = integrate_interval([&](double t) { return f(Complex(t, 0.0)); },
                                     0.0, 1.0 - r, left_opts);

  // Upper semicircle zeta = 1 + r e^{i theta}, theta from pi to 0:
  // d zeta = i r e^{i theta} d theta; orientation flips the sign.
  QuadResult q2 = integrate_interval(
      [&](double th) {
        const Complex e{std::cos(th), std::sin(th)};
        const Complex zeta = Complex(1.0, 0.0) + r * e;
        return f(zeta) * Complex(0.0, 1.0) * r * e;
      },
      0.0, kPi, rel_tol);
  LogScaled mid = neg(q2.value);

  QuadResult q3 = integrate_interval([&](double t) { return f(Complex(t, 0.0)); },
                                     1.0 + r, spec.truncation, rel_tol);

  QuadResult out;
  out.value = q1.value + mid + q3.value;
  out.n_evals = q1.n_evals + q2.n_evals + q3.n_evals;
  // Combine error estimates on the scale of the summed value.
  const double scale = out.value.is_zero() ? 1.0 : std::exp(out.value.logmod);
  auto scaled_err = [scale](const QuadResult& q) {
    if (q.value.is_zero()) return q.abs_err / scale;
    return q.abs_err * std::exp(q.value.logmod) / scale;
  };
  out.abs_err = scaled_err(q1) + scaled_err(q2) + scaled_err(q3);
  return out;
}

}  // namespace gderiv
