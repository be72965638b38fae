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

#include "gderiv/g_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gderiv/asymptotics.hpp"
#include "gderiv/errors.hpp"
#include "gderiv/gamma.hpp"

namespace gderiv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

// e^{i pi lambda}; carries the branch of (log t)^lambda across (0, 1).
LogScaled branch_prefactor(Complex lambda) {
  return LogScaled::from_parts(-kPi * lambda.imag(), kPi * lambda.real());
}

// Log-magnitude of e^{-t} (log t)^{Re lambda} t^{Re z - 1} on the real axis
// past 1; drives truncation of the contour's flat segment.
double axis_log_mag(double t, double rl, double rz) {
  if (t <= 1.0) return -kInf;
  return -t + rl * std::log(std::log(t)) + (rz - 1.0) * std::log(t);
}

struct Truncation {
  double T;
  double tail_log;  // log-magnitude of the integrand at T
};

Truncation contour_truncation(Complex lambda, Complex z) {
  const double rl = lambda.real();
  const double rz = z.real();
  double peak = std::max(axis_log_mag(std::numbers::e, rl, rz),
                         axis_log_mag(2.0, rl, rz));
  if (rl > 1.0) peak = std::max(peak, axis_log_mag(omega(rl).omega, rl, rz));
  if (rz > 1.0) peak = std::max(peak, axis_log_mag(rz + 1.0, rl, rz));
  double T = 40.0 + 2.0 * std::abs(z.imag());
  while (axis_log_mag(T, rl, rz) > peak - 60.0 && T < 1e6) T = T * 1.3 + 2.0;
  return {T, axis_log_mag(T, rl, rz)};
}

// Scales a piecewise error estimate onto the magnitude of the combined
// value; exp of a large positive difference (heavy cancellation) is an
// honest report of total precision loss.
double rescale_err(double err, const LogScaled& piece, const LogScaled& whole) {
  if (piece.is_zero()) return 0.0;
  if (whole.is_zero()) return kInf;
  return err * std::exp(piece.logmod - whole.logmod);
}

// Lower piece through t = e^{-tau}:
//   int_0^1 e^{-t} (-log t)^lambda t^{z-1} dt
//     = int_0^inf exp(-e^{-tau} + lambda log tau - z tau) d tau.
// The branch prefactor e^{i pi lambda} is applied by the caller.
QuadResult lower_quad(Complex lambda, Complex z, double rel_tol) {
  TailOptions topts;
  topts.rel_tol = rel_tol;
  topts.decay_rate = std::clamp(0.5 * z.real(), 0.05, 4.0);
  topts.peak_hint =
      lambda.real() > 0.0 ? lambda.real() / std::max(z.real(), 0.25) : 0.5;
  topts.start_width = 40.0 + 2.0 * topts.peak_hint;
  topts.singular_left = lambda != Complex(0.0);
  auto g = [lambda, z](double tau) -> Complex {
    if (tau <= 0.0) {
      // A sample landing exactly on the singular endpoint reports zero;
      // the graded interior panels capture the integrable mass.
      if (lambda != Complex(0.0)) return {-kInf, 0.0};
      return {-1.0, 0.0};
    }
    Complex w = -std::exp(-tau) - z * tau;
    if (lambda != Complex(0.0)) w += lambda * std::log(Complex(tau, 0.0));
    return w;
  };
  return integrate_log_tail(g, 0.0, topts);
}

}  // namespace

QuadResult eval_contour(Complex lambda, Complex z, double radius,
                        double rel_tol) {
  if (!(z.real() > 0.0))
    throw DomainError("eval_contour: requires Re z > 0");
  if (!(radius > 0.0 && radius < 1.0))
    throw DomainError("eval_contour: radius must lie in (0, 1)");

  const Truncation tr = contour_truncation(lambda, z);
  auto f = [lambda, z](Complex zeta) -> Complex {
    Complex w = -zeta;
    if (lambda != Complex(0.0)) w += lambda * log_log_contour(zeta);
    if (z != Complex(1.0)) w += (z - 1.0) * log_upper(zeta);
    if (w.real() > 690.0) {
      std::ostringstream os;
      os << "eval_contour: integrand magnitude exceeds the double range "
            "(log "
         << w.real() << "); use the split or series method";
      throw OverflowError(os.str());
    }
    return std::exp(w);
  };
  ContourSpec spec;
  spec.radius = radius;
  spec.truncation = tr.T;
  QuadResult q = integrate_contour(f, spec, rel_tol);
  // Discarded tail past T: e^{-t} dominates all other factors there, so the
  // remainder is within a small multiple of the integrand at T.
  if (!q.value.is_zero() && std::isfinite(tr.tail_log))
    q.abs_err += 2.0 * std::exp(tr.tail_log - q.value.logmod);
  return q;
}

QuadResult tail_integral(Complex lambda, Complex z, double rel_tol) {
  TailOptions topts;
  topts.rel_tol = rel_tol;
  topts.decay_rate = 0.5;
  double hint = 2.0;
  if (lambda.real() > 1.0) hint = std::max(hint, omega(lambda.real()).omega);
  hint = std::max(hint, z.real());
  topts.peak_hint = hint - 1.0;
  topts.singular_left = lambda != Complex(0.0);
  // Local coordinate u = t - 1: panels anchored at 0 can grade into the
  // (log t)^lambda endpoint singularity far below eps-of-1 widths.
  auto g = [lambda, z](double u) -> Complex {
    if (u <= 0.0) {
      // A sample landing exactly on the singular endpoint reports zero;
      // the graded interior panels capture the integrable mass.
      if (lambda != Complex(0.0)) return {-kInf, 0.0};
      return {-1.0, 0.0};
    }
    const double lt = std::log1p(u);  // log t, exact near t = 1
    Complex w = -(1.0 + u) + (z - 1.0) * lt;
    if (lambda != Complex(0.0)) w += lambda * std::log(lt);
    return w;
  };
  return integrate_log_tail(g, 0.0, topts);
}

SplitResult eval_split(Complex lambda, Complex z, double rel_tol) {
  if (!(lambda.real() > -1.0))
    throw DomainError(
        "eval_split: requires Re lambda > -1 for integrability at t = 1");
  if (!(z.real() > 0.0)) throw DomainError("eval_split: requires Re z > 0");
  SplitResult s;
  s.lower = lower_quad(lambda, z, rel_tol);
  s.lower.value = branch_prefactor(lambda) * s.lower.value;
  s.tail = tail_integral(lambda, z, rel_tol);
  return s;
}

LogScaled lower_series(Complex lambda, Complex z, double rel_tol,
                       double* err_out, long* n_terms) {
  if (!(lambda.real() > -1.0))
    throw DomainError("lower_series: requires Re lambda > -1");
  if (!(z.real() > 0.0)) throw DomainError("lower_series: requires Re z > 0");

  const Complex mlp1 = -(lambda + 1.0);
  auto term_at = [&](int n) {
    LogScaled t = pow_from_log(std::log(z + Complex(n, 0.0)), mlp1);
    t.logmod -= std::lgamma(n + 1.0);
    t.phase += kPi * n;
    return t;
  };

  constexpr int kMinTerms = 10;
  constexpr int kMaxTerms = 600;
  LogScaled sum = LogScaled::zero();
  double rel = kInf;
  int n = 0;
  bool converged = false;
  for (; n < kMaxTerms; ++n) {
    sum = sum + term_at(n);
    if (n + 1 >= kMinTerms && !sum.is_zero()) {
      rel = std::exp(term_at(n + 1).logmod - sum.logmod);
      if (rel <= rel_tol) {
        ++n;
        converged = true;
        break;
      }
    }
  }

  LogScaled out = branch_prefactor(lambda) * gamma(lambda + 1.0) * sum;
  if (!converged)
    throw AccuracyError("lower_series: no convergence within 600 terms",
                        out.logmod, out.phase, rel);
  if (err_out) *err_out = rel;
  if (n_terms) *n_terms = n;
  return out;
}

EvalResult eval_series_plus_tail(Complex lambda, Complex z, double rel_tol) {
  double serr = 0.0;
  long nterms = 0;
  const LogScaled s = lower_series(lambda, z, rel_tol, &serr, &nterms);
  const QuadResult t = tail_integral(lambda, z, rel_tol);
  EvalResult out;
  out.value = s + t.value;
  out.n_evals = nterms + t.n_evals;
  out.abs_err = rescale_err(serr, s, out.value) +
                rescale_err(t.abs_err, t.value, out.value);
  return out;
}

EvalResult continue_left(Complex lambda, Complex z, Complex z0,
                         double rel_tol) {
  if (!(z0.real() > 0.0))
    throw DomainError("continue_left: anchor must have Re z0 > 0");
  if (z == Complex(0.0) || z == Complex(-1.0))
    throw DomainError("continue_left: target sits on a branch point");
  if (!(z.real() > -1.0))
    throw DomainError(
        "continue_left: target must keep Re z > -1 so the shifted argument "
        "stays right of the origin");

  const bool real_path = z0.imag() == 0.0 && z.imag() == 0.0;
  const bool through_origin = real_path && z.real() < 0.0;
  if (through_origin && !(lambda.real() > 0.0))
    throw PathError(
        "continue_left: the real path passes the branch point at 0, where "
        "zeta^{lambda-1} is only integrable for Re lambda > 0");
  if (!real_path) {
    const double i0 = z0.imag();
    const double i1 = z.imag();
    if (i0 * i1 < 0.0) {
      const double s_star = i0 / (i0 - i1);
      const double x_star = z0.real() + s_star * (z.real() - z0.real());
      if (x_star <= 0.0)
        throw PathError("continue_left: segment crosses the cut (-inf, 0]");
    } else if (i1 == 0.0 && i0 < 0.0 && z.real() < 0.0) {
      throw PathError(
          "continue_left: segment lands on the cut from below; the branch "
          "there is fixed by the upper-cut convention");
    }
  }

  const double inner_tol = std::min(1e-12, 0.1 * rel_tol);
  long inner_evals = 0;
  double inner_err = 0.0;
  auto G_at = [&](Complex mu, Complex w) {
    EvalOptions io;
    io.rel_tol = inner_tol;
    EvalResult r = eval(mu, w, io);
    inner_evals += r.n_evals;
    inner_err = std::max(inner_err, r.abs_err);
    return r.value;
  };

  const LogScaled anchor =
      pow_from_log(std::log(z0), lambda) * G_at(lambda - 1.0, z0);

  auto seg_f = [&](Complex zeta) -> Complex {
    const LogScaled pw = pow_from_log(log_principal_upper_cut(zeta), lambda - 1.0);
    return (pw * G_at(lambda, zeta + 1.0)).value();
  };

  PanelOptions qopts;
  qopts.rel_tol = 0.5 * rel_tol;
  // The integral may cancel far below the anchor's scale (it vanishes
  // exactly for lambda = 1, z0 = 1, where it integrates Gamma' across one
  // step of the recursion), so a purely relative target is unreachable;
  // accuracy of the final bracket needs only an anchor-scale floor.
  if (!anchor.is_zero() && anchor.logmod < 690.0)
    qopts.abs_floor = 0.5 * rel_tol * std::exp(anchor.logmod);
  LogScaled integral;
  double quad_err = 0.0;
  long quad_evals = 0;
  if (through_origin) {
    // Local coordinates put the branch point at parameter 0 on both halves
    // so graded splitting can dig arbitrarily deep.
    qopts.singular_left = true;
    const QuadResult qa = integrate_interval(
        [&](double v) { return seg_f(v * z0) * (-z0); }, 0.0, 1.0, qopts);
    const QuadResult qb = integrate_interval(
        [&](double u) { return seg_f(u * z) * z; }, 0.0, 1.0, qopts);
    integral = qa.value + qb.value;
    quad_err = rescale_err(qa.abs_err, qa.value, integral) +
               rescale_err(qb.abs_err, qb.value, integral);
    quad_evals = qa.n_evals + qb.n_evals;
  } else {
    const Complex d = z - z0;
    const QuadResult qi = integrate_interval(
        [&](double s) { return seg_f(z0 + s * d) * d; }, 0.0, 1.0, qopts);
    integral = qi.value;
    quad_err = qi.abs_err;
    quad_evals = qi.n_evals;
  }

  const LogScaled bracket = anchor + integral;
  EvalResult out;
  out.value = pow_from_log(log_principal_upper_cut(z), -lambda) * bracket;
  out.abs_err = rescale_err(inner_err, anchor, bracket) +
                rescale_err(quad_err, integral, bracket) + 2.0 * inner_tol;
  out.n_evals = inner_evals + quad_evals;
  out.continued = true;
  return out;
}

EvalResult eval(Complex lambda, Complex z, const EvalOptions& opts) {
  switch (opts.method) {
    case Method::kContour: {
      const QuadResult q =
          eval_contour(lambda, z, opts.contour_radius, opts.rel_tol);
      return {q.value, q.abs_err, q.n_evals, false};
    }
    case Method::kSplit: {
      const SplitResult s = eval_split(lambda, z, opts.rel_tol);
      EvalResult out;
      out.value = s.lower.value + s.tail.value;
      out.n_evals = s.lower.n_evals + s.tail.n_evals;
      out.abs_err = rescale_err(s.lower.abs_err, s.lower.value, out.value) +
                    rescale_err(s.tail.abs_err, s.tail.value, out.value);
      return out;
    }
    case Method::kSeriesPlusTail:
      return eval_series_plus_tail(lambda, z, opts.rel_tol);
    case Method::kAuto:
      break;
  }

  if (z.real() > 0.0) {
    if (lambda.real() > -1.0)
      return eval_series_plus_tail(lambda, z, opts.rel_tol);
    // The series prefactor Gamma(lambda + 1) degenerates here, but the
    // contour never touches the point log zeta = 0, so it still applies.
    const QuadResult q =
        eval_contour(lambda, z, opts.contour_radius, opts.rel_tol);
    return {q.value, q.abs_err, q.n_evals, false};
  }
  if (z.real() > -1.0) {
    if (z == Complex(0.0))
      throw DomainError("eval: z = 0 is a pole of the interpolant");
    return continue_left(lambda + 1.0, z, Complex(1.0, 0.0),
                         std::min(opts.rel_tol, 1e-11));
  }
  throw DomainError(
      "eval: Re z <= -1 lies beyond the single-strip continuation");
}

double recurrence_residual(Complex lambda, Complex z, double rel_tol) {
  EvalOptions o;
  o.rel_tol = rel_tol;
  const LogScaled a = eval(lambda, z + 1.0, o).value;
  const LogScaled b = LogScaled::from(z) * eval(lambda, z, o).value;
  LogScaled c = LogScaled::zero();
  if (lambda != Complex(0.0))
    c = LogScaled::from(lambda) * eval(lambda - 1.0, z, o).value;
  const LogScaled diff = a - (b + c);
  if (diff.is_zero()) return 0.0;
  if (a.is_zero()) return kInf;
  return std::exp(diff.logmod - a.logmod);
}

EvalResult dz(Complex lambda, Complex z, double rel_tol) {
  if (!(z.real() > 0.0)) throw DomainError("dz: requires Re z > 0");
  EvalOptions o;
  o.rel_tol = rel_tol;
  return eval(lambda + 1.0, z, o);
}

LogScaled small_z_gap(Complex lambda, Complex z) {
  if (!(lambda.real() > -1.0))
    throw DomainError("small_z_gap: requires Re lambda > -1");
  if (!(z.real() > 0.0)) throw DomainError("small_z_gap: requires Re z > 0");

  // ratio - 1 = sum_{n>=1} (-1)^n/n! (z/(n+z))^{lambda+1}
  //             + z^{lambda+1} tail / (e^{i pi lambda} Gamma(lambda+1)).
  const Complex lp1 = lambda + 1.0;
  const Complex lz = std::log(z);
  LogScaled s = LogScaled::zero();
  double lead = -kInf;
  for (int n = 1; n < 400; ++n) {
    const Complex e = lp1 * (lz - std::log(z + Complex(n, 0.0)));
    LogScaled term = LogScaled::from_parts(e.real(), e.imag());
    term.logmod -= std::lgamma(n + 1.0);
    term.phase += kPi * n;
    if (n == 1) lead = term.logmod;
    s = s + term;
    if (n >= 6 && term.logmod < lead - 46.0) break;
  }
  const QuadResult g1 = tail_integral(lambda, z, 1e-13);
  const LogScaled t = pow_from_log(lz, lp1) * g1.value /
                      (branch_prefactor(lambda) * gamma(lambda + 1.0));
  return s + t;
}

Complex small_z_ratio(Complex lambda, Complex z) {
  return (LogScaled::one() + small_z_gap(lambda, z)).value();
}

QuadResult log_power_moment(Complex lambda, int n, Complex z, double rel_tol) {
  if (!(lambda.real() > -1.0))
    throw DomainError("log_power_moment: requires Re lambda > -1");
  const Complex p = Complex(n, 0.0) + z - 1.0;  // exponent of t
  if (!(p.real() > -1.0))
    throw DomainError("log_power_moment: requires Re(n + z) > 0");

  auto g = [lambda, p](double t) -> Complex {
    // Samples landing exactly on a singular endpoint report zero; the
    // graded interior panels capture the integrable mass.
    if (t <= 0.0) {
      if (p != Complex(0.0) || lambda != Complex(0.0)) return {-kInf, 0.0};
      return {0.0, 0.0};
    }
    if (t >= 1.0) {
      if (lambda != Complex(0.0)) return {-kInf, 0.0};
      return {0.0, 0.0};
    }
    // -log t: direct form below 1/2, log1p form above (exact near t = 1;
    // the direct form is exact for small t where t - 1 rounds to -1).
    const double nl = t < 0.5 ? -std::log(t) : -std::log1p(t - 1.0);
    Complex w = p * std::log(t);
    if (lambda != Complex(0.0)) w += lambda * std::log(nl);
    return w;
  };
  PanelOptions opts;
  opts.rel_tol = rel_tol;
  opts.singular_left = true;
  opts.singular_right = true;
  return integrate_log_interval(g, 0.0, 1.0, opts);
}

}  // namespace gderiv
