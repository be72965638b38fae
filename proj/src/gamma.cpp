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

#include "gderiv/gamma.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "gderiv/errors.hpp"
#include "gderiv/quadrature.hpp"

namespace gderiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kLogTwoPi = 1.8378770664093454836;

// Lanczos coefficients, g = 7, 9 terms.  Relative error below 1e-13
// throughout Re z >= 1/2.
constexpr double kLanczos[9] = {
    0.99999999999980993,   676.5203681218851,     -1259.1392167224028,
    771.32342877765313,    -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

void throw_pole(Complex z) {
  std::ostringstream os;
  os << "log_gamma: pole at z = " << z.real();
  throw DomainError(os.str());
}

// log(sin(pi z)), stable for large |Im z|.
Complex log_sin_pi(Complex z) {
  const Complex w = kPi * z;
  const Complex i(0.0, 1.0);
  if (w.imag() > 20.0) {
    // sin w = e^{-iw} (1 - e^{2iw}) * i/2
    return -i * w + std::log((1.0 - std::exp(2.0 * i * w)) * Complex(0.0, 0.5));
  }
  if (w.imag() < -20.0) {
    return i * w + std::log((1.0 - std::exp(-2.0 * i * w)) * Complex(0.0, -0.5));
  }
  return std::log(std::sin(w));
}

Complex log_gamma_right(Complex z) {
  // Shift so the series is evaluated at z - 1.
  const Complex zm1 = z - 1.0;
  Complex acc(kLanczos[0], 0.0);
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (zm1 + static_cast<double>(k));
  const Complex t = zm1 + 7.5;
  return 0.5 * kLogTwoPi + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace

Complex log_gamma(Complex z) {
  if (is_pole(z)) throw_pole(z);
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return std::log(kPi) - log_sin_pi(z) - log_gamma_right(1.0 - z);
  }
  return log_gamma_right(z);
}

LogScaled gamma(Complex z) {
  const Complex lg = log_gamma(z);
  return LogScaled::from_parts(lg.real(), lg.imag());
}

LogScaled upper_incomplete_at_one(Complex z) {
  TailOptions opts;
  opts.rel_tol = 1e-12;
  opts.decay_rate = 0.5;
  opts.peak_hint = std::max(1.0, z.real() - 1.0);
  auto g = [z](double t) -> Complex {
    if (z == Complex(1.0, 0.0)) return {-t, 0.0};
    return Complex(-t, 0.0) + (z - 1.0) * std::log(t);
  };
  return integrate_log_tail(g, 1.0, opts).value;
}

LogScaled lower_incomplete_at_one(Complex z) {
  if (z.real() <= 0.0)
    throw DomainError("lower_incomplete_at_one: requires Re z > 0");
  PanelOptions opts;
  opts.rel_tol = 1e-12;
  opts.singular_left = z.real() < 1.0;
  auto g = [z](double t) -> Complex {
    if (t == 0.0) return {z.real() > 1.0 ? -kInf : kInf, 0.0};
    if (z == Complex(1.0, 0.0)) return {-t, 0.0};
    return Complex(-t, 0.0) + (z - 1.0) * std::log(t);
  };
  return integrate_log_interval(g, 0.0, 1.0, opts).value;
}

LogScaled cauchy_deriv(int m, Complex z0, double radius,
                       const std::function<Complex(Complex)>& f_log) {
  if (m < 0) throw DomainError("cauchy_deriv: order must be non-negative");
  if (!(radius > 0.0)) throw DomainError("cauchy_deriv: radius must be positive");

  // Scale circle values by exp(-L0) to keep the sums in double range.
  const double L0 = f_log(z0).real();

  auto eval = [&](double theta) -> Complex {
    const Complex zeta = z0 + radius * Complex(std::cos(theta), std::sin(theta));
    const Complex w = f_log(zeta) - L0;
    if (std::isnan(w.real()) || std::isnan(w.imag()))
      throw EvaluationError("cauchy_deriv: function log produced NaN");
    return std::exp(w);
  };

  // Trapezoidal sums with node reuse: values at N nodes are the even-index
  // subset at 2N nodes.
  int n = 64;
  std::vector<Complex> vals(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) vals[static_cast<size_t>(j)] = eval(2.0 * kPi * j / n);

  auto weighted_mean = [&](double* abs_mean) {
    Complex s(0.0, 0.0);
    double sa = 0.0;
    const int nn = static_cast<int>(vals.size());
    for (int j = 0; j < nn; ++j) {
      const double th = 2.0 * kPi * j / nn;
      const Complex term =
          vals[static_cast<size_t>(j)] * Complex(std::cos(m * th), -std::sin(m * th));
      s += term;
      sa += std::abs(term);
    }
    *abs_mean = sa / nn;
    return s / static_cast<double>(nn);
  };

  double abs_mean = 0.0;
  Complex mean = weighted_mean(&abs_mean);
  Complex prev = mean;
  bool converged = false;
  while (n < 8192) {
    // Double the grid, reusing existing values at even indices.
    std::vector<Complex> next(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) next[static_cast<size_t>(2 * j)] = vals[static_cast<size_t>(j)];
    for (int j = 0; j < n; ++j)
      next[static_cast<size_t>(2 * j + 1)] = eval(2.0 * kPi * (2 * j + 1) / (2 * n));
    vals.swap(next);
    n *= 2;
    prev = mean;
    mean = weighted_mean(&abs_mean);
    // Stop at 1e-12 successive agreement or at the double-precision
    // cancellation floor of the alternating sum, whichever is larger.
    const double floor = 8.0 * std::numeric_limits<double>::epsilon() * abs_mean;
    const double diff = std::abs(mean - prev);
    if (diff <= std::max(1e-12 * std::abs(mean), floor)) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    LogScaled best = LogScaled::from(mean);
    std::ostringstream os;
    os << "cauchy_deriv: trapezoidal sums did not stabilise by N = " << n;
    throw AccuracyError(os.str(), best.logmod, best.phase,
                        std::abs(mean - prev) / std::abs(mean));
  }
  if (mean == Complex(0.0, 0.0)) return LogScaled::zero();

  // f^(m)(z0) = m! r^{-m} * mean, assembled in log space.
  LogScaled out = LogScaled::from(mean);
  out.logmod += std::lgamma(static_cast<double>(m) + 1.0) -
                m * std::log(radius) + L0;
  return out;
}

namespace {

void check_disc_avoids_poles(Complex z0, double radius) {
  // Only poles with Re >= Re z0 - radius can intersect the disc.
  const int n_max = static_cast<int>(std::ceil(-(z0.real() - radius))) + 1;
  for (int n = 0; n <= std::max(n_max, 0); ++n) {
    if (std::abs(z0 + static_cast<double>(n)) <= radius) {
      std::ostringstream os;
      os << "deriv_oracle: disc of radius " << radius << " around (" << z0.real()
         << ", " << z0.imag() << ") contains the pole at -" << n;
      throw DomainError(os.str());
    }
  }
}

}  // namespace

LogScaled deriv_oracle(int m, Complex z0, double radius) {
  check_disc_avoids_poles(z0, radius);
  return cauchy_deriv(m, z0, radius, [](Complex z) { return log_gamma(z); });
}

std::vector<LogScaled> deriv_oracle_all(int m, Complex z0, double radius) {
  check_disc_avoids_poles(z0, radius);
  if (m < 0) throw DomainError("deriv_oracle_all: order must be non-negative");

  const double L0 = log_gamma(z0).real();
  auto eval = [&](double theta) -> Complex {
    const Complex zeta = z0 + radius * Complex(std::cos(theta), std::sin(theta));
    return std::exp(log_gamma(zeta) - L0);
  };

  int n = 64;
  std::vector<Complex> vals(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) vals[static_cast<size_t>(j)] = eval(2.0 * kPi * j / n);

  auto means_of = [&](std::vector<double>* abs_means) {
    const int nn = static_cast<int>(vals.size());
    std::vector<Complex> s(static_cast<size_t>(m + 1), Complex(0.0, 0.0));
    abs_means->assign(static_cast<size_t>(m + 1), 0.0);
    for (int j = 0; j < nn; ++j) {
      const double th = 2.0 * kPi * j / nn;
      const Complex v = vals[static_cast<size_t>(j)];
      for (int k = 0; k <= m; ++k) {
        const Complex term = v * Complex(std::cos(k * th), -std::sin(k * th));
        s[static_cast<size_t>(k)] += term;
        (*abs_means)[static_cast<size_t>(k)] += std::abs(term);
      }
    }
    for (int k = 0; k <= m; ++k) {
      s[static_cast<size_t>(k)] /= nn;
      (*abs_means)[static_cast<size_t>(k)] /= nn;
    }
    return s;
  };

  std::vector<double> abs_means;
  std::vector<Complex> means = means_of(&abs_means);
  bool converged = false;
  while (n < 8192) {
    std::vector<Complex> next(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) next[static_cast<size_t>(2 * j)] = vals[static_cast<size_t>(j)];
    for (int j = 0; j < n; ++j)
      next[static_cast<size_t>(2 * j + 1)] = eval(2.0 * kPi * (2 * j + 1) / (2 * n));
    vals.swap(next);
    n *= 2;
    std::vector<Complex> prev = means;
    means = means_of(&abs_means);
    converged = true;
    for (int k = 0; k <= m; ++k) {
      const double floor =
          8.0 * std::numeric_limits<double>::epsilon() * abs_means[static_cast<size_t>(k)];
      const double diff = std::abs(means[static_cast<size_t>(k)] - prev[static_cast<size_t>(k)]);
      if (diff > std::max(1e-12 * std::abs(means[static_cast<size_t>(k)]), floor)) {
        converged = false;
        break;
      }
    }
    if (converged) break;
  }
  if (!converged)
    throw AccuracyError("deriv_oracle_all: trapezoidal sums did not stabilise");

  std::vector<LogScaled> out(static_cast<size_t>(m + 1));
  for (int k = 0; k <= m; ++k) {
    const Complex mk = means[static_cast<size_t>(k)];
    if (mk == Complex(0.0, 0.0)) {
      out[static_cast<size_t>(k)] = LogScaled::zero();
      continue;
    }
    LogScaled v = LogScaled::from(mk);
    v.logmod += std::lgamma(static_cast<double>(k) + 1.0) -
                k * std::log(radius) + L0;
    out[static_cast<size_t>(k)] = v;
  }
  return out;
}

LeftDerivResult deriv_left_of_zero_diag(int m, Complex z) {
  if (m < 0) throw DomainError("deriv_left_of_zero: order must be non-negative");
  if (!(z.real() > -1.0 && z.real() < 0.0))
    throw DomainError("deriv_left_of_zero: requires Re z in (-1, 0)");

  // Circle values one step to the right, where Gamma is regular.
  const Complex z1 = z + 1.0;
  const double radius =
      0.5 * std::min(std::min(std::abs(z1), std::abs(z1 + 1.0)), 1.0);
  const std::vector<LogScaled> up = deriv_oracle_all(m, z1, radius);

  const LogScaled zls = LogScaled::from(z);
  LogScaled g_prev = up[0] / zls;  // Gamma(z) = Gamma(z+1) / z
  double max_input = up[0].logmod;
  for (int j = 1; j <= m; ++j) {
    const LogScaled sub = LogScaled::from_real(static_cast<double>(j)) * g_prev;
    const LogScaled num = up[static_cast<size_t>(j)] - sub;
    max_input = std::max(max_input,
                         std::max(up[static_cast<size_t>(j)].logmod, sub.logmod));
    g_prev = num / zls;
  }
  LeftDerivResult res;
  res.value = g_prev;
  res.cancellation =
      g_prev.is_zero() ? kInf : std::exp(std::max(0.0, max_input - g_prev.logmod));
  return res;
}

LogScaled deriv_left_of_zero(int m, Complex z) {
  return deriv_left_of_zero_diag(m, z).value;
}

int deriv_sign(int m, double x) {
  if (!(x > 0.0)) throw DomainError("deriv_sign: requires x > 0");
  const double radius = std::min(2.0, 0.75 * x);
  const LogScaled v = deriv_oracle(m, Complex(x, 0.0), radius);
  if (v.is_zero()) return 0;
  return std::cos(v.phase) >= 0.0 ? 1 : -1;
}

}  // namespace gderiv
