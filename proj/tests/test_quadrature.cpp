#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "gderiv/errors.hpp"
#include "gderiv/quadrature.hpp"

using gderiv::Complex;
using gderiv::ContourSpec;
using gderiv::PanelOptions;
using gderiv::QuadResult;
using gderiv::TailOptions;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double rel_to(const QuadResult& got, Complex want) {
  return std::abs(got.value.value() - want) / std::abs(want);
}

}  // namespace

TEST_CASE("interval closed forms") {
  auto sq = [](double t) -> Complex { return {t * t, 0.0}; };
  QuadResult q = gderiv::integrate_interval(sq, 0.0, 1.0, 1e-12);
  CHECK(rel_to(q, {1.0 / 3.0, 0.0}) < 1e-12);
  CHECK(q.n_evals > 0);

  auto s = [](double t) -> Complex { return {std::sin(t), 0.0}; };
  CHECK(rel_to(gderiv::integrate_interval(s, 0.0, kPi, 1e-12), {2.0, 0.0}) <
        1e-12);

  // Complex integrand: int_0^pi e^{it} dt = 2i.
  auto e = [](double t) -> Complex { return std::exp(Complex(0.0, t)); };
  CHECK(rel_to(gderiv::integrate_interval(e, 0.0, kPi, 1e-12), {0.0, 2.0}) <
        1e-12);

  // Degenerate interval integrates to zero.
  CHECK(gderiv::integrate_interval(sq, 2.0, 2.0, 1e-10).value.is_zero());
}

TEST_CASE("reported error bounds the true error") {
  // A mildly oscillatory integrand with known value:
  // int_0^1 cos(20 t) dt = sin(20)/20.
  auto f = [](double t) -> Complex { return {std::cos(20.0 * t), 0.0}; };
  for (double tol : {1e-6, 1e-9, 1e-12}) {
    const QuadResult q = gderiv::integrate_interval(f, 0.0, 1.0, tol);
    const double want = std::sin(20.0) / 20.0;
    const double truth =
        std::abs(q.value.value() - Complex(want, 0.0)) /
        std::exp(q.value.logmod);
    CHECK(truth <= q.abs_err + 1e-15);
  }
}

TEST_CASE("graded panels resolve integrable endpoint singularities") {
  // int_0^1 t^{-1/2} dt = 2, singular at the left end.
  PanelOptions opts;
  opts.rel_tol = 1e-11;
  opts.singular_left = true;
  auto f = [](double t) -> Complex {
    return {t > 0.0 ? 1.0 / std::sqrt(t) : 0.0, 0.0};
  };
  CHECK(rel_to(gderiv::integrate_log_interval(
                   [](double t) -> Complex {
                     if (t <= 0.0) return {-kInf, 0.0};
                     return {-0.5 * std::log(t), 0.0};
                   },
                   0.0, 1.0, opts),
               {2.0, 0.0}) < 1e-11);
  CHECK(rel_to(gderiv::integrate_interval(f, 0.0, 1.0, opts), {2.0, 0.0}) <
        1e-11);

  // Mirrored: int_0^1 (1-t)^{-1/3} dt = 3/2, singular at the right end.
  PanelOptions ropts;
  ropts.rel_tol = 1e-11;
  ropts.singular_right = true;
  auto g = [](double t) -> Complex {
    return {t < 1.0 ? std::pow(1.0 - t, -1.0 / 3.0) : 0.0, 0.0};
  };
  // The request bounds the error estimate; true error gets 5x headroom.
  CHECK(rel_to(gderiv::integrate_interval(g, 0.0, 1.0, ropts), {1.5, 0.0}) <
        5e-11);
}

TEST_CASE("log-interval integration carries scales no double can hold") {
  // int_0^1 e^{S} t^2 dt = e^{S} / 3 for a shift S far above overflow.
  const double S = 5000.0;
  PanelOptions opts;
  opts.rel_tol = 1e-12;
  const QuadResult q = gderiv::integrate_log_interval(
      [S](double t) -> Complex {
        if (t <= 0.0) return {-kInf, 0.0};
        return {S + 2.0 * std::log(t), 0.0};
      },
      0.0, 1.0, opts);
  CHECK(q.value.logmod == doctest::Approx(S - std::log(3.0)).epsilon(1e-13));
  CHECK(q.value.phase == doctest::Approx(0.0));

  // A +inf sample is a contract violation, not a quiet zero.
  CHECK_THROWS_AS((void)gderiv::integrate_log_interval(
                      [](double t) -> Complex {
                        return {t < 0.5 ? kInf : 0.0, 0.0};
                      },
                      0.0, 1.0, opts),
                  gderiv::EvaluationError);
}

TEST_CASE("abs_floor stops refinement of a vanishing integral") {
  // int_{-1}^{1} t dt = 0: no relative target is reachable, the floor is.
  PanelOptions opts;
  opts.rel_tol = 1e-12;
  opts.abs_floor = 1e-9;
  auto f = [](double t) -> Complex { return {t, 0.0}; };
  const QuadResult q = gderiv::integrate_interval(f, -1.0, 1.0, opts);
  CHECK((q.value.is_zero() || std::exp(q.value.logmod) < 1e-9));
}

TEST_CASE("tail closed forms") {
  // int_1^inf t^3 e^{-t} dt = 16/e.
  auto f = [](double t) -> Complex { return {t * t * t * std::exp(-t), 0.0}; };
  TailOptions topts;
  topts.rel_tol = 1e-11;
  topts.peak_hint = 3.0;
  CHECK(rel_to(gderiv::integrate_tail(f, 1.0, topts),
               {16.0 / std::exp(1.0), 0.0}) < 1e-10);

  // Same in log form: int_0^inf e^{-t} t^{100} dt = 100!.
  TailOptions lt;
  lt.rel_tol = 1e-11;
  lt.peak_hint = 100.0;
  const QuadResult q = gderiv::integrate_log_tail(
      [](double t) -> Complex {
        if (t <= 0.0) return {-kInf, 0.0};
        return {-t + 100.0 * std::log(t), 0.0};
      },
      0.0, lt);
  CHECK(q.value.logmod == doctest::Approx(std::lgamma(101.0)).epsilon(1e-12));
}

TEST_CASE("truncation walks out to wherever the peak sits") {
  // Peak at t = 3000, far beyond the default start width.
  TailOptions topts;
  topts.rel_tol = 1e-10;
  topts.peak_hint = 3000.0;
  const QuadResult q = gderiv::integrate_log_tail(
      [](double t) -> Complex {
        if (t <= 0.0) return {-kInf, 0.0};
        return {-t + 3000.0 * std::log(t), 0.0};
      },
      0.0, topts);
  CHECK(q.value.logmod ==
        doctest::Approx(std::lgamma(3001.0)).epsilon(1e-11));
}

TEST_CASE("contour integration sums the three segments in order") {
  // For an entire integrand the detour around 1 changes nothing:
  // int_C e^{-zeta} d zeta = 1 - e^{-T}.
  ContourSpec spec;
  spec.radius = 0.5;
  spec.truncation = 40.0;
  auto f = [](Complex zeta) -> Complex { return std::exp(-zeta); };
  const QuadResult q = gderiv::integrate_contour(f, spec, 1e-12);
  CHECK(rel_to(q, {1.0 - std::exp(-40.0), 0.0}) < 1e-12);

  // Radius independence for an integrand with a branch point at 1:
  // sqrt(zeta - 1) on the upper branch, fixed endpoints.
  auto g = [](Complex zeta) -> Complex {
    const Complex w = zeta - Complex(1.0, 0.0);
    const double r = std::abs(w);
    double th = std::arg(w);
    if (th < 0.0) th += 2.0 * kPi;  // branch continuous over the semicircle
    return std::polar(std::sqrt(r), 0.5 * th) * std::exp(-zeta);
  };
  QuadResult qa, qb;
  ContourSpec sa = spec, sb = spec;
  sa.radius = 0.2;
  sb.radius = 0.8;
  qa = gderiv::integrate_contour(g, sa, 1e-11);
  qb = gderiv::integrate_contour(g, sb, 1e-11);
  CHECK(rel_gap(qa.value, qb.value) < 1e-9);
}

TEST_CASE("panel budget exhaustion reports instead of lying") {
  PanelOptions opts;
  opts.rel_tol = 1e-14;
  opts.max_panels = 4;
  auto wig = [](double t) -> Complex { return {std::cos(300.0 * t), 0.0}; };
  CHECK_THROWS_AS((void)gderiv::integrate_interval(wig, 0.0, 1.0, opts),
                  gderiv::AccuracyError);
  opts.throw_on_failure = false;
  CHECK_NOTHROW((void)gderiv::integrate_interval(wig, 0.0, 1.0, opts));
}
