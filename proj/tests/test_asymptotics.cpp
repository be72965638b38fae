#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>

#include "gderiv/asymptotics.hpp"
#include "gderiv/errors.hpp"
#include "gderiv/g_eval.hpp"
#include "gderiv/gamma.hpp"

using gderiv::Complex;
using gderiv::LogScaled;

TEST_CASE("psi and its inverse") {
  CHECK(gderiv::psi(1.0) == 0.0);
  CHECK(gderiv::psi(std::exp(1.0)) == doctest::Approx(std::exp(1.0)));
  CHECK(gderiv::psi(3.0) > gderiv::psi(2.0));
  CHECK_THROWS_AS((void)gderiv::psi(0.5), gderiv::DomainError);

  // omega(0) = 1 exactly, not approximately.
  CHECK(gderiv::omega(0.0).omega == 1.0);
  CHECK(gderiv::omega(0.0).residual == 0.0);
  // psi(e) = e pins omega(e) = e.
  CHECK(gderiv::omega(std::exp(1.0)).omega ==
        doctest::Approx(std::exp(1.0)).epsilon(1e-13));

  double prev = 1.0;
  for (double lam : {1e-6, 0.5, 1.0, 3.0, 1e2, 1e4, 1e6}) {
    const gderiv::OmegaSolve s = gderiv::omega(lam);
    CHECK(s.residual <= 1e-12 * std::max(1.0, lam));
    CHECK(std::fabs(gderiv::psi(s.omega) - lam) <=
          1e-12 * std::max(1.0, lam));
    CHECK(s.omega > prev);  // strictly increasing inverse
    prev = s.omega;
  }
  CHECK_THROWS_AS((void)gderiv::omega(-1.0), gderiv::DomainError);
}

TEST_CASE("curvature equals the finite-difference saddle curvature") {
  // The exponent of the tail integrand at z = 1 is
  // phi(t) = lambda log log t - t, with phi'(t) = lambda/(t log t) - 1 and
  // the saddle at t = omega.  The Gaussian coefficient is
  // A = (omega^2 / 2) |phi''(omega)|.
  for (double lam : {5.0, 50.0, 500.0}) {
    const double w = gderiv::omega(lam).omega;
    const double h = 1e-5 * w;
    auto dphi = [lam](double t) { return lam / (t * std::log(t)) - 1.0; };
    const double ddphi = (dphi(w + h) - dphi(w - h)) / (2.0 * h);
    const double want = 0.5 * w * w * std::fabs(ddphi);
    CHECK(gderiv::laplace_curvature(lam) ==
          doctest::Approx(want).epsilon(1e-7));
  }
  CHECK_THROWS_AS((void)gderiv::laplace_curvature(0.0), gderiv::DomainError);
}

TEST_CASE("tail leading order tracks the quadrature value") {
  // One point of the ratio study; the full grid lives in the acceptance
  // run.  At lambda = 100 the relative gap is a few parts in a thousand.
  const gderiv::AsymptoticEstimate est =
      gderiv::tail_leading_order(100.0, {1.0, 0.0});
  const gderiv::QuadResult q = gderiv::tail_integral({100.0, 0.0}, {1.0, 0.0}, 1e-10);
  CHECK(rel_gap(est.leading, q.value) < 0.01);
  CHECK(est.error_exponent > 1.0 / 3.0);
  CHECK(est.error_exponent < 0.5);
  CHECK_THROWS_AS((void)gderiv::tail_leading_order(2.0, {1.0, 0.0}),
                  gderiv::DomainError);
}

TEST_CASE("coarse form converges in logmod only") {
  // The coarse substitution costs a factor e^{O(log log lambda)}: the
  // value ratio needn't converge, the logmod ratio must.
  double prev = std::numeric_limits<double>::infinity();
  for (double lam : {100.0, 1000.0, 10000.0}) {
    const LogScaled fine = gderiv::tail_leading_order(lam, {1.0, 0.0}).leading;
    const LogScaled coarse =
        gderiv::tail_leading_order_coarse(lam, {1.0, 0.0}).leading;
    const double gap = std::fabs(fine.logmod / coarse.logmod - 1.0);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-3);
  CHECK_THROWS_AS((void)gderiv::tail_leading_order_coarse(0.5, {1.0, 0.0}),
                  gderiv::DomainError);
}

TEST_CASE("large-order derivative estimate at z = 1") {
  const LogScaled est = gderiv::deriv_large_order(20, {1.0, 0.0}, 40);
  const LogScaled oracle = gderiv::deriv_oracle(20, {1.0, 0.0}, 0.75);
  CHECK(rel_gap(est, oracle) < 1e-5);
  // Alternating sign (-1)^m, read off the accumulated phase.
  for (int m = 2; m <= 8; ++m) {
    const LogScaled v = gderiv::deriv_large_order(m, {1.0, 0.0}, 40);
    const double sgn = std::cos(v.phase);
    CHECK(sgn * (m % 2 == 0 ? 1.0 : -1.0) > 0.5);
  }
  CHECK_THROWS_AS((void)gderiv::deriv_large_order(1, {1.0, 0.0}, 40),
                  gderiv::DomainError);
  CHECK_THROWS_AS((void)gderiv::deriv_large_order(4, {-1.0, 0.0}, 40),
                  gderiv::DomainError);
}

TEST_CASE("the two series routes agree and normalise to 1") {
  for (double lam : {3.0, 10.0})
    CHECK(std::fabs(gderiv::neg_half_series_quad(lam) /
                        gderiv::neg_half_series_closed(lam) -
                    1.0) < 1e-10);
  // 2 lambda J(lambda) climbs to 1 from below; the last step rounds onto
  // 1 exactly, so the bound is not strict.
  double prev = 0.0;
  for (double lam : {10.0, 20.0, 40.0}) {
    const double v = 2.0 * lam * gderiv::neg_half_series_closed(lam);
    CHECK(v <= 1.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(1.0 - prev < 1e-9);
  CHECK_THROWS_AS((void)gderiv::neg_half_series_closed(1.0),
                  gderiv::DomainError);
}

TEST_CASE("estimate at z = -1/2 against the recursion oracle") {
  // Even orders: the pole pair dominates and the correction nails the
  // rest.  Odd orders: the pole parts cancel, leaving series + tail.
  CHECK(rel_gap(gderiv::deriv_at_neg_half_asym(12),
                gderiv::deriv_left_of_zero(12, {-0.5, 0.0})) < 1e-9);
  CHECK(rel_gap(gderiv::deriv_at_neg_half_asym(16),
                gderiv::deriv_left_of_zero(16, {-0.5, 0.0})) < 1e-9);
  CHECK(rel_gap(gderiv::deriv_at_neg_half_asym(13),
                gderiv::deriv_left_of_zero(13, {-0.5, 0.0})) < 1e-3);

  // The bare pole pair alone is already a 1e-5 account at m = 8.
  CHECK(rel_gap(LogScaled::from_real(gderiv::dominant_pole_deriv(8)),
                gderiv::deriv_left_of_zero(8, {-0.5, 0.0})) < 1e-3);
  CHECK(gderiv::dominant_pole_deriv(5) == 0.0);
  CHECK(gderiv::dominant_pole_deriv(4) ==
        doctest::Approx(-std::pow(2.0, 6.0) * 24.0));
}

TEST_CASE("endpoint power integral scales like 1/lambda") {
  double prev = std::numeric_limits<double>::infinity();
  for (double lam : {20.0, 40.0, 80.0}) {
    const LogScaled v = gderiv::endpoint_power_integral(lam);
    const double scaled = lam * std::exp(v.logmod);
    CHECK(scaled > 1.0);
    CHECK(scaled < prev);
    prev = scaled;
  }
  CHECK(prev - 1.0 < 0.05);
  CHECK_THROWS_AS((void)gderiv::endpoint_power_integral(1.0),
                  gderiv::DomainError);
}
