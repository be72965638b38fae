#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "gderiv/complex_log.hpp"
#include "gderiv/errors.hpp"

using gderiv::Complex;
using gderiv::LogScaled;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

double abs_gap(Complex a, Complex b) { return std::abs(a - b); }

}  // namespace

TEST_CASE("log_upper fixes the branch on the closed upper half plane") {
  CHECK(abs_gap(gderiv::log_upper({1.0, 0.0}), {0.0, 0.0}) == 0.0);
  CHECK(abs_gap(gderiv::log_upper({-1.0, 0.0}), {0.0, kPi}) == 0.0);
  CHECK(gderiv::log_upper({std::exp(2.0), 0.0}).imag() == 0.0);
  CHECK(gderiv::log_upper({std::exp(2.0), 0.0}).real() == doctest::Approx(2.0));
  // Negative reals land on the upper edge of the cut.
  CHECK(gderiv::log_upper({-4.0, 0.0}).imag() == kPi);
  CHECK(gderiv::log_upper({-4.0, 0.0}).real() == doctest::Approx(std::log(4.0)));

  // The whole open upper half plane maps into the open strip (0, pi).
  for (double r : {0.01, 1.0, 7.0})
    for (double th : {0.1, 1.0, 2.0, 3.0}) {
      const Complex z = std::polar(r, th);
      const Complex w = gderiv::log_upper(z);
      CHECK(w.imag() > 0.0);
      CHECK(w.imag() < kPi);
      CHECK(abs_gap(std::exp(w), z) < 1e-14 * std::max(1.0, r));
    }

  CHECK_THROWS_AS((void)gderiv::log_upper({0.0, 0.0}), gderiv::DomainError);
  CHECK_THROWS_AS((void)gderiv::log_upper({1.0, -1e-30}), gderiv::DomainError);
}

TEST_CASE("log_log_contour puts (0,1) on the upper side of the inner cut") {
  for (double t : {1e-8, 0.25, 0.75, 0.999}) {
    const Complex w = gderiv::log_log_contour({t, 0.0});
    CHECK(w.imag() == kPi);
    CHECK(w.real() == doctest::Approx(std::log(-std::log(t))).epsilon(1e-14));
  }
  // Past t = 1 the inner log is positive real, so the outer log is real.
  for (double t : {1.5, 2.0, 40.0}) {
    const Complex w = gderiv::log_log_contour({t, 0.0});
    CHECK(w.imag() == 0.0);
    CHECK(w.real() == doctest::Approx(std::log(std::log(t))).epsilon(1e-14));
  }
  // On the semicircle the inner log stays inside the strip.
  for (double th : {0.3, 1.2, 2.8}) {
    const Complex zeta = Complex(1.0, 0.0) + std::polar(0.5, th);
    const Complex inner = gderiv::log_upper(zeta);
    CHECK(inner.imag() >= 0.0);
    CHECK(inner.imag() <= kPi);
    CHECK(std::isfinite(gderiv::log_log_contour(zeta).real()));
  }
  CHECK_THROWS_AS((void)gderiv::log_log_contour({1.0, 0.0}),
                  gderiv::SingularPointError);
}

TEST_CASE("LogScaled round-trips and encodes zero") {
  const Complex v{-2.5, 1.25};
  const LogScaled s = LogScaled::from(v);
  CHECK(abs_gap(s.value(), v) < 1e-15 * std::abs(v));

  CHECK(LogScaled::zero().is_zero());
  CHECK(LogScaled::from({0.0, 0.0}).is_zero());
  CHECK(LogScaled::zero().value() == Complex(0.0, 0.0));
  CHECK(LogScaled::one().value() == Complex(1.0, 0.0));

  CHECK(LogScaled::from_real(-3.0).phase == kPi);
  CHECK(LogScaled::from_real(3.0).phase == 0.0);
  CHECK(LogScaled::from_real(0.0).is_zero());

  // Exact negative reals land on the upper edge, matching log_upper.
  CHECK(LogScaled::from({-2.0, 0.0}).phase == kPi);
}

TEST_CASE("LogScaled arithmetic matches complex arithmetic") {
  const Complex a{1.5, -0.7}, b{-0.3, 2.2};
  const LogScaled la = LogScaled::from(a), lb = LogScaled::from(b);
  CHECK(abs_gap((la * lb).value(), a * b) < 1e-14 * std::abs(a * b));
  CHECK(abs_gap((la / lb).value(), a / b) < 1e-14 * std::abs(a / b));
  CHECK(abs_gap((la + lb).value(), a + b) < 1e-14 * std::abs(a + b));
  CHECK(abs_gap((la - lb).value(), a - b) < 1e-14 * std::abs(a - b));
  CHECK(abs_gap(neg(la).value(), -a) < 1e-14 * std::abs(a));

  // Zero is absorbing for * and neutral for +.
  CHECK((la * LogScaled::zero()).is_zero());
  CHECK((LogScaled::zero() + la).value() == la.value());
  // Self-subtraction leaves only the rounding residue of the pi rotation.
  CHECK((la - la).logmod < la.logmod + std::log(1e-15));
  CHECK_THROWS_AS((void)(la / LogScaled::zero()), gderiv::DomainError);
}

TEST_CASE("addition keeps huge magnitudes in range") {
  // e^5000 + e^4999: representable only in log scale.
  const LogScaled big{5000.0, 0.0}, small{4999.0, 0.0};
  const LogScaled sum = big + small;
  CHECK(sum.logmod == doctest::Approx(5000.0 + std::log1p(std::exp(-1.0))));
  // Beyond the visibility cutoff the larger operand is returned unchanged.
  const LogScaled tiny{5000.0 - 41.0, 0.3};
  CHECK((big + tiny).logmod == big.logmod);
  CHECK((big + tiny).phase == big.phase);
  // Cancellation of equal magnitudes collapses to the rounding floor
  // without ever materialising e^5000.
  CHECK((big - big).logmod < 5000.0 - 35.0);
}

TEST_CASE("addition stays on the larger operand's phase sheet") {
  // Phases recorded as 2*pi*k + arg survive addition without re-wrapping.
  const LogScaled a{1.0, 6.0 * kPi + 0.1};
  const LogScaled b{0.0, 6.0 * kPi - 0.2};
  const LogScaled s = a + b;
  CHECK(s.phase > 6.0 * kPi - kPi);
  CHECK(s.phase < 6.0 * kPi + kPi);
  const Complex want = std::exp(Complex(1.0, 0.1)) + std::exp(Complex(0.0, -0.2));
  CHECK(abs_gap(std::polar(std::exp(s.logmod), s.phase - 6.0 * kPi), want) <
        1e-14 * std::abs(want));
}

TEST_CASE("value materialisation refuses the overflow range") {
  CHECK_NOTHROW((void)LogScaled{708.0, 1.0}.value());
  const LogScaled too_big{710.0, 1.0};
  CHECK_THROWS_AS((void)too_big.value(), gderiv::OverflowError);
}

TEST_CASE("rel_gap measures |a-b|/max(|a|,|b|) in log space") {
  const LogScaled a = LogScaled::from({2.0, 0.0});
  const LogScaled b = LogScaled::from({2.0 + 1e-6, 0.0});
  CHECK(rel_gap(a, b) == doctest::Approx(0.5e-6).epsilon(1e-4));
  CHECK(rel_gap(a, a) < 1e-15);
  CHECK(rel_gap(LogScaled::zero(), LogScaled::zero()) == 0.0);
  // Identical values whose phases differ by a full turn agree as values.
  const LogScaled c{3.0, 0.25}, c2{3.0, 0.25 + 2.0 * kPi};
  CHECK(rel_gap(c, c2) < 1e-15);
  // Scale invariance: the gap is relative, not absolute.
  const LogScaled h1{5000.0, 0.0}, h2{5000.0 + 1e-8, 0.0};
  CHECK(rel_gap(h1, h2) == doctest::Approx(1e-8).epsilon(1e-4));
}

TEST_CASE("pow_from_log fixes 1^lambda = 1 and tracks the sheet") {
  CHECK(gderiv::pow_from_log({0.0, 0.0}, {5.5, -3.0}).value() ==
        Complex(1.0, 0.0));
  // (-1)^{1/2} on the upper-edge branch is +i.
  const LogScaled r = gderiv::pow_from_log({0.0, kPi}, {0.5, 0.0});
  CHECK(abs_gap(r.value(), {0.0, 1.0}) < 1e-15);
  // Powers add phases linearly: (e^{i pi})^3 keeps phase 3 pi, value -1.
  const LogScaled c = gderiv::pow_from_log({0.0, kPi}, {3.0, 0.0});
  CHECK(c.phase == doctest::Approx(3.0 * kPi));
  CHECK(abs_gap(c.value(), {-1.0, 0.0}) < 1e-14);
}

TEST_CASE("log_principal_upper_cut agrees with std::log off the cut") {
  for (Complex z : {Complex{2.0, 1.0}, Complex{-1.0, 0.5}, Complex{0.3, -0.4}})
    CHECK(abs_gap(gderiv::log_principal_upper_cut(z), std::log(z)) == 0.0);
  CHECK(gderiv::log_principal_upper_cut({-2.0, 0.0}).imag() == kPi);
  CHECK_THROWS_AS((void)gderiv::log_principal_upper_cut({0.0, 0.0}),
                  gderiv::DomainError);
}
