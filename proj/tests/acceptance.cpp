// Shipping gate: one line per criterion, exit status = number of failures.
// Run it from anywhere; the CLI under test is baked in at build time.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "gderiv/asymptotics.hpp"
#include "gderiv/complex_log.hpp"
#include "gderiv/g_eval.hpp"
#include "gderiv/gamma.hpp"
#include "gderiv/zeros.hpp"
#include "json.hpp"

namespace {

using gderiv::Complex;
using gderiv::EvalOptions;
using gderiv::LogScaled;
using gderiv::Method;
using gderiv::QuadResult;
using json = nlohmann::json;

constexpr double kPi = std::numbers::pi;

double oracle_radius(Complex z) {
  double dist = std::abs(z);
  for (int k = 1; k <= 4; ++k) dist = std::min(dist, std::abs(z + Complex(k, 0.0)));
  return std::min(1.5, 0.75 * dist);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

int run_cli(const std::string& args, std::string* out) {
  const std::string cmd = std::string(GDERIV_CLI_PATH) + " " + args;
  out->clear();
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return -1;
  char buf[4096];
  size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out->append(buf, n);
  const int status = pclose(p);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Gate {
  int index = 0;
  int failures = 0;

  void run(const char* what, const std::function<bool(std::string*)>& fn) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    std::string note;
    bool ok = false;
    try {
      ok = fn(&note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    std::printf("%s  %2d  %-58s  %s(%.2fs)\n", ok ? "PASS" : "FAIL", index,
                what, note.empty() ? "" : (note + "  ").c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

}  // namespace

int main() {
  Gate gate;

  gate.run("integer orders match the circle oracle, m <= 12", [](std::string* note) {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (Complex z : {Complex{0.5, 0.0}, Complex{1.0, 0.0}, Complex{1.5, 0.0},
                      Complex{2.0, 0.0}, Complex{3.0, 2.0}}) {
      const std::vector<LogScaled> oracle =
          gderiv::deriv_oracle_all(12, z, oracle_radius(z));
      for (int m = 0; m <= 12; ++m) {
        const LogScaled got = gderiv::eval({double(m), 0.0}, z).value;
        worst = std::max(worst, rel_gap(got, oracle[size_t(m)]));
      }
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    *note = "worst gap " + fmt(worst);
    return worst <= 1e-8 && secs <= 60.0;
  });

  gate.run("contour values are radius independent", [](std::string* note) {
    double worst = 0.0;
    bool within_err = true;
    for (Complex lam : {Complex{-2.5, 0.0}, Complex{0.5, 0.0}, Complex{1.7, 0.3}})
      for (Complex z : {Complex{1.0, 0.0}, Complex{2.5, 0.0}}) {
        QuadResult q[3];
        const double radii[3] = {0.2, 0.5, 0.8};
        for (int i = 0; i < 3; ++i)
          q[i] = gderiv::eval_contour(lam, z, radii[i], 1e-10);
        for (int i = 0; i < 3; ++i)
          for (int j = i + 1; j < 3; ++j) {
            const double gap = rel_gap(q[i].value, q[j].value);
            worst = std::max(worst, gap);
            if (gap > 5.0 * (q[i].abs_err + q[j].abs_err)) within_err = false;
          }
      }
    *note = "worst gap " + fmt(worst);
    return worst <= 1e-8 && within_err;
  });

  gate.run("contour, split, and series routes agree", [](std::string* note) {
    double worst = 0.0;
    for (Complex lam : {Complex{-0.5, 0.0}, Complex{0.5, 0.0}, Complex{1.7, 0.3}})
      for (Complex z : {Complex{1.0, 0.0}, Complex{2.5, 0.0}, Complex{1.0, 1.0}}) {
        EvalOptions oc, os, ot;
        oc.method = Method::kContour;
        os.method = Method::kSplit;
        ot.method = Method::kSeriesPlusTail;
        const LogScaled a = gderiv::eval(lam, z, oc).value;
        const LogScaled b = gderiv::eval(lam, z, os).value;
        const LogScaled c = gderiv::eval(lam, z, ot).value;
        worst = std::max({worst, rel_gap(a, b), rel_gap(a, c), rel_gap(b, c)});
      }
    *note = "worst gap " + fmt(worst);
    return worst <= 1e-8;
  });

  gate.run("log-power moments hit the closed form", [](std::string* note) {
    double worst = 0.0;
    for (Complex lam : {Complex{0.5, 0.0}, Complex{3.2, 0.0}})
      for (int n : {0, 1, 5})
        for (Complex z : {Complex{1.0, 0.0}, Complex{2.0, 1.0}}) {
          const QuadResult q = gderiv::log_power_moment(lam, n, z, 1e-12);
          const LogScaled closed =
              gderiv::gamma(lam + 1.0) /
              gderiv::pow_from_log(std::log(z + double(n)), lam + 1.0);
          worst = std::max(worst, rel_gap(q.value, closed));
        }
    *note = "worst gap " + fmt(worst);
    return worst <= 1e-10;
  });

  gate.run("small-z ratio approaches 1 monotonically", [](std::string* note) {
    bool ok = true;
    double last_axis = 0.0, last_ray = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= 6; ++k) {
      const double gap = std::exp(
          gderiv::small_z_gap({1.5, 0.0}, {std::pow(10.0, -k), 0.0}).logmod);
      if (!(gap < prev)) ok = false;
      prev = gap;
    }
    last_axis = prev;
    prev = std::numeric_limits<double>::infinity();
    for (int k = 2; k <= 6; ++k) {
      const Complex z = std::polar(std::pow(10.0, -k), kPi / 4.0);
      const double gap = std::exp(gderiv::small_z_gap({1.5, 0.0}, z).logmod);
      if (!(gap < prev)) ok = false;
      prev = gap;
    }
    last_ray = prev;
    *note = "final gaps " + fmt(last_axis) + " / " + fmt(last_ray);
    return ok && last_axis <= 1e-3 && last_ray <= 1e-3;
  });

  gate.run("functional equation and z-derivative", [](std::string* note) {
    double worst = 0.0;
    for (Complex lam : {Complex{0.5, 0.0}, Complex{1.0, 0.0}, Complex{2.5, 0.0}})
      for (Complex z : {Complex{0.7, 0.0}, Complex{1.0, 0.0}, Complex{3.0, 0.0}})
        worst = std::max(worst, gderiv::recurrence_residual(lam, z));
    double worst_fd = 0.0;
    for (Complex p : {Complex{0.0, 1.0}, Complex{1.0, 2.0}, Complex{0.5, 1.5}}) {
      const Complex lam{p.real(), 0.0}, z{p.imag(), 0.0};
      const double h = 1e-5 * std::max(1.0, std::abs(z));
      const Complex gp = gderiv::eval(lam, z + h).value.value();
      const Complex gm = gderiv::eval(lam, z - h).value.value();
      const Complex fd = (gp - gm) / (2.0 * h);
      const Complex d = gderiv::dz(lam, z).value.value();
      worst_fd = std::max(worst_fd, std::abs(d - fd) / std::abs(d));
    }
    *note = "residual " + fmt(worst) + ", fd gap " + fmt(worst_fd);
    return worst <= 1e-9 && worst_fd <= 1e-5;
  });

  gate.run("omega inverts t log t to 1e-12, exactly 1 at 0", [](std::string* note) {
    if (gderiv::omega(0.0).omega != 1.0) return false;
    double worst = 0.0;
    for (double lam : {1e-3, 0.5, 1.0, std::exp(1.0), 10.0, 100.0, 1e3, 1e6}) {
      const gderiv::OmegaSolve s = gderiv::omega(lam);
      worst = std::max(worst, s.residual / std::max(1.0, lam));
    }
    *note = "worst scaled residual " + fmt(worst);
    return worst <= 1e-12;
  });

  gate.run("tail leading order: |ratio-1| shrinks to <= 0.1", [](std::string* note) {
    const auto t0 = std::chrono::steady_clock::now();
    double prev = std::numeric_limits<double>::infinity();
    bool decreasing = true;
    double last = 0.0;
    for (double lam : {50.0, 100.0, 200.0, 400.0, 800.0}) {
      const QuadResult q = gderiv::tail_integral({lam, 0.0}, {1.0, 0.0}, 1e-10);
      const LogScaled lead = gderiv::tail_leading_order(lam, {1.0, 0.0}).leading;
      const LogScaled ratio = q.value / lead;
      last = std::abs(ratio.value() - Complex(1.0, 0.0));
      if (!(last < prev)) decreasing = false;
      prev = last;
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    *note = "|ratio-1| at 800: " + fmt(last);
    return decreasing && last <= 0.1 && secs <= 120.0;
  });

  gate.run("large-order estimate to 1e-5; signs alternate", [](std::string* note) {
    const LogScaled est = gderiv::deriv_large_order(20, {1.0, 0.0}, 40);
    const LogScaled oracle = gderiv::deriv_oracle(20, {1.0, 0.0}, 0.75);
    const double gap = rel_gap(est, oracle);
    bool signs = true;
    for (int m = 2; m <= 20; ++m)
      if (gderiv::deriv_sign(m, 1.0) != (m % 2 == 0 ? 1 : -1)) signs = false;
    *note = "gap at m=20: " + fmt(gap);
    return gap <= 1e-5 && signs;
  });

  gate.run("series coefficient identity and 2*lambda*J -> 1", [](std::string* note) {
    double worst = 0.0;
    for (double lam : {3.0, 10.0})
      worst = std::max(worst, std::fabs(gderiv::neg_half_series_quad(lam) /
                                            gderiv::neg_half_series_closed(lam) -
                                        1.0));
    bool monotone = true;
    double prev_gap = std::numeric_limits<double>::infinity();
    for (double lam : {10.0, 20.0, 40.0}) {
      const double gap =
          std::fabs(2.0 * lam * gderiv::neg_half_series_closed(lam) - 1.0);
      if (!(gap < prev_gap)) monotone = false;
      prev_gap = gap;
    }
    *note = "identity gap " + fmt(worst);
    return worst <= 1e-10 && monotone;
  });

  gate.run("continuation to -1/2 matches the recursion oracle", [](std::string* note) {
    double worst = 0.0, worst_path = 0.0;
    for (int m = 0; m <= 8; ++m) {
      const LogScaled a =
          gderiv::continue_left({double(m) + 1.0, 0.0}, {-0.5, 0.0}, {1.0, 0.0})
              .value;
      const LogScaled b =
          gderiv::continue_left({double(m) + 1.0, 0.0}, {-0.5, 0.0}, {2.0, 0.0})
              .value;
      worst = std::max(worst, rel_gap(a, gderiv::deriv_left_of_zero(m, {-0.5, 0.0})));
      worst_path = std::max(worst_path, rel_gap(a, b));
    }
    *note = "oracle gap " + fmt(worst) + ", path gap " + fmt(worst_path);
    return worst <= 1e-7 && worst_path <= 1e-8;
  });

  gate.run("zero anchors, residuals, and the negative tail", [](std::string* note) {
    const gderiv::ZeroRecord z0 = gderiv::find_zeta(0);
    const gderiv::ZeroRecord e0 = gderiv::find_eta(0);
    const bool anchors = std::fabs(z0.location - 1.4616321) <= 1e-6 &&
                         std::fabs(e0.location + 0.5040830) <= 1e-6;
    double worst_resid = 0.0;
    for (const gderiv::ZeroRecord& r :
         gderiv::zero_table(gderiv::ZeroKind::kZeta, 6))
      worst_resid = std::max(worst_resid, r.residual);
    for (const gderiv::ZeroRecord& r :
         gderiv::zero_table(gderiv::ZeroKind::kEta, 6))
      worst_resid = std::max(worst_resid, r.residual);
    // The positive zeros march right without bound, so at a fixed station
    // past zeta_5 every high odd derivative has settled to negative sign.
    const double M = gderiv::find_zeta(5).location + 1.0;
    int k0 = -1;
    for (int k = 0; k <= 12; ++k) {
      if (gderiv::deriv_sign(2 * k + 1, M) == -1) {
        if (k0 < 0) k0 = k;
      } else {
        k0 = -1;
      }
    }
    *note = "worst residual " + fmt(worst_resid);
    return anchors && worst_resid <= 1e-9 && k0 >= 0;
  });

  gate.run("the lower piece outgrows the tail piece", [](std::string* note) {
    double prev = -std::numeric_limits<double>::infinity();
    bool ok = true;
    for (int m : {10, 15, 20}) {
      const LogScaled g0 =
          gderiv::lower_series({double(m), 0.0}, {1.0, 0.0}, 1e-10);
      const QuadResult g1 =
          gderiv::tail_integral({double(m), 0.0}, {1.0, 0.0}, 1e-10);
      const double gap = g0.logmod - g1.value.logmod;
      if (!(gap > 0.0 && gap > prev)) ok = false;
      prev = gap;
    }
    *note = "logmod gap at m=20: " + fmt(prev);
    return ok;
  });

  gate.run("command line: full verify, round trips, determinism", [](std::string* note) {
    std::string out;
    if (run_cli("verify --suite all 2>/dev/null", &out) != 0) {
      *note = "verify suite failed";
      return false;
    }
    if (run_cli("eval --lambda 1.5+0.5i --z 2 --scaled 2>/dev/null", &out) != 0)
      return false;
    const json j = json::parse(out, nullptr, false);
    if (j.is_discarded() || json::parse(j.dump()) != j) {
      *note = "JSON round trip broke";
      return false;
    }
    std::string a, b;
    if (run_cli("table --m 0:4 --z 1 2>/dev/null", &a) != 0) return false;
    if (run_cli("table --m 0:4 --z 1 2>/dev/null", &b) != 0) return false;
    if (a != b) {
      *note = "table output not reproducible";
      return false;
    }
    if (run_cli("zeros --kind eta --k 0:2 2>/dev/null", &a) != 0) return false;
    if (run_cli("zeros --kind eta --k 0:2 2>/dev/null", &b) != 0) return false;
    if (a != b) {
      *note = "zeros output not reproducible";
      return false;
    }
    return true;
  });

  std::printf("%d/%d criteria passed\n", gate.index - gate.failures, gate.index);
  return gate.failures == 0 ? 0 : 1;
}
