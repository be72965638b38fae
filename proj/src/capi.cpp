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

#include "gderiv.h"

#include <algorithm>
#include <complex>
#include <new>
#include <string>

#include "gderiv/asymptotics.hpp"
#include "gderiv/complex_log.hpp"
#include "gderiv/errors.hpp"
#include "gderiv/g_eval.hpp"
#include "gderiv/gamma.hpp"
#include "gderiv/verify.hpp"
#include "gderiv/zeros.hpp"

struct gd_ctx {
  std::string last_error;
};

namespace {

using gderiv::Complex;
using gderiv::LogScaled;

Complex to_cpp(gd_complex c) { return Complex(c.re, c.im); }

gd_logscaled to_c(const LogScaled& v) { return {v.logmod, v.phase}; }

gd_eval_result to_c(const gderiv::EvalResult& r) {
  gd_eval_result out;
  out.value = to_c(r.value);
  out.abs_err = r.abs_err;
  out.n_evals = r.n_evals;
  out.continued = r.continued ? 1 : 0;
  return out;
}

// Exception-to-status bridge shared by every entry point.  Order matters:
// PathError and SingularPointError are DomainErrors.
template <typename Fn>
gd_status guarded(gd_ctx* ctx, Fn&& fn) {
  if (ctx == nullptr) return GD_ERR_INVALID;
  ctx->last_error.clear();
  try {
    fn();
    return GD_OK;
  } catch (const gderiv::PathError& e) {
    ctx->last_error = e.what();
    return GD_ERR_PATH;
  } catch (const gderiv::DomainError& e) {
    ctx->last_error = e.what();
    return GD_ERR_DOMAIN;
  } catch (const gderiv::OverflowError& e) {
    ctx->last_error = e.what();
    return GD_ERR_OVERFLOW;
  } catch (const gderiv::AccuracyError& e) {
    ctx->last_error = e.what();
    return GD_ERR_ACCURACY;
  } catch (const gderiv::EvaluationError& e) {
    ctx->last_error = e.what();
    return GD_ERR_ACCURACY;
  } catch (const gderiv::IntegrityError& e) {
    ctx->last_error = e.what();
    return GD_ERR_INTEGRITY;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return GD_ERR_INVALID;
  }
}

gderiv::Method to_cpp(gd_method m, bool* ok) {
  *ok = true;
  switch (m) {
    case GD_METHOD_AUTO:
      return gderiv::Method::kAuto;
    case GD_METHOD_CONTOUR:
      return gderiv::Method::kContour;
    case GD_METHOD_SPLIT:
      return gderiv::Method::kSplit;
    case GD_METHOD_SERIES:
      return gderiv::Method::kSeriesPlusTail;
  }
  *ok = false;
  return gderiv::Method::kAuto;
}

}  // namespace

extern "C" {

gd_ctx* gd_ctx_new(void) { return new (std::nothrow) gd_ctx; }

void gd_ctx_free(gd_ctx* ctx) { delete ctx; }

const char* gd_last_error(const gd_ctx* ctx) {
  return ctx == nullptr ? "null context" : ctx->last_error.c_str();
}

const char* gd_version(void) { return "1.0.0"; }

gd_status gd_eval(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                  gd_method method, double radius, double rel_tol,
                  gd_eval_result* out) {
  if (out == nullptr) return GD_ERR_INVALID;
  bool method_ok = false;
  gderiv::EvalOptions opts;
  opts.method = to_cpp(method, &method_ok);
  if (!method_ok) {
    if (ctx != nullptr) ctx->last_error = "unknown method value";
    return GD_ERR_INVALID;
  }
  if (radius > 0.0) opts.contour_radius = radius;
  if (rel_tol > 0.0) opts.rel_tol = rel_tol;
  return guarded(ctx, [&] {
    *out = to_c(gderiv::eval(to_cpp(lambda), to_cpp(z), opts));
  });
}

gd_status gd_eval_split(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                        double rel_tol, gd_eval_result* lower,
                        gd_eval_result* tail) {
  if (lower == nullptr || tail == nullptr) return GD_ERR_INVALID;
  const double tol = rel_tol > 0.0 ? rel_tol : 1e-10;
  return guarded(ctx, [&] {
    const gderiv::SplitResult s =
        gderiv::eval_split(to_cpp(lambda), to_cpp(z), tol);
    *lower = {to_c(s.lower.value), s.lower.abs_err, s.lower.n_evals, 0};
    *tail = {to_c(s.tail.value), s.tail.abs_err, s.tail.n_evals, 0};
  });
}

gd_status gd_eval_dz(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                     double rel_tol, gd_eval_result* out) {
  if (out == nullptr) return GD_ERR_INVALID;
  const double tol = rel_tol > 0.0 ? rel_tol : 1e-10;
  return guarded(ctx, [&] {
    *out = to_c(gderiv::dz(to_cpp(lambda), to_cpp(z), tol));
  });
}

gd_status gd_continue_left(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                           gd_complex z0, double rel_tol,
                           gd_eval_result* out) {
  if (out == nullptr) return GD_ERR_INVALID;
  const double tol = rel_tol > 0.0 ? rel_tol : 1e-12;
  return guarded(ctx, [&] {
    *out = to_c(
        gderiv::continue_left(to_cpp(lambda), to_cpp(z), to_cpp(z0), tol));
  });
}

gd_status gd_gamma(gd_ctx* ctx, gd_complex z, gd_logscaled* out) {
  if (out == nullptr) return GD_ERR_INVALID;
  return guarded(ctx, [&] { *out = to_c(gderiv::gamma(to_cpp(z))); });
}

gd_status gd_gamma_deriv(gd_ctx* ctx, int m, gd_complex z, gd_logscaled* out) {
  if (out == nullptr) return GD_ERR_INVALID;
  return guarded(ctx, [&] {
    const Complex zz = to_cpp(z);
    if (zz.real() > 0.0) {
      double dist = std::abs(zz);
      for (int k = 1; k <= 4; ++k)
        dist = std::min(dist, std::abs(zz + Complex(k, 0.0)));
      *out = to_c(gderiv::deriv_oracle(m, zz, std::min(1.5, 0.75 * dist)));
    } else {
      *out = to_c(gderiv::deriv_left_of_zero(m, zz));
    }
  });
}

gd_status gd_omega(gd_ctx* ctx, double lambda, double* omega_out,
                   double* residual_out) {
  if (omega_out == nullptr) return GD_ERR_INVALID;
  return guarded(ctx, [&] {
    const gderiv::OmegaSolve s = gderiv::omega(lambda);
    *omega_out = s.omega;
    if (residual_out != nullptr) *residual_out = s.residual;
  });
}

gd_status gd_tail_asym(gd_ctx* ctx, gd_asym_form form, double lambda,
                       gd_complex z, gd_logscaled* out) {
  if (out == nullptr) return GD_ERR_INVALID;
  if (form != GD_ASYM_LEMMA1 && form != GD_ASYM_COROLLARY1) {
    if (ctx != nullptr) ctx->last_error = "unknown asymptotic form";
    return GD_ERR_INVALID;
  }
  return guarded(ctx, [&] {
    const gderiv::AsymptoticEstimate est =
        form == GD_ASYM_LEMMA1
            ? gderiv::tail_leading_order(lambda, to_cpp(z))
            : gderiv::tail_leading_order_coarse(lambda, to_cpp(z));
    *out = to_c(est.leading);
  });
}

gd_status gd_find_zero(gd_ctx* ctx, gd_zero_kind kind, int k,
                       gd_zero_record* out) {
  if (out == nullptr) return GD_ERR_INVALID;
  if (kind != GD_ZERO_ZETA && kind != GD_ZERO_ETA) {
    if (ctx != nullptr) ctx->last_error = "unknown zero kind";
    return GD_ERR_INVALID;
  }
  return guarded(ctx, [&] {
    const gderiv::ZeroRecord r =
        kind == GD_ZERO_ZETA ? gderiv::find_zeta(k) : gderiv::find_eta(k);
    out->k = r.k;
    out->location = r.location;
    out->bracket_lo = r.bracket_lo;
    out->bracket_hi = r.bracket_hi;
    out->residual = r.residual;
  });
}

gd_status gd_verify_run(gd_ctx* ctx, int include_slow, const char* id_prefix,
                        void (*on_result)(const gd_check_result*, void*),
                        void* user, int* n_failed_out) {
  return guarded(ctx, [&] {
    gderiv::VerifyOptions opts;
    opts.include_slow = include_slow != 0;
    if (id_prefix != nullptr) opts.id_prefix = id_prefix;
    int failed = 0;
    gderiv::run_checks(opts, [&](const gderiv::CheckResult& r) {
      if (!r.passed) ++failed;
      if (on_result != nullptr) {
        gd_check_result c;
        c.id = r.id.c_str();
        c.passed = r.passed ? 1 : 0;
        c.metric = r.metric;
        c.threshold = r.threshold;
        c.detail = r.detail.c_str();
        c.seconds = r.seconds;
        on_result(&c, user);
      }
    });
    if (n_failed_out != nullptr) *n_failed_out = failed;
  });
}

}  // extern "C"
