/* Copyright 2026 The gderiv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the gderiv library: evaluation of the entire interpolant
 * G(lambda, z) of the Gamma-function derivatives, its asymptotic forms,
 * and the derivative zero scanner.
 *
 * All functions that can fail take a gd_ctx and return a gd_status; the
 * message for the most recent failure on that context is available via
 * gd_last_error.  Contexts are not thread-safe; use one per thread.
 */

#ifndef GDERIV_H_
#define GDERIV_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gd_ctx gd_ctx;

typedef enum gd_status {
  GD_OK = 0,
  GD_ERR_DOMAIN = 1,    /* inputs outside the defined region */
  GD_ERR_ACCURACY = 2,  /* tolerance not reached / series stagnated */
  GD_ERR_PATH = 3,      /* continuation path hits a cut or branch point */
  GD_ERR_OVERFLOW = 4,  /* value not representable outside log scale */
  GD_ERR_INTEGRITY = 5, /* internal cross-check failed */
  GD_ERR_INVALID = 6    /* bad handle, null pointer, unknown enum value */
} gd_status;

typedef enum gd_method {
  GD_METHOD_AUTO = 0,
  GD_METHOD_CONTOUR = 1,
  GD_METHOD_SPLIT = 2,
  GD_METHOD_SERIES = 3
} gd_method;

typedef enum gd_zero_kind {
  GD_ZERO_ZETA = 0, /* zeros of odd-order derivatives on (0, inf) */
  GD_ZERO_ETA = 1   /* zeros of odd-order derivatives on (-1, 0) */
} gd_zero_kind;

typedef enum gd_asym_form {
  GD_ASYM_LEMMA1 = 0,    /* Gaussian-corrected leading order */
  GD_ASYM_COROLLARY1 = 1 /* coarse logarithmic form */
} gd_asym_form;

typedef struct gd_complex {
  double re;
  double im;
} gd_complex;

/* value = exp(logmod) * exp(i * phase); logmod == -inf encodes zero.
 * The phase is continuous (not wrapped), so powers stay single-valued. */
typedef struct gd_logscaled {
  double logmod;
  double phase;
} gd_logscaled;

typedef struct gd_eval_result {
  gd_logscaled value;
  double abs_err; /* relative to exp(value.logmod) */
  long n_evals;
  int continued; /* 1 if reached by continuation across Re z <= 0 */
} gd_eval_result;

typedef struct gd_zero_record {
  int k;             /* index: the zero belongs to Gamma^(2k+1) */
  double location;
  double bracket_lo;
  double bracket_hi;
  double residual;   /* Newton-step length at the reported location */
} gd_zero_record;

typedef struct gd_check_result {
  const char* id;     /* valid for the duration of the callback only */
  int passed;
  double metric;
  double threshold;
  const char* detail; /* valid for the duration of the callback only */
  double seconds;
} gd_check_result;

gd_ctx* gd_ctx_new(void);
void gd_ctx_free(gd_ctx* ctx);

/* Message for the most recent failing call on this context; empty string
 * if the last call succeeded.  Owned by the context. */
const char* gd_last_error(const gd_ctx* ctx);

/* "major.minor.patch" of the library. */
const char* gd_version(void);

/* G(lambda, z).  radius applies to the contour method (0 picks the
 * default); rel_tol <= 0 picks the default 1e-10. */
gd_status gd_eval(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                  gd_method method, double radius, double rel_tol,
                  gd_eval_result* out);

/* The two pieces of the split at t = 1: lower has the e^{i pi lambda}
 * prefactor applied, so lower + tail = G. */
gd_status gd_eval_split(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                        double rel_tol, gd_eval_result* lower,
                        gd_eval_result* tail);

/* d/dz G(lambda, z) = G(lambda + 1, z). */
gd_status gd_eval_dz(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                     double rel_tol, gd_eval_result* out);

/* Continuation of G(lambda - 1, .) from the anchor z0 (Re z0 > 0) to z
 * with Re z > -1 along the straight segment. */
gd_status gd_continue_left(gd_ctx* ctx, gd_complex lambda, gd_complex z,
                           gd_complex z0, double rel_tol,
                           gd_eval_result* out);

/* log Gamma(z) in log-scaled form (principal branch, poles rejected). */
gd_status gd_gamma(gd_ctx* ctx, gd_complex z, gd_logscaled* out);

/* Gamma^(m)(z) by the Cauchy-circle oracle; for Re z <= 0 the value is
 * produced by the forward recursion from the right half-plane. */
gd_status gd_gamma_deriv(gd_ctx* ctx, int m, gd_complex z, gd_logscaled* out);

/* omega(lambda) = psi^{-1}(lambda) with psi(t) = t log t on [1, inf). */
gd_status gd_omega(gd_ctx* ctx, double lambda, double* omega_out,
                   double* residual_out);

/* Leading asymptotic form of the tail piece G_1(lambda, z). */
gd_status gd_tail_asym(gd_ctx* ctx, gd_asym_form form, double lambda,
                       gd_complex z, gd_logscaled* out);

gd_status gd_find_zero(gd_ctx* ctx, gd_zero_kind kind, int k,
                       gd_zero_record* out);

/* Runs the verification registry.  include_slow != 0 selects the full
 * suite; id_prefix (may be NULL) filters by check id prefix.  on_result
 * is invoked per check as it completes; n_failed_out receives the number
 * of failing checks.  Returns GD_OK even when checks fail. */
gd_status gd_verify_run(gd_ctx* ctx, int include_slow, const char* id_prefix,
                        void (*on_result)(const gd_check_result*, void*),
                        void* user, int* n_failed_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GDERIV_H_ */
