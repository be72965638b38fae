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

// Command-line surface over the C API.  Exit codes: 0 success, 1 failed
// verification, 2 domain/usage error, 3 accuracy/overflow failure.

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "cli_util.hpp"
#include "gderiv.h"
#include "json.hpp"

namespace {

using gdcli::complex_str;
using gdcli::g17;
using json = nlohmann::ordered_json;

struct Ctx {
  gd_ctx* p;
  Ctx() : p(gd_ctx_new()) {}
  ~Ctx() { gd_ctx_free(p); }
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
};

const char* status_name(gd_status s) {
  switch (s) {
    case GD_OK:
      return "ok";
    case GD_ERR_DOMAIN:
      return "domain";
    case GD_ERR_ACCURACY:
      return "accuracy";
    case GD_ERR_PATH:
      return "path";
    case GD_ERR_OVERFLOW:
      return "overflow";
    case GD_ERR_INTEGRITY:
      return "integrity";
    case GD_ERR_INVALID:
      return "invalid";
  }
  return "unknown";
}

int exit_for(gd_status s) {
  switch (s) {
    case GD_OK:
      return 0;
    case GD_ERR_DOMAIN:
    case GD_ERR_PATH:
    case GD_ERR_INVALID:
      return 2;
    default:
      return 3;
  }
}

int fail(gd_status s, const std::string& message) {
  json e;
  e["schema"] = "gderiv.error.v1";
  e["status"] = status_name(s);
  e["message"] = message;
  std::cerr << e.dump() << "\n";
  return exit_for(s);
}

int fail(gd_status s, const Ctx& ctx) { return fail(s, gd_last_error(ctx.p)); }

int usage_fail(const std::string& message) {
  return fail(GD_ERR_INVALID, message);
}

// The cartesian form exists only while exp(logmod) fits a double.
bool to_cartesian(const gd_logscaled& v, double* re, double* im) {
  if (v.logmod > 709.0) return false;
  const double mag = std::exp(v.logmod);
  *re = mag * std::cos(v.phase);
  *im = mag * std::sin(v.phase);
  return true;
}

json value_json(const gd_logscaled& v, bool scaled, bool* ok) {
  json j;
  *ok = true;
  if (scaled) {
    j["logmod"] = v.logmod;
    j["phase"] = v.phase;
    return j;
  }
  double re = 0.0, im = 0.0;
  if (!to_cartesian(v, &re, &im)) {
    *ok = false;
    return j;
  }
  j["re"] = re;
  j["im"] = im;
  return j;
}

json complex_json(double re, double im) {
  json j;
  j["re"] = re;
  j["im"] = im;
  return j;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Fans rows out over a small worker pool (one context each) and keeps the
// output in input order.  fn returns a gd_status; the first failing row
// wins.  threads <= 1 runs inline.
template <typename Fn>
gd_status run_rows(int n, int threads, std::string* first_error,
                   const Fn& fn) {
  std::vector<gd_status> st(static_cast<size_t>(n), GD_OK);
  std::vector<std::string> err(static_cast<size_t>(n));
  if (threads <= 1) {
    Ctx ctx;
    for (int i = 0; i < n; ++i) {
      st[i] = fn(i, ctx.p);
      if (st[i] != GD_OK) {
        *first_error = gd_last_error(ctx.p);
        return st[i];
      }
    }
    return GD_OK;
  }
  std::atomic<int> next{0};
  auto worker = [&] {
    Ctx ctx;
    for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      st[i] = fn(i, ctx.p);
      if (st[i] != GD_OK) err[i] = gd_last_error(ctx.p);
    }
  };
  std::vector<std::thread> pool;
  const int n_workers = std::min(threads, std::min(n, 16));
  pool.reserve(static_cast<size_t>(n_workers));
  for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  for (int i = 0; i < n; ++i)
    if (st[i] != GD_OK) {
      *first_error = err[i];
      return st[i];
    }
  return GD_OK;
}

// ------------------------------------------------------------------- eval

struct EvalArgs {
  std::string lambda, z;
  std::string method = "auto";
  double r = 0.0;
  double tol = 0.0;
  bool scaled = false;
  bool as_json = false;
  bool as_csv = false;
};

bool method_from(const std::string& s, gd_method* m) {
  if (s == "auto") *m = GD_METHOD_AUTO;
  else if (s == "contour") *m = GD_METHOD_CONTOUR;
  else if (s == "split") *m = GD_METHOD_SPLIT;
  else if (s == "series") *m = GD_METHOD_SERIES;
  else return false;
  return true;
}

int run_eval(const EvalArgs& a) {
  double lre, lim, zre, zim;
  if (!gdcli::parse_complex(a.lambda, &lre, &lim))
    return usage_fail("bad --lambda, expected A+Bi: " + a.lambda);
  if (!gdcli::parse_complex(a.z, &zre, &zim))
    return usage_fail("bad --z, expected A+Bi: " + a.z);
  gd_method method;
  if (!method_from(a.method, &method))
    return usage_fail("bad --method: " + a.method);

  Ctx ctx;
  gd_eval_result r;
  const auto t0 = std::chrono::steady_clock::now();
  const gd_status s =
      gd_eval(ctx.p, {lre, lim}, {zre, zim}, method, a.r, a.tol, &r);
  const double wall = ms_since(t0);
  if (s != GD_OK) return fail(s, ctx);
  const double tol_eff = a.tol > 0.0 ? a.tol : 1e-10;

  if (a.as_csv) {
    std::cout << "# gderiv.eval.v1\n";
    if (a.scaled) {
      std::cout << "lambda,z,method,tol,logmod,phase,err_estimate,n_evals,"
                   "continued\n";
      std::cout << complex_str(lre, lim) << "," << complex_str(zre, zim) << ","
                << a.method << "," << g17(tol_eff) << "," << g17(r.value.logmod)
                << "," << g17(r.value.phase) << "," << g17(r.abs_err) << ","
                << r.n_evals << "," << r.continued << "\n";
      return 0;
    }
    double re = 0.0, im = 0.0;
    if (!to_cartesian(r.value, &re, &im))
      return fail(GD_ERR_OVERFLOW, "value exceeds double range; use --scaled");
    std::cout << "lambda,z,method,tol,value_re,value_im,err_estimate,n_evals,"
                 "continued\n";
    std::cout << complex_str(lre, lim) << "," << complex_str(zre, zim) << ","
              << a.method << "," << g17(tol_eff) << "," << g17(re) << ","
              << g17(im) << "," << g17(r.abs_err) << "," << r.n_evals << ","
              << r.continued << "\n";
    return 0;
  }

  bool ok = true;
  json v = value_json(r.value, a.scaled, &ok);
  if (!ok)
    return fail(GD_ERR_OVERFLOW, "value exceeds double range; use --scaled");
  json j;
  j["schema"] = "gderiv.eval.v1";
  j["lambda"] = complex_json(lre, lim);
  j["z"] = complex_json(zre, zim);
  j["method"] = a.method;
  j["tol"] = tol_eff;
  j["value"] = v;
  j["err_estimate"] = r.abs_err;
  j["n_evals"] = r.n_evals;
  j["continued"] = r.continued != 0;
  j["wall_time_ms"] = wall;
  std::cout << j.dump() << "\n";
  return 0;
}

// ------------------------------------------------------------------ table

struct TableArgs {
  std::string m = "0:20";
  std::string z;
  double tol = 0.0;
  bool scaled = false;
  bool as_json = false;
  bool as_csv = false;
  int threads = 1;
};

int run_table(const TableArgs& a) {
  int m_lo, m_hi;
  if (!gdcli::parse_range(a.m, &m_lo, &m_hi))
    return usage_fail("bad --m, expected lo:hi with 0 <= lo <= hi: " + a.m);
  double zre, zim;
  if (!gdcli::parse_complex(a.z, &zre, &zim))
    return usage_fail("bad --z, expected A+Bi: " + a.z);

  struct Row {
    gd_eval_result val;
    gd_logscaled oracle;
    double wall = 0.0;
  };
  const int n = m_hi - m_lo + 1;
  std::vector<Row> rows(static_cast<size_t>(n));
  std::string err;
  const gd_status s = run_rows(n, a.threads, &err, [&](int i, gd_ctx* c) {
    const auto t0 = std::chrono::steady_clock::now();
    const int m = m_lo + i;
    gd_status st = gd_eval(c, {static_cast<double>(m), 0.0}, {zre, zim},
                           GD_METHOD_AUTO, 0.0, a.tol, &rows[i].val);
    if (st != GD_OK) return st;
    st = gd_gamma_deriv(c, m, {zre, zim}, &rows[i].oracle);
    rows[i].wall = ms_since(t0);
    return st;
  });
  if (s != GD_OK) return fail(s, err);

  const bool csv = !a.as_json;
  if (csv) {
    std::cout << "# gderiv.table.v1\n";
    std::cout << (a.scaled
                      ? "m,z,value_logmod,value_phase,oracle_logmod,"
                        "oracle_phase,rel_deviation\n"
                      : "m,z,value_re,value_im,oracle_re,oracle_im,"
                        "rel_deviation\n");
  }
  for (int i = 0; i < n; ++i) {
    const Row& r = rows[static_cast<size_t>(i)];
    const double dev = gdcli::rel_deviation(r.val.value.logmod,
                                            r.val.value.phase,
                                            r.oracle.logmod, r.oracle.phase);
    if (csv) {
      std::cout << (m_lo + i) << "," << complex_str(zre, zim) << ",";
      if (a.scaled) {
        std::cout << g17(r.val.value.logmod) << "," << g17(r.val.value.phase)
                  << "," << g17(r.oracle.logmod) << "," << g17(r.oracle.phase);
      } else {
        double vre, vim, ore_, oim;
        if (!to_cartesian(r.val.value, &vre, &vim) ||
            !to_cartesian(r.oracle, &ore_, &oim))
          return fail(GD_ERR_OVERFLOW,
                      "value exceeds double range; use --scaled");
        std::cout << g17(vre) << "," << g17(vim) << "," << g17(ore_) << ","
                  << g17(oim);
      }
      std::cout << "," << g17(dev) << "\n";
      continue;
    }
    bool ok1 = true, ok2 = true;
    json jv = value_json(r.val.value, a.scaled, &ok1);
    json jo = value_json(r.oracle, a.scaled, &ok2);
    if (!ok1 || !ok2)
      return fail(GD_ERR_OVERFLOW, "value exceeds double range; use --scaled");
    json j;
    j["schema"] = "gderiv.table.v1";
    j["m"] = m_lo + i;
    j["z"] = complex_json(zre, zim);
    j["value"] = jv;
    j["oracle"] = jo;
    j["rel_deviation"] = dev;
    j["wall_time_ms"] = r.wall;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- asym

struct AsymArgs {
  std::string grid;
  std::string z;
  std::string form = "lemma1";
  double tol = 0.0;
  bool as_json = false;
  bool as_csv = false;
  int threads = 1;
};

int run_asym(const AsymArgs& a) {
  std::vector<double> lams;
  if (!gdcli::parse_double_list(a.grid, &lams))
    return usage_fail("bad --lambda-grid, expected comma list: " + a.grid);
  double zre, zim;
  if (!gdcli::parse_complex(a.z, &zre, &zim))
    return usage_fail("bad --z, expected A+Bi: " + a.z);
  if (a.form != "lemma1" && a.form != "corollary1")
    return usage_fail("bad --form, expected lemma1|corollary1: " + a.form);
  const bool lemma = a.form == "lemma1";

  struct Row {
    gd_logscaled g1, asym;
    double zfactor = 0.0;
    double wall = 0.0;
  };
  const int n = static_cast<int>(lams.size());
  std::vector<Row> rows(static_cast<size_t>(n));
  std::string err;
  const gd_status s = run_rows(n, a.threads, &err, [&](int i, gd_ctx* c) {
    const auto t0 = std::chrono::steady_clock::now();
    const double lam = lams[static_cast<size_t>(i)];
    gd_eval_result lower, tail;
    gd_status st = gd_eval_split(c, {lam, 0.0}, {zre, zim},
                                 a.tol > 0.0 ? a.tol : 1e-10, &lower, &tail);
    if (st != GD_OK) return st;
    rows[i].g1 = tail.value;
    st = gd_tail_asym(c, lemma ? GD_ASYM_LEMMA1 : GD_ASYM_COROLLARY1, lam,
                      {zre, zim}, &rows[i].asym);
    if (st != GD_OK) return st;
    if (lemma) {
      double w, resid;
      st = gd_omega(c, lam, &w, &resid);
      if (st != GD_OK) return st;
      rows[i].zfactor = zre * std::log(w);
    } else {
      rows[i].zfactor = (zre - 0.5) * std::log(lam / std::log(lam));
    }
    rows[i].wall = ms_since(t0);
    return GD_OK;
  });
  if (s != GD_OK) return fail(s, err);

  const bool csv = !a.as_json;
  if (csv) {
    std::cout << "# gderiv.asym.v1\n";
    std::cout << "lambda,form,g1_logmod,asym_logmod,ratio_metric,"
                 "zfactor_logmod\n";
  }
  for (int i = 0; i < n; ++i) {
    const Row& r = rows[static_cast<size_t>(i)];
    // lemma1 compares values: |ratio - 1|.  corollary1 is only a
    // logarithmic-scale statement, so the metric is the logmod ratio.
    const double metric =
        lemma ? gdcli::rel_deviation(r.g1.logmod, r.g1.phase, r.asym.logmod,
                                     r.asym.phase)
              : r.g1.logmod / r.asym.logmod;
    if (csv) {
      std::cout << g17(lams[static_cast<size_t>(i)]) << "," << a.form << ","
                << g17(r.g1.logmod) << "," << g17(r.asym.logmod) << ","
                << g17(metric) << "," << g17(r.zfactor) << "\n";
      continue;
    }
    json j;
    j["schema"] = "gderiv.asym.v1";
    j["lambda"] = lams[static_cast<size_t>(i)];
    j["form"] = a.form;
    j["g1_logmod"] = r.g1.logmod;
    j["asym_logmod"] = r.asym.logmod;
    j["ratio_metric"] = metric;
    j["zfactor_logmod"] = r.zfactor;
    j["wall_time_ms"] = r.wall;
    std::cout << j.dump() << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ omega

struct OmegaArgs {
  double lambda = 0.0;
  bool as_json = false;
  bool as_csv = false;
};

int run_omega(const OmegaArgs& a) {
  Ctx ctx;
  double w = 0.0, resid = 0.0;
  const auto t0 = std::chrono::steady_clock::now();
  const gd_status s = gd_omega(ctx.p, a.lambda, &w, &resid);
  const double wall = ms_since(t0);
  if (s != GD_OK) return fail(s, ctx);
  if (a.as_csv) {
    std::cout << "# gderiv.omega.v1\n";
    std::cout << "lambda,omega,residual\n";
    std::cout << g17(a.lambda) << "," << g17(w) << "," << g17(resid) << "\n";
    return 0;
  }
  json j;
  j["schema"] = "gderiv.omega.v1";
  j["lambda"] = a.lambda;
  j["omega"] = w;
  j["residual"] = resid;
  j["wall_time_ms"] = wall;
  std::cout << j.dump() << "\n";
  return 0;
}

// ------------------------------------------------------------------ zeros

struct ZerosArgs {
  std::string kind = "zeta";
  std::string k = "0:6";
  bool as_json = false;
  bool as_csv = false;
  int threads = 1;
};

int run_zeros(const ZerosArgs& a) {
  if (a.kind != "zeta" && a.kind != "eta")
    return usage_fail("bad --kind, expected zeta|eta: " + a.kind);
  int k_lo, k_hi;
  if (!gdcli::parse_range(a.k, &k_lo, &k_hi))
    return usage_fail("bad --k, expected lo:hi with 0 <= lo <= hi: " + a.k);
  const gd_zero_kind kind = a.kind == "zeta" ? GD_ZERO_ZETA : GD_ZERO_ETA;

  const int n = k_hi - k_lo + 1;
  std::vector<gd_zero_record> rec(static_cast<size_t>(n));
  std::vector<double> wall(static_cast<size_t>(n), 0.0);
  std::string err;
  const gd_status s = run_rows(n, a.threads, &err, [&](int i, gd_ctx* c) {
    const auto t0 = std::chrono::steady_clock::now();
    const gd_status st = gd_find_zero(c, kind, k_lo + i, &rec[i]);
    wall[static_cast<size_t>(i)] = ms_since(t0);
    return st;
  });
  if (s != GD_OK) return fail(s, err);

  const bool csv = !a.as_json;
  if (csv) {
    std::cout << "# gderiv.zeros.v1\n";
    std::cout << "kind,k,location,bracket_lo,bracket_hi,residual,delta_prev,"
                 "dist_to_limit\n";
  }
  for (int i = 0; i < n; ++i) {
    const gd_zero_record& r = rec[static_cast<size_t>(i)];
    const bool have_prev = i > 0;
    const double delta_prev =
        have_prev ? r.location - rec[static_cast<size_t>(i - 1)].location
                  : 0.0;
    // The negative-axis zeros are conjectured to approach -1/2; report the
    // distance as data.  No analogous limit exists on the positive axis.
    const bool have_dist = kind == GD_ZERO_ETA;
    const double dist = std::fabs(r.location + 0.5);
    if (csv) {
      std::cout << a.kind << "," << r.k << "," << g17(r.location) << ","
                << g17(r.bracket_lo) << "," << g17(r.bracket_hi) << ","
                << g17(r.residual) << ","
                << (have_prev ? g17(delta_prev) : std::string()) << ","
                << (have_dist ? g17(dist) : std::string()) << "\n";
      continue;
    }
    json j;
    j["schema"] = "gderiv.zeros.v1";
    j["kind"] = a.kind;
    j["k"] = r.k;
    j["location"] = r.location;
    j["bracket_lo"] = r.bracket_lo;
    j["bracket_hi"] = r.bracket_hi;
    j["residual"] = r.residual;
    if (have_prev)
      j["delta_prev"] = delta_prev;
    else
      j["delta_prev"] = nullptr;
    if (have_dist)
      j["dist_to_limit"] = dist;
    else
      j["dist_to_limit"] = nullptr;
    j["wall_time_ms"] = wall[static_cast<size_t>(i)];
    std::cout << j.dump() << "\n";
  }
  return 0;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::string prefix;
  bool as_json = false;
};

struct VerifyPrinter {
  bool as_json = false;
  int n_run = 0;
  int n_failed = 0;
  std::vector<std::string> failed_ids;
};

void print_check(const gd_check_result* r, void* user) {
  VerifyPrinter* p = static_cast<VerifyPrinter*>(user);
  ++p->n_run;
  if (!r->passed) {
    ++p->n_failed;
    p->failed_ids.emplace_back(r->id);
  }
  if (p->as_json) {
    json j;
    j["schema"] = "gderiv.verify.v1";
    j["id"] = r->id;
    j["passed"] = r->passed != 0;
    j["metric"] = std::isnan(r->metric) ? json() : json(r->metric);
    j["threshold"] = r->threshold;
    j["detail"] = r->detail;
    j["seconds"] = r->seconds;
    std::cout << j.dump() << "\n";
    return;
  }
  std::printf("%s  %-28s  metric=%.3g threshold=%.3g  (%.2fs)%s%s\n",
              r->passed ? "PASS" : "FAIL", r->id, r->metric, r->threshold,
              r->seconds, r->detail[0] != '\0' ? "  " : "", r->detail);
  std::fflush(stdout);
}

int run_verify(const VerifyArgs& a) {
  if (a.suite != "all" && a.suite != "fast")
    return usage_fail("bad --suite, expected all|fast: " + a.suite);
  Ctx ctx;
  VerifyPrinter printer;
  printer.as_json = a.as_json;
  int n_failed = 0;
  const gd_status s = gd_verify_run(ctx.p, a.suite == "all" ? 1 : 0,
                                    a.prefix.empty() ? nullptr
                                                     : a.prefix.c_str(),
                                    print_check, &printer, &n_failed);
  if (s != GD_OK) return fail(s, ctx);
  if (a.as_json) {
    json j;
    j["schema"] = "gderiv.verify-summary.v1";
    j["checks"] = printer.n_run;
    j["failed"] = n_failed;
    j["failed_ids"] = printer.failed_ids;
    std::cout << j.dump() << "\n";
  } else {
    std::printf("summary: %d/%d passed\n", printer.n_run - n_failed,
                printer.n_run);
    for (const std::string& id : printer.failed_ids)
      std::printf("failed: %s\n", id.c_str());
  }
  return n_failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gderiv: the Gamma-derivative interpolant G(lambda, z)"};
  app.require_subcommand(1);

  EvalArgs ea;
  CLI::App* eval = app.add_subcommand("eval", "evaluate G(lambda, z)");
  eval->add_option("--lambda", ea.lambda, "order, A+Bi")->required();
  eval->add_option("--z", ea.z, "argument, A+Bi")->required();
  eval->add_option("--method", ea.method, "auto|contour|split|series");
  eval->add_option("--r", ea.r, "contour radius in (0,1)");
  eval->add_option("--tol", ea.tol, "relative tolerance");
  eval->add_flag("--scaled", ea.scaled, "emit (logmod, phase)");
  CLI::Option* ej = eval->add_flag("--json", ea.as_json, "JSON output");
  eval->add_flag("--csv", ea.as_csv, "CSV output")->excludes(ej);

  TableArgs ta;
  CLI::App* table =
      app.add_subcommand("table", "G(m, z) vs the derivative oracle");
  table->add_option("--m", ta.m, "order range lo:hi")->required();
  table->add_option("--z", ta.z, "argument, A+Bi")->required();
  table->add_option("--tol", ta.tol, "relative tolerance");
  table->add_flag("--scaled", ta.scaled, "emit (logmod, phase)");
  CLI::Option* tj = table->add_flag("--json", ta.as_json, "JSON rows");
  table->add_flag("--csv", ta.as_csv, "CSV output (default)")->excludes(tj);
  table->add_option("--threads", ta.threads, "worker threads");

  AsymArgs aa;
  CLI::App* asym =
      app.add_subcommand("asym", "tail piece vs its asymptotic form");
  asym->add_option("--lambda-grid", aa.grid, "comma list of lambda values")
      ->required();
  asym->add_option("--z", aa.z, "argument, A+Bi")->required();
  asym->add_option("--form", aa.form, "lemma1|corollary1");
  asym->add_option("--tol", aa.tol, "relative tolerance");
  CLI::Option* aj = asym->add_flag("--json", aa.as_json, "JSON rows");
  asym->add_flag("--csv", aa.as_csv, "CSV output (default)")->excludes(aj);
  asym->add_option("--threads", aa.threads, "worker threads");

  OmegaArgs oa;
  CLI::App* om = app.add_subcommand("omega", "inverse of t log t");
  om->add_option("--lambda", oa.lambda, "target value")->required();
  CLI::Option* oj = om->add_flag("--json", oa.as_json, "JSON output");
  om->add_flag("--csv", oa.as_csv, "CSV output")->excludes(oj);

  ZerosArgs za;
  CLI::App* zeros =
      app.add_subcommand("zeros", "zeros of the odd-order derivatives");
  zeros->add_option("--kind", za.kind, "zeta|eta")->required();
  zeros->add_option("--k", za.k, "index range lo:hi")->required();
  CLI::Option* zj = zeros->add_flag("--json", za.as_json, "JSON rows");
  zeros->add_flag("--csv", za.as_csv, "CSV output (default)")->excludes(zj);
  zeros->add_option("--threads", za.threads, "worker threads");

  VerifyArgs va;
  CLI::App* verify =
      app.add_subcommand("verify", "run the invariant suite");
  verify->add_option("--suite", va.suite, "all|fast");
  verify->add_option("--prefix", va.prefix, "only checks with this id prefix");
  verify->add_flag("--json", va.as_json, "JSON rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return 2;
  }

  if (*eval) return run_eval(ea);
  if (*table) return run_table(ta);
  if (*asym) return run_asym(aa);
  if (*om) return run_omega(oa);
  if (*zeros) return run_zeros(za);
  if (*verify) return run_verify(va);
  return 2;
}
