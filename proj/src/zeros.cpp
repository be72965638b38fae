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

#include "gderiv/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "gderiv/complex_log.hpp"
#include "gderiv/errors.hpp"
#include "gderiv/gamma.hpp"

namespace gderiv {

namespace {

constexpr double kBisectWidth = 1e-10;

struct Bracket {
  double lo, hi;
  int sign_lo, sign_hi;
};

// Narrows a verified sign-change bracket to kBisectWidth.
Bracket bisect(Bracket b, const std::function<int(double)>& sign_at) {
  while (b.hi - b.lo > kBisectWidth) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (mid <= b.lo || mid >= b.hi) break;  // double resolution reached
    if (sign_at(mid) == b.sign_lo)
      b.lo = mid;
    else
      b.hi = mid;
  }
  return b;
}

}  // namespace

ZeroRecord find_zeta(int k) {
  if (k < 0) throw DomainError("find_zeta: requires k >= 0");
  const int m = 2 * k + 1;
  auto sign_at = [m](double x) { return deriv_sign(m, x); };

  // Scan on a 0.1 grid; the zero is unique, so a second change means the
  // underlying sign data is corrupt.
  const double step = 0.1;
  double limit = 4.0;
  Bracket br{0.0, 0.0, 0, 0};
  for (;;) {
    int changes = 0;
    int prev = 0;
    const int n = static_cast<int>(std::floor(limit / step + 0.5));
    for (int i = 1; i <= n; ++i) {
      const double x = step * i;
      const int s = sign_at(x);
      if (prev != 0 && s != prev) {
        ++changes;
        br = Bracket{step * (i - 1), x, prev, s};
      }
      prev = s;
    }
    if (changes > 1) {
      std::ostringstream os;
      os << "find_zeta: " << changes << " sign changes of order-" << m
         << " derivative on (0, " << limit << "]; expected a unique zero";
      throw IntegrityError(os.str());
    }
    if (changes == 1) break;
    if (limit >= 64.0)
      throw IntegrityError("find_zeta: no sign change found on (0, 64]");
    limit *= 2.0;
  }

  br = bisect(br, sign_at);
  ZeroRecord rec;
  rec.k = k;
  rec.location = 0.5 * (br.lo + br.hi);
  rec.bracket_lo = br.lo;
  rec.bracket_hi = br.hi;
  const double radius = std::min(2.0, 0.75 * rec.location);
  const auto d = deriv_oracle_all(m + 1, Complex(rec.location, 0.0), radius);
  rec.residual = d[m].is_zero()
                     ? 0.0
                     : std::exp(d[m].logmod - d[m + 1].logmod);
  return rec;
}

ZeroRecord find_eta(int k) {
  if (k < 0) throw DomainError("find_eta: requires k >= 0");
  const int m = 2 * k + 1;
  auto sign_at = [m](double x) {
    const LogScaled v = deriv_left_of_zero(m, Complex(x, 0.0));
    if (v.is_zero()) return 0;
    return std::cos(v.phase) >= 0.0 ? 1 : -1;
  };

  constexpr double kDelta = 1e-6;
  Bracket br{-1.0 + kDelta, -kDelta, sign_at(-1.0 + kDelta),
             sign_at(-kDelta)};
  if (br.sign_lo == br.sign_hi || br.sign_lo == 0 || br.sign_hi == 0) {
    std::ostringstream os;
    os << "find_eta: order-" << m
       << " derivative shows no sign change across (-1, 0)";
    throw IntegrityError(os.str());
  }

  br = bisect(br, sign_at);
  ZeroRecord rec;
  rec.k = k;
  rec.location = 0.5 * (br.lo + br.hi);
  rec.bracket_lo = br.lo;
  rec.bracket_hi = br.hi;
  const LogScaled fm = deriv_left_of_zero(m, Complex(rec.location, 0.0));
  const LogScaled fm1 = deriv_left_of_zero(m + 1, Complex(rec.location, 0.0));
  rec.residual = fm.is_zero() ? 0.0 : std::exp(fm.logmod - fm1.logmod);
  return rec;
}

std::vector<ZeroRecord> zero_table(ZeroKind kind, int k_max) {
  if (k_max < 0) throw DomainError("zero_table: requires k_max >= 0");
  if (k_max > 12)
    throw DomainError(
        "zero_table: k_max capped at 12; the oracle cost grows with the "
        "derivative order");
  std::vector<ZeroRecord> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    out.push_back(kind == ZeroKind::kZeta ? find_zeta(k) : find_eta(k));
  return out;
}

}  // namespace gderiv
