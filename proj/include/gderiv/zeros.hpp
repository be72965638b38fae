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

#ifndef GDERIV_ZEROS_HPP
#define GDERIV_ZEROS_HPP

#include <vector>

namespace gderiv {

// Zero sequences of the odd Gamma derivatives: for each k >= 0,
// Gamma^(2k+1) has a unique zero on (0, inf) and a unique zero in (-1, 0).
// Both are located by bisection on the circle-oracle sign, the project's
// ground truth, rather than on the interpolant.

enum class ZeroKind { kZeta, kEta };

struct ZeroRecord {
  int k = 0;
  double location = 0.0;
  // Final bisection bracket; a sign change across it was verified.
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  // Newton-step length |Gamma^(2k+1)(location) / Gamma^(2k+2)(location)|:
  // the distance scale from location to the true zero.
  double residual = 0.0;
};

// Zero on (0, inf).  Scans (0, 4] in steps of 0.1, doubling the right
// limit until a sign change appears (the zeros drift right as k grows);
// more than one change in a scan is a data-integrity error, as is
// exhausting the limit 64.  Bisection then narrows to 1e-10.
ZeroRecord find_zeta(int k);

// Zero in (-1, 0), bisected on (-1 + 1e-6, -1e-6); the derivative is
// positive at the left end and negative at the right end because the
// adjacent poles dominate, so the change is guaranteed.
ZeroRecord find_eta(int k);

// Records for k = 0..k_max, ordered by k.  k_max <= 12; the oracle cost
// grows with the derivative order 2k+1.
std::vector<ZeroRecord> zero_table(ZeroKind kind, int k_max);

}  // namespace gderiv

#endif  // GDERIV_ZEROS_HPP
