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

#ifndef GDERIV_VERIFY_HPP
#define GDERIV_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace gderiv {

// Named invariant checks over the whole library.  Every check is
// deterministic: fixed grids, fixed seeds, fixed reduction order.

struct CheckResult {
  std::string id;
  bool passed = false;
  // Worst measured value over the check's grid, and the bound it must
  // stay under.  For structural checks metric is 0 (pass) or 1 (fail).
  double metric = 0.0;
  double threshold = 0.0;
  std::string detail;  // worst grid point or first failure
  double seconds = 0.0;
};

struct VerifyOptions {
  bool include_slow = false;  // suite "all" instead of "fast"
  std::string id_prefix;      // run only ids with this prefix
};

// Ids in registry order, honoring the slow flag.
std::vector<std::string> list_checks(bool include_slow);

// Runs the selected checks; on_result (if set) fires after each one.
// Exceptions escaping a check body mark it failed with the message in
// detail rather than aborting the sweep.
std::vector<CheckResult> run_checks(
    const VerifyOptions& opts,
    const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace gderiv

#endif  // GDERIV_VERIFY_HPP
