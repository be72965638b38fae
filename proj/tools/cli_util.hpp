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

// Argument parsing and formatting helpers for the gderiv command line.
// Header-only and free of library dependencies so the pieces are unit
// testable on their own.

#ifndef GDERIV_TOOLS_CLI_UTIL_HPP
#define GDERIV_TOOLS_CLI_UTIL_HPP

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

namespace gdcli {

// Complex literals use the form A+Bi with no spaces: "1", "-2.5", "3i",
// "-i", "1.5+0.3i", "2-4e-3i".  Returns false on anything else.
inline bool parse_complex(const std::string& s, double* re, double* im) {
  *re = 0.0;
  *im = 0.0;
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t') return false;

  // Reads a signed number; a bare sign (or nothing) directly before 'i'
  // means an implicit 1.
  auto read_num = [](const char* from, double* out, const char** next) {
    const char* digits = from;
    double sign = 1.0;
    if (*digits == '+' || *digits == '-') {
      if (*digits == '-') sign = -1.0;
      ++digits;
    }
    if (*digits == 'i' || *digits == 'I') {
      *out = sign;
      *next = digits;
      return true;
    }
    char* end = nullptr;
    const double v = std::strtod(from, &end);
    if (end == from) return false;
    *out = v;
    *next = end;
    return true;
  };

  const char* p = s.c_str();
  const char* next = nullptr;
  double first = 0.0;
  if (!read_num(p, &first, &next)) return false;
  if (*next == '\0') {
    *re = first;
    return true;
  }
  if (*next == 'i' || *next == 'I') {
    *im = first;
    return next[1] == '\0';
  }
  if (*next != '+' && *next != '-') return false;
  double second = 0.0;
  const char* after = nullptr;
  if (!read_num(next, &second, &after)) return false;
  if (*after != 'i' && *after != 'I') return false;
  if (after[1] != '\0') return false;
  *re = first;
  *im = second;
  return true;
}

// Integer ranges use "lo:hi" or a single "k"; both ends inclusive.
inline bool parse_range(const std::string& s, int* lo, int* hi) {
  if (s.empty()) return false;
  char* end = nullptr;
  const long a = std::strtol(s.c_str(), &end, 10);
  if (end == s.c_str()) return false;
  if (*end == '\0') {
    *lo = *hi = static_cast<int>(a);
    return *lo >= 0;
  }
  if (*end != ':') return false;
  const char* rest = end + 1;
  const long b = std::strtol(rest, &end, 10);
  if (end == rest || *end != '\0') return false;
  *lo = static_cast<int>(a);
  *hi = static_cast<int>(b);
  return *lo >= 0 && *hi >= *lo;
}

// Comma-separated list of reals, e.g. "50,100,200".
inline bool parse_double_list(const std::string& s, std::vector<double>* out) {
  out->clear();
  if (s.empty()) return false;
  const char* p = s.c_str();
  while (true) {
    char* end = nullptr;
    const double v = std::strtod(p, &end);
    if (end == p) return false;
    out->push_back(v);
    if (*end == '\0') return true;
    if (*end != ',') return false;
    p = end + 1;
  }
}

// Shortest decimal form that survives a text round trip.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string complex_str(double re, double im) {
  if (im == 0.0) return g17(re);
  std::string s = g17(re);
  if (!(im < 0.0)) s += "+";
  s += g17(im);
  s += "i";
  return s;
}

// |a/b - 1| for two log-scaled values a = e^{la + i pa}, b = e^{lb + i pb},
// computed in the log domain so huge magnitudes cancel first.
inline double rel_deviation(double la, double pa, double lb, double pb) {
  if (std::isinf(lb) && lb < 0.0) return std::isinf(la) && la < 0.0 ? 0.0 : INFINITY;
  const double dm = la - lb;
  const double dp = pa - pb;
  const double re = std::exp(dm) * std::cos(dp) - 1.0;
  const double im = std::exp(dm) * std::sin(dp);
  return std::hypot(re, im);
}

}  // namespace gdcli

#endif  // GDERIV_TOOLS_CLI_UTIL_HPP
