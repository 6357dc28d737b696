// Copyright 2026 The epr Authors.
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

#ifndef EPR_BISECT_HPP
#define EPR_BISECT_HPP

#include <algorithm>
#include <cmath>

#include "epr/errors.hpp"

namespace epr {

struct BisectionParams {
  double value_tolerance = 1e-12;
  double width_tolerance = 1e-14;
  int max_iterations = 200;
};

/// Solves f(w) = target for a function monotone on [lo, hi]. Stops when
/// |f(w) - target| < value_tolerance or the bracket is narrower than
/// width_tolerance. The target must be bracketed by f(lo) and f(hi).
template <typename F>
double bisection_root(F&& f, double target, double lo, double hi,
                      BisectionParams params = {}) {
  if (!(lo < hi)) {
    throw DomainError("bisection_root: need lo < hi");
  }
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  if (target < std::min(f_lo, f_hi) || target > std::max(f_lo, f_hi)) {
    throw NoRootError("bisection_root: target is not bracketed by f(lo) and f(hi)");
  }
  const bool increasing = f_hi >= f_lo;
  for (int i = 0; i < params.max_iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = f(mid);
    if (std::abs(f_mid - target) < params.value_tolerance) return mid;
    if ((f_mid < target) == increasing) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < params.width_tolerance) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace epr

#endif  // EPR_BISECT_HPP
