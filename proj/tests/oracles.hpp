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
//
// Test-only oracles, deliberately independent of the library's
// evaluation path: score probabilities by brute-force enumeration of all
// 2^n win/loss outcomes.

#ifndef EPR_TESTS_ORACLES_HPP
#define EPR_TESTS_ORACLES_HPP

#include <bit>
#include <cstdint>

namespace oracles {

// Probability of exactly m wins in n independent games, P(win) = w,
// summed outcome by outcome. Usable for n <= ~20.
inline double enumerate_exact(double w, int m, int n) {
  double total = 0.0;
  for (std::uint32_t outcome = 0; outcome < (1u << n); ++outcome) {
    if (std::popcount(outcome) != m) continue;
    double p = 1.0;
    for (int game = 0; game < n; ++game) {
      p *= (outcome >> game) & 1u ? w : 1.0 - w;
    }
    total += p;
  }
  return total;
}

inline double enumerate_at_least(double w, int m, int n) {
  double total = 0.0;
  for (int k = m; k <= n; ++k) total += enumerate_exact(w, k, n);
  return total;
}

}  // namespace oracles

#endif  // EPR_TESTS_ORACLES_HPP
