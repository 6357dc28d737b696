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
// Score-line normalization and binomial scoring probabilities: the
// exact-score mass S(w, m, n), the at-least tail S-bar(w, m, n), and the
// value of S at its unconstrained peak w = m/n.

#ifndef EPR_SCORE_HPP
#define EPR_SCORE_HPP

#include <cmath>
#include <cstdint>

#include "epr/errors.hpp"

namespace epr {

/// m points scored in n games. A win counts 1, a draw 0.5, a loss 0, so
/// points is a multiple of 0.5 with 0 <= points <= games.
struct ScoreLine {
  double points = 0.0;
  int games = 0;
};

/// A score line rescaled to integer points; points/games is preserved
/// exactly.
struct NormalizedScore {
  int points = 0;
  int games = 0;
};

/// Games at or below which score probabilities are computed by direct
/// products; beyond it the log-gamma path avoids overflow.
inline constexpr int kDirectEvalMaxGames = 50;

namespace detail {

// Exact n-choose-m as a double, n <= kDirectEvalMaxGames. Every
// intermediate fits int64 and every value fits the 53-bit mantissa.
inline double choose(int n, int m) {
  if (m > n - m) m = n - m;
  std::int64_t c = 1;
  for (int i = 0; i < m; ++i) {
    c = c * (n - i) / (i + 1);
  }
  return static_cast<double>(c);
}

inline double log_choose(int n, int m) {
  return std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - m + 1.0);
}

inline void check_score_pair(int m, int n) {
  if (n < 1) throw DomainError("score probability: games must be >= 1");
  if (m < 0 || m > n) {
    throw DomainError("score probability: points must lie in [0, games]");
  }
}

}  // namespace detail

/// Rescales half-point score lines to integers: an integral m is kept as
/// is, a half-integral m doubles both m and n. Applied exactly once;
/// finer granularity is rejected.
inline NormalizedScore normalize_score(const ScoreLine& s) {
  if (s.games < 1) {
    throw DomainError("score line: games must be a positive integer");
  }
  if (!std::isfinite(s.points) || s.points < 0.0 ||
      s.points > static_cast<double>(s.games)) {
    throw DomainError("score line: points must lie in [0, games]");
  }
  const double twice = 2.0 * s.points;
  if (twice != std::floor(twice)) {
    throw DomainError("score line: points must be a multiple of 0.5");
  }
  const auto half_points = static_cast<std::int64_t>(twice);
  if (half_points % 2 == 0) {
    return {static_cast<int>(half_points / 2), s.games};
  }
  return {static_cast<int>(half_points), 2 * s.games};
}

/// Probability of scoring exactly m points in n games at per-game win
/// probability w: C(n, m) * w^m * (1-w)^(n-m), with the convention
/// 0^0 = 1 at the boundaries.
inline double score_probability(double w, int m, int n) {
  detail::check_score_pair(m, n);
  if (!(w >= 0.0 && w <= 1.0)) {
    throw DomainError("score probability: w must lie in [0, 1]");
  }
  // Degenerate w first: keeps the log path free of 0 * log(0).
  if (w == 0.0) return m == 0 ? 1.0 : 0.0;
  if (w == 1.0) return m == n ? 1.0 : 0.0;
  if (n <= kDirectEvalMaxGames) {
    return detail::choose(n, m) * std::pow(w, m) * std::pow(1.0 - w, n - m);
  }
  return std::exp(detail::log_choose(n, m) + m * std::log(w) +
                  (n - m) * std::log1p(-w));
}

/// Probability of scoring at least m points in n games; the upper-tail
/// binomial sum. S-bar(w, 0, n) = 1 for every w.
inline double at_least_probability(double w, int m, int n) {
  detail::check_score_pair(m, n);
  if (!(w >= 0.0 && w <= 1.0)) {
    throw DomainError("score probability: w must lie in [0, 1]");
  }
  if (m == 0) return 1.0;
  double sum = 0.0;
  for (int k = m; k <= n; ++k) {
    sum += score_probability(w, k, n);
  }
  return sum;
}

/// S evaluated at w = m/n, the unconstrained maximum for interior scores:
/// C(n, m) * (m/n)^m * (1 - m/n)^(n-m). Equals 1 at m = 0 and m = n.
inline double peak_score_probability(int m, int n) {
  detail::check_score_pair(m, n);
  return score_probability(static_cast<double>(m) / n, m, n);
}

}  // namespace epr

#endif  // EPR_SCORE_HPP
