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
// The three performance-rating systems over a fixed opposition average:
//
//   tpr  - tournament performance rating, the rating whose implied
//          expected score over n games equals the achieved score m;
//          undefined for m = 0 and m = n.
//   fpr  - FIDE performance rating, opposition average plus the
//          tabulated dp increment for the percentage score.
//   estimated_performance_rating - the rating whose implied win
//          probability maximizes the probability of the achieved score
//          subject to that probability not exceeding a threshold t;
//          coincides with tpr on interior scores and stays defined at
//          perfect and zero scores.

#ifndef EPR_RATING_HPP
#define EPR_RATING_HPP

#include <cmath>
#include <optional>

#include "epr/bisect.hpp"
#include "epr/elo.hpp"
#include "epr/errors.hpp"
#include "epr/fide.hpp"
#include "epr/score.hpp"

namespace epr {

/// Which scoring probability the solver maximizes: the exact-score mass
/// S (default) or the at-least tail S-bar.
enum class Objective { exact_score, at_least };

/// Tie-break for the exact-score objective when the threshold binds on
/// both sides of m/n. The default refuses to pick silently.
enum class SidePolicy { none, lower, upper };

struct PerformanceQuery {
  Rating ra = 0.0;  // opponents' average rating
  ScoreLine score;
  double threshold = 0.75;
  Objective objective = Objective::exact_score;
};

struct PerformanceReport {
  WinProbability w_star = 0.0;
  double s_at_w_star = 0.0;  // objective value at w*
  std::optional<Rating> tpr;  // absent exactly when m = 0 or m = n
  Rating fpr = 0.0;
  Rating pre = 0.0;
  bool constraint_binding = false;
};

/// Solver output: the optimal win probability and whether the threshold
/// constraint binds there.
struct OptimalWin {
  WinProbability w = 0.0;
  bool binding = false;
};

/// Tournament performance rating: the unique solution of
/// m/n = 1 / (1 + 10^((ra - TPR) / 400)), i.e. ra - 400 * log10(n/m - 1).
inline Rating tpr(Rating ra, const ScoreLine& score) {
  if (!std::isfinite(ra)) throw DomainError("tpr: ra must be finite");
  normalize_score(score);  // validates the score line
  if (score.points <= 0.0 || score.points >= static_cast<double>(score.games)) {
    throw UndefinedTprError("tpr: undefined for zero and perfect scores");
  }
  return ra - kEloScale * std::log10(score.games / score.points - 1.0);
}

/// FIDE performance rating: ra + dp(percentage score).
inline Rating fpr(Rating ra, const ScoreLine& score) {
  if (!std::isfinite(ra)) throw DomainError("fpr: ra must be finite");
  normalize_score(score);  // validates the score line
  return ra + dp_lookup(score.points / static_cast<double>(score.games));
}

/// Maximizes the chosen scoring probability over w in [0, 1] subject to
/// it not exceeding t. (m, n) must already be integer-normalized.
///
/// Exact-score objective:
///   - interior m with peak <= t: the unconstrained argmax w* = m/n;
///   - m = n: S(w, n, n) = w^n is strictly increasing, so the constraint
///     binds at its unique root t^(1/n);
///   - m = 0: mirrored, 1 - t^(1/n);
///   - interior m with peak > t: the binding constraint has two roots
///     flanking m/n; refused unless a side policy picks one.
/// At-least objective: S-bar is nondecreasing in w, binding at its unique
/// root for m >= 1; m = 0 is infeasible since S-bar is identically 1.
inline OptimalWin optimal_win_probability(int m, int n, double t,
                                          Objective objective = Objective::exact_score,
                                          SidePolicy side = SidePolicy::none) {
  detail::check_score_pair(m, n);
  if (!(t > 0.0 && t < 1.0)) {
    throw DomainError("threshold: must lie strictly inside (0, 1)");
  }
  if (objective == Objective::at_least) {
    if (m == 0) {
      throw InfeasibleError(
          "at-least objective: a zero score is certain to be met, so the "
          "threshold constraint cannot be satisfied");
    }
    const double w = bisection_root(
        [m, n](double w) { return at_least_probability(w, m, n); }, t, 0.0, 1.0);
    return {w, true};
  }
  if (m == 0) return {1.0 - std::pow(t, 1.0 / n), true};
  if (m == n) return {std::pow(t, 1.0 / n), true};
  const double ratio = static_cast<double>(m) / n;
  if (peak_score_probability(m, n) <= t) {
    return {ratio, false};
  }
  const auto s = [m, n](double w) { return score_probability(w, m, n); };
  switch (side) {
    case SidePolicy::lower:
      return {bisection_root(s, t, 0.0, ratio), true};
    case SidePolicy::upper:
      return {bisection_root(s, t, ratio, 1.0), true};
    case SidePolicy::none:
    default:
      throw AmbiguousArgmaxError(
          "exact-score objective: the threshold binds on both sides of m/n; "
          "pass a side policy to choose one");
  }
}

/// Full report for one query: solves for w*, maps it to a rating, and
/// fills in the companion TPR (when defined) and FPR.
inline PerformanceReport estimated_performance_rating(const PerformanceQuery& q) {
  if (!std::isfinite(q.ra)) {
    throw DomainError("estimated_performance_rating: ra must be finite");
  }
  const NormalizedScore ns = normalize_score(q.score);
  const OptimalWin optimum =
      optimal_win_probability(ns.points, ns.games, q.threshold, q.objective);
  PerformanceReport report;
  report.w_star = optimum.w;
  report.constraint_binding = optimum.binding;
  report.s_at_w_star = q.objective == Objective::exact_score
                           ? score_probability(optimum.w, ns.points, ns.games)
                           : at_least_probability(optimum.w, ns.points, ns.games);
  report.pre = rating_for_win_probability(optimum.w, q.ra);
  report.fpr = fpr(q.ra, q.score);
  if (q.score.points > 0.0 && q.score.points < static_cast<double>(q.score.games)) {
    report.tpr = tpr(q.ra, q.score);
  }
  return report;
}

}  // namespace epr

#endif  // EPR_RATING_HPP
