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

#ifndef EPR_ELO_HPP
#define EPR_ELO_HPP

#include <cmath>
#include <span>

#include "epr/errors.hpp"

namespace epr {

/// Elo rating points. Any finite value is accepted; ratings are carried
/// unrounded and only rounded to integers at the reporting layer.
using Rating = double;

/// Expected per-game score in [0, 1].
using WinProbability = double;

/// Rating-difference scale of the logistic model.
inline constexpr double kEloScale = 400.0;

/// Win probability of a player rated `a` against opposition rated `b`:
/// 1 / (1 + 10^((b - a) / 400)).
inline WinProbability win_probability(Rating a, Rating b) {
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("win_probability: ratings must be finite");
  }
  return 1.0 / (1.0 + std::pow(10.0, (b - a) / kEloScale));
}

/// The rating whose win probability against opposition rated `ra` equals
/// `w`: ra - 400 * log10((1 - w) / w). Exact inverse of win_probability
/// in its first argument.
inline Rating rating_for_win_probability(WinProbability w, Rating ra) {
  if (!std::isfinite(w) || !std::isfinite(ra)) {
    throw DomainError("rating_for_win_probability: inputs must be finite");
  }
  if (!(w > 0.0 && w < 1.0)) {
    throw UnboundedRatingError(
        "rating_for_win_probability: w must lie strictly inside (0, 1); "
        "a perfect or zero score needs a constrained w*, never a raw one");
  }
  return ra - kEloScale * std::log10((1.0 - w) / w);
}

/// Arithmetic mean of the opponents' ratings, unrounded.
inline Rating average_rating(std::span<const Rating> opponents) {
  if (opponents.empty()) {
    throw DomainError("average_rating: opponent list must be non-empty");
  }
  double sum = 0.0;
  for (Rating b : opponents) {
    if (!std::isfinite(b)) {
      throw DomainError("average_rating: ratings must be finite");
    }
    sum += b;
  }
  return sum / static_cast<double>(opponents.size());
}

}  // namespace epr

#endif  // EPR_ELO_HPP
