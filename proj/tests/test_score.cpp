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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "epr/score.hpp"
#include "oracles.hpp"

using Catch::Approx;

TEST_CASE("normalize_score keeps integer scores and doubles half points",
          "[score]") {
  const auto one_of_one = epr::normalize_score({1.0, 1});
  CHECK(one_of_one.points == 1);
  CHECK(one_of_one.games == 1);

  const auto draw_heavy = epr::normalize_score({1.5, 2});
  CHECK(draw_heavy.points == 3);
  CHECK(draw_heavy.games == 4);

  const auto caruana = epr::normalize_score({8.5, 10});
  CHECK(caruana.points == 17);
  CHECK(caruana.games == 20);
}

TEST_CASE("normalize_score rejects invalid score lines", "[score]") {
  CHECK_THROWS_AS(epr::normalize_score({0.25, 2}), epr::DomainError);
  CHECK_THROWS_AS(epr::normalize_score({1.0, 0}), epr::DomainError);
  CHECK_THROWS_AS(epr::normalize_score({-0.5, 2}), epr::DomainError);
  CHECK_THROWS_AS(epr::normalize_score({2.5, 2}), epr::DomainError);
  CHECK_THROWS_AS(
      epr::normalize_score({std::numeric_limits<double>::quiet_NaN(), 2}),
      epr::DomainError);
}

TEST_CASE("normalize_score preserves the points ratio", "[score][property]") {
  std::mt19937 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const int games = 1 + static_cast<int>(rng() % 40);
    const int half_points = static_cast<int>(rng() % (2 * games + 1));
    const epr::ScoreLine score{half_points / 2.0, games};
    const auto normalized = epr::normalize_score(score);
    CHECK(static_cast<double>(normalized.points) / normalized.games ==
          Approx(score.points / score.games).margin(0));
    CHECK(normalized.points >= 0);
    CHECK(normalized.points <= normalized.games);
  }
}

TEST_CASE("score_probability at tabulated points", "[score]") {
  CHECK(epr::score_probability(0.5, 1, 2) == Approx(0.5).margin(1e-15));
  CHECK(epr::score_probability(0.75, 3, 4) == Approx(0.4219).margin(1e-3));
  CHECK(epr::score_probability(0.75, 3, 4) == Approx(0.421875).margin(1e-15));
  CHECK(epr::score_probability(0.866, 2, 2) == Approx(0.75).margin(1e-3));
}

TEST_CASE("score_probability boundary conventions", "[score]") {
  CHECK(epr::score_probability(0.0, 0, 5) == 1.0);
  CHECK(epr::score_probability(1.0, 5, 5) == 1.0);
  CHECK(epr::score_probability(0.0, 3, 5) == 0.0);
  CHECK(epr::score_probability(1.0, 3, 5) == 0.0);
}

TEST_CASE("score_probability input validation", "[score]") {
  CHECK_THROWS_AS(epr::score_probability(0.5, 3, 2), epr::DomainError);
  CHECK_THROWS_AS(epr::score_probability(0.5, -1, 2), epr::DomainError);
  CHECK_THROWS_AS(epr::score_probability(0.5, 0, 0), epr::DomainError);
  CHECK_THROWS_AS(epr::score_probability(1.5, 1, 2), epr::DomainError);
  CHECK_THROWS_AS(epr::score_probability(-0.1, 1, 2), epr::DomainError);
}

TEST_CASE("score_probability agrees with outcome enumeration",
          "[score][property]") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> probability(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int m = static_cast<int>(rng() % (n + 1));
    const double w = probability(rng);
    CHECK(epr::score_probability(w, m, n) ==
          Approx(oracles::enumerate_exact(w, m, n)).margin(1e-12));
    CHECK(epr::at_least_probability(w, m, n) ==
          Approx(oracles::enumerate_at_least(w, m, n)).margin(1e-12));
  }
}

TEST_CASE("log-domain path matches exact rational evaluation", "[score]") {
  // Frozen via exact rational arithmetic; these all take the n > 50 path.
  CHECK(epr::score_probability(0.3, 20, 60) ==
        Approx(9.30576024943082364e-02).epsilon(1e-12));
  CHECK(epr::score_probability(0.85, 55, 60) ==
        Approx(5.44264617399589021e-02).epsilon(1e-12));
  CHECK(epr::score_probability(0.5, 30, 60) ==
        Approx(1.02578173008569515e-01).epsilon(1e-12));
  CHECK(epr::score_probability(0.9, 98, 100) ==
        Approx(1.62319659868590135e-03).epsilon(1e-12));
}

TEST_CASE("at_least_probability at tabulated points", "[score]") {
  CHECK(epr::at_least_probability(0.37, 0, 9) == 1.0);
  CHECK(epr::at_least_probability(0.5, 1, 2) == Approx(0.75).margin(1e-15));
  CHECK(epr::at_least_probability(0.8660, 2, 2) == Approx(0.75).margin(1e-3));
  CHECK(epr::at_least_probability(0.8660, 2, 2) ==
        Approx(epr::score_probability(0.8660, 2, 2)).margin(1e-15));
}

TEST_CASE("score probabilities sum to one over m", "[score][property]") {
  for (int n = 1; n <= 60; ++n) {
    for (int tenth = 0; tenth <= 10; ++tenth) {
      const double w = tenth / 10.0;
      double sum = 0.0;
      for (int m = 0; m <= n; ++m) sum += epr::score_probability(w, m, n);
      CHECK(sum == Approx(1.0).margin(1e-10));
    }
  }
}

TEST_CASE("at_least_probability equals the tail sum", "[score][property]") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> probability(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 60);
    const int m = static_cast<int>(rng() % (n + 1));
    const double w = probability(rng);
    double tail = 0.0;
    for (int k = m; k <= n; ++k) tail += epr::score_probability(w, k, n);
    CHECK(epr::at_least_probability(w, m, n) == Approx(tail).margin(1e-10));
  }
}

TEST_CASE("peak_score_probability at tabulated points", "[score]") {
  CHECK(epr::peak_score_probability(1, 2) == Approx(0.5).margin(1e-15));
  CHECK(epr::peak_score_probability(2, 2) == 1.0);
  CHECK(epr::peak_score_probability(0, 7) == 1.0);
  // C(20,17) * 0.85^17 * 0.15^3, frozen via exact rational arithmetic.
  CHECK(epr::peak_score_probability(17, 20) ==
        Approx(0.24282889614926764).epsilon(1e-13));
}

TEST_CASE("w = m/n is a strict interior maximum of S", "[score][property]") {
  const double h = 1e-4;
  for (int n = 2; n <= 30; ++n) {
    for (int m = 1; m < n; ++m) {
      const double ratio = static_cast<double>(m) / n;
      const double at_peak = epr::score_probability(ratio, m, n);
      CHECK(epr::score_probability(ratio - h, m, n) < at_peak);
      CHECK(epr::score_probability(ratio + h, m, n) < at_peak);
      // Concavity at the peak: negative second central difference.
      const double second_difference = epr::score_probability(ratio - h, m, n) -
                                       2.0 * at_peak +
                                       epr::score_probability(ratio + h, m, n);
      CHECK(second_difference < 0.0);
    }
  }
}
