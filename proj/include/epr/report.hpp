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
// Presentation layer. All chained math runs on unrounded reals; this is
// the one place values are rounded: ratings to integers (half away from
// zero), w* to 4 decimals, probabilities to 2.

#ifndef EPR_REPORT_HPP
#define EPR_REPORT_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epr/rating.hpp"

namespace epr {

/// One displayed result line, in the shape of the historical tables this
/// tool reproduces.
struct ReportRow {
  std::string player;
  std::string event;
  double ra_exact = 0.0;
  long long ra_rounded = 0;
  double m = 0.0;
  int n = 0;
  std::optional<long long> tpr;  // null exactly when m = 0 or m = n
  long long fpr = 0;
  long long pre = 0;
  double w_star = 0.0;
  double s_at_w_star = 0.0;
};

/// Half away from zero, the rounding used for all displayed ratings.
inline long long round_rating(double x) { return std::llround(x); }

namespace detail {

inline std::string shortest(double x) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, ptr);
}

inline std::string fixed(double x, int decimals) {
  char buffer[48];
  std::snprintf(buffer, sizeof buffer, "%.*f", decimals, x);
  return std::string(buffer);
}

inline void append_csv_field(std::string& out, std::string_view field) {
  if (field.find_first_of(",\"\n") != std::string_view::npos) {
    out.push_back('"');
    for (char c : field) {
      if (c == '"') out.push_back('"');
      out.push_back(c);
    }
    out.push_back('"');
  } else {
    out.append(field);
  }
}

}  // namespace detail

inline ReportRow make_report_row(std::string player, std::string event,
                                 const PerformanceQuery& query) {
  const PerformanceReport report = estimated_performance_rating(query);
  ReportRow row;
  row.player = std::move(player);
  row.event = std::move(event);
  row.ra_exact = query.ra;
  row.ra_rounded = round_rating(query.ra);
  row.m = query.score.points;
  row.n = query.score.games;
  if (report.tpr) row.tpr = round_rating(*report.tpr);
  row.fpr = round_rating(report.fpr);
  row.pre = round_rating(report.pre);
  row.w_star = report.w_star;
  row.s_at_w_star = report.s_at_w_star;
  return row;
}

/// Presentation order of the historical tables: best rating first.
/// Ties break on (player, event, n, m) so output is deterministic.
inline void sort_by_pre_descending(std::vector<ReportRow>& rows) {
  std::sort(rows.begin(), rows.end(), [](const ReportRow& a, const ReportRow& b) {
    if (a.pre != b.pre) return a.pre > b.pre;
    if (a.player != b.player) return a.player < b.player;
    if (a.event != b.event) return a.event < b.event;
    if (a.n != b.n) return a.n < b.n;
    return a.m < b.m;
  });
}

inline std::string render_csv(std::span<const ReportRow> rows) {
  std::string out =
      "player,event,ra_exact,ra_rounded,m,n,tpr,fpr,pre,w_star,s_at_w_star\n";
  for (const ReportRow& row : rows) {
    detail::append_csv_field(out, row.player);
    out.push_back(',');
    detail::append_csv_field(out, row.event);
    out.push_back(',');
    out += detail::shortest(row.ra_exact);
    out.push_back(',');
    out += std::to_string(row.ra_rounded);
    out.push_back(',');
    out += detail::shortest(row.m);
    out.push_back(',');
    out += std::to_string(row.n);
    out.push_back(',');
    if (row.tpr) out += std::to_string(*row.tpr);
    out.push_back(',');
    out += std::to_string(row.fpr);
    out.push_back(',');
    out += std::to_string(row.pre);
    out.push_back(',');
    out += detail::fixed(row.w_star, 4);
    out.push_back(',');
    out += detail::fixed(row.s_at_w_star, 2);
    out.push_back('\n');
  }
  return out;
}

inline std::string render_table(std::span<const ReportRow> rows) {
  const std::vector<std::string> header = {"Player", "Event", "Ra",  "Score",
                                           "w*",     "S(w*)", "TPR", "FPR",
                                           "PRe"};
  std::vector<std::vector<std::string>> cells;
  cells.reserve(rows.size());
  for (const ReportRow& row : rows) {
    cells.push_back({row.player, row.event, std::to_string(row.ra_rounded),
                     detail::shortest(row.m) + "/" + std::to_string(row.n),
                     detail::fixed(row.w_star, 4),
                     detail::fixed(row.s_at_w_star, 2),
                     row.tpr ? std::to_string(*row.tpr) : "N/A",
                     std::to_string(row.fpr), std::to_string(row.pre)});
  }
  std::vector<std::size_t> widths(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    widths[c] = header[c].size();
    for (const auto& row : cells) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  const auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      const bool left = c < 2;  // text columns
      const std::size_t pad = widths[c] - row[c].size();
      if (!left) out.append(pad, ' ');
      out += row[c];
      if (left && c + 1 < row.size()) out.append(pad, ' ');
      if (c + 1 < row.size()) out.append("  ");
    }
    out.push_back('\n');
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  return out;
}

}  // namespace epr

#endif  // EPR_REPORT_HPP
