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
// Game-record ingestion: CSV parsing, aggregation of record slices into
// performance queries, and win-streak extraction.

#ifndef EPR_INGEST_HPP
#define EPR_INGEST_HPP

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "epr/elo.hpp"
#include "epr/errors.hpp"
#include "epr/rating.hpp"

namespace epr {

/// One game: who played whom in which event, the opponent's rating, and
/// the result (1 win, 0.5 draw, 0 loss). Opponents without an
/// established rating carry a precomputed substitute in opponent_rating.
struct GameRecord {
  std::string player;
  std::string event;
  std::int64_t sequence = 0;  // ordering within the player's games
  std::string opponent;
  Rating opponent_rating = 0.0;
  double result = 0.0;
};

/// A non-empty run of one player's records, optionally restricted to one
/// event.
struct QuerySlice {
  std::string player;
  std::optional<std::string> event;
  std::vector<GameRecord> records;
};

inline constexpr std::string_view kGamesCsvHeader =
    "player,event,sequence,opponent,opponent_rating,result";

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Splits one CSV line; double-quoted fields may contain commas and
// doubled quotes.
inline std::vector<std::string> split_csv_line(std::string_view line,
                                               std::size_t line_number) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"' && current.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw ParseError(line_number, "unterminated quoted field");
  fields.push_back(std::move(current));
  return fields;
}

inline double parse_result_field(std::string_view raw, std::size_t line_number) {
  const std::string_view field = trim(raw);
  if (field.size() == 1) {
    switch (std::tolower(static_cast<unsigned char>(field[0]))) {
      case 'w': return 1.0;
      case 'd': return 0.5;
      case 'l': return 0.0;
      default: break;
    }
  }
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc() || ptr != end ||
      !(value == 0.0 || value == 0.5 || value == 1.0)) {
    throw ParseError(line_number, "result must be 1, 0.5, 0 or W, D, L, got '" +
                                      std::string(raw) + "'");
  }
  return value;
}

}  // namespace detail

/// Parses a game-record CSV. The header must match kGamesCsvHeader;
/// records are returned in file order. An empty stream yields no
/// records.
inline std::vector<GameRecord> parse_games(std::istream& in) {
  std::vector<GameRecord> records;
  std::string line;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (detail::trim(line).empty()) continue;
    if (!header_seen) {
      if (detail::trim(line) != kGamesCsvHeader) {
        throw ParseError(line_number, "expected header '" +
                                          std::string(kGamesCsvHeader) + "'");
      }
      header_seen = true;
      continue;
    }
    auto fields = detail::split_csv_line(line, line_number);
    if (fields.size() != 6) {
      throw ParseError(line_number, "expected 6 columns, got " +
                                        std::to_string(fields.size()));
    }
    GameRecord record;
    record.player = std::string(detail::trim(fields[0]));
    record.event = std::string(detail::trim(fields[1]));

    const std::string_view seq = detail::trim(fields[2]);
    const auto [seq_ptr, seq_ec] =
        std::from_chars(seq.data(), seq.data() + seq.size(), record.sequence);
    if (seq_ec != std::errc() || seq_ptr != seq.data() + seq.size() ||
        record.sequence < 1) {
      throw ParseError(line_number, "sequence must be a positive integer, got '" +
                                        fields[2] + "'");
    }

    record.opponent = std::string(detail::trim(fields[3]));

    const std::string_view rating = detail::trim(fields[4]);
    const auto [r_ptr, r_ec] = std::from_chars(
        rating.data(), rating.data() + rating.size(), record.opponent_rating);
    if (r_ec != std::errc() || r_ptr != rating.data() + rating.size() ||
        !std::isfinite(record.opponent_rating)) {
      throw ParseError(line_number,
                       "opponent_rating must be a finite number, got '" +
                           fields[4] + "'");
    }

    record.result = detail::parse_result_field(fields[5], line_number);
    records.push_back(std::move(record));
  }
  return records;
}

/// Canonical CSV form of the records; parse_games(serialize_games(r))
/// reproduces r.
inline std::string serialize_games(std::span<const GameRecord> records) {
  const auto write_field = [](std::string& out, std::string_view field) {
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
  };
  std::string out(kGamesCsvHeader);
  out.push_back('\n');
  for (const GameRecord& record : records) {
    write_field(out, record.player);
    out.push_back(',');
    write_field(out, record.event);
    out.push_back(',');
    out.append(std::to_string(record.sequence));
    out.push_back(',');
    write_field(out, record.opponent);
    out.push_back(',');
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer,
                                         record.opponent_rating);
    out.append(buffer, ptr);
    out.push_back(',');
    out.append(record.result == 1.0 ? "1" : record.result == 0.5 ? "0.5" : "0");
    out.push_back('\n');
  }
  return out;
}

/// Aggregates a slice into a query: m as the half-point-exact result sum,
/// n as the record count, ra as the mean opponent rating.
inline PerformanceQuery build_query(const QuerySlice& slice,
                                    double threshold = 0.75,
                                    Objective objective = Objective::exact_score) {
  if (slice.records.empty()) {
    throw DomainError("build_query: slice must be non-empty");
  }
  std::int64_t half_points = 0;
  std::vector<Rating> opponents;
  opponents.reserve(slice.records.size());
  for (const GameRecord& record : slice.records) {
    if (record.player != slice.player) {
      throw DomainError("build_query: all records must share the slice's player");
    }
    const double doubled = 2.0 * record.result;
    if (doubled != 0.0 && doubled != 1.0 && doubled != 2.0) {
      throw DomainError("build_query: result must be 0, 0.5, or 1");
    }
    half_points += static_cast<std::int64_t>(doubled);
    opponents.push_back(record.opponent_rating);
  }
  PerformanceQuery query;
  query.ra = average_rating(opponents);
  query.score = {static_cast<double>(half_points) / 2.0,
                 static_cast<int>(slice.records.size())};
  query.threshold = threshold;
  query.objective = objective;
  return query;
}

/// Maximal runs of consecutive wins per player, in sequence order, of
/// length >= min_length. Runs may span events. Records must be sorted by
/// (player, sequence).
inline std::vector<QuerySlice> extract_streaks(std::span<const GameRecord> records,
                                               int min_length) {
  if (min_length < 1) {
    throw DomainError("extract_streaks: min_length must be >= 1");
  }
  for (std::size_t i = 1; i < records.size(); ++i) {
    const auto key = [](const GameRecord& r) {
      return std::tie(r.player, r.sequence);
    };
    if (key(records[i]) < key(records[i - 1])) {
      throw DomainError("extract_streaks: records must be sorted by (player, sequence)");
    }
  }
  std::vector<QuerySlice> streaks;
  std::size_t run_start = 0;
  std::size_t run_length = 0;
  const auto flush = [&](std::size_t end) {
    if (run_length >= static_cast<std::size_t>(min_length)) {
      QuerySlice slice;
      slice.player = records[run_start].player;
      slice.records.assign(records.begin() + run_start, records.begin() + end);
      streaks.push_back(std::move(slice));
    }
    run_length = 0;
  };
  for (std::size_t i = 0; i < records.size(); ++i) {
    const bool continues = run_length > 0 &&
                           records[i].player == records[run_start].player &&
                           records[i].result == 1.0;
    if (continues) {
      ++run_length;
      continue;
    }
    flush(i);
    if (records[i].result == 1.0) {
      run_start = i;
      run_length = 1;
    }
  }
  flush(records.size());
  return streaks;
}

}  // namespace epr

#endif  // EPR_INGEST_HPP
