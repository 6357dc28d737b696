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

#ifndef EPR_FIDE_HPP
#define EPR_FIDE_HPP

#include <array>
#include <cmath>

#include "epr/errors.hpp"

namespace epr {

/// FIDE's predefined rating-difference table: dp indexed by the
/// percentage score ps in hundredths (index = 100 * ps). Antisymmetric
/// about ps = 0.50; the +/-800 endpoints are the notional values FIDE
/// assigns to perfect and zero scores. Reproduced for auditing in
/// docs/fide_dp_table.md.
inline constexpr std::array<int, 101> kFideDpTable = {
    -800, -677, -589, -538, -501, -470, -444, -422, -401, -383,
    -366, -351, -336, -322, -309, -296, -284, -273, -262, -251,
    -240, -230, -220, -211, -202, -193, -184, -175, -166, -158,
    -149, -141, -133, -125, -117, -110, -102, -95,  -87,  -80,
    -72,  -65,  -57,  -50,  -43,  -36,  -29,  -21,  -14,  -7,
    0,    7,    14,   21,   29,   36,   43,   50,   57,   65,
    72,   80,   87,   95,   102,  110,  117,  125,  133,  141,
    149,  158,  166,  175,  184,  193,  202,  211,  220,  230,
    240,  251,  262,  273,  284,  296,  309,  322,  336,  351,
    366,  383,  401,  422,  444,  470,  501,  538,  589,  677,
    800};

/// Rating difference for a percentage score. ps is rounded to the
/// nearest hundredth, ties away from zero, before the lookup.
inline int dp_lookup(double ps) {
  if (!(ps >= 0.0 && ps <= 1.0)) {
    throw DomainError("dp_lookup: percentage score must lie in [0, 1]");
  }
  const auto index = static_cast<int>(std::llround(ps * 100.0));
  return kFideDpTable[static_cast<std::size_t>(index)];
}

}  // namespace epr

#endif  // EPR_FIDE_HPP
