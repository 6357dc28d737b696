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

#ifndef EPR_EPR_HPP
#define EPR_EPR_HPP

#include "epr/bisect.hpp"
#include "epr/elo.hpp"
#include "epr/errors.hpp"
#include "epr/fide.hpp"
#include "epr/ingest.hpp"
#include "epr/rating.hpp"
#include "epr/report.hpp"
#include "epr/score.hpp"

#endif  // EPR_EPR_HPP
