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

#ifndef EPR_ERRORS_HPP
#define EPR_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epr {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input violates a precondition (non-finite rating, malformed score
/// line, threshold outside (0, 1), ...). The message names the violated
/// precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// w = 0 or w = 1 has no finite rating preimage under the logistic map.
class UnboundedRatingError : public Error {
 public:
  using Error::Error;
};

/// TPR is undefined for zero and perfect scores.
class UndefinedTprError : public Error {
 public:
  using Error::Error;
};

/// The exact-score constraint binds on both sides of m/n and no side
/// policy was given to break the tie.
class AmbiguousArgmaxError : public Error {
 public:
  using Error::Error;
};

/// No win probability can satisfy the constraint (at-least objective
/// with a zero score).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// The bisection target is not bracketed by the endpoint values.
class NoRootError : public Error {
 public:
  using Error::Error;
};

/// Malformed input data; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Filesystem failure (unwritable output directory, unreadable input).
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace epr

#endif  // EPR_ERRORS_HPP
