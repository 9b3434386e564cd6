// Copyright 2026 The Lochs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lochs {

// Every failure the library reports derives from Error. The CLI maps the
// concrete type onto an exit code, so new error kinds need a mapping there.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed numeric text. position is the 0-based offset of the first
// offending character.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Argument outside the mathematical domain of an operation (x not in [0,1),
// beta <= 1, theta <= 1/2, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request for a depth or index that the available data does not reach.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Work that would exceed an enumeration or memory budget.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// A sampling plan whose precision budget cannot support the requested depth.
class PlanError : public Error {
 public:
  using Error::Error;
};

// The sampled point has a terminating expansion at the requested depth.
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

// Too few usable points for a regression.
class FitError : public Error {
 public:
  using Error::Error;
};

// The numerical error bars do not allow a sign to be certified.
class IndeterminateSignError : public Error {
 public:
  using Error::Error;
};

}  // namespace lochs
