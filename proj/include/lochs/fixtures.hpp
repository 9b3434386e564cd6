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

#include <cstdint>
#include <string>
#include <string_view>

#include "lochs/numkit.hpp"

namespace lochs {

// A bundled constant: value is a truncation of the real number it stands
// for, which lies in [value, value + cell_width).
struct Fixture {
  std::string name;
  ExactRational value;
  ExactRational cell_width;
};

std::uint64_t fnv1a64(std::string_view text);

std::string_view pi_fixture_digits();
std::uint64_t pi_fixture_checksum();
bool pi_fixture_intact();

// Only "pi" (1100 decimals of pi - 3) exists. Throws Error on checksum
// mismatch, DomainError for unknown names.
Fixture load_fixture(std::string_view name);

}  // namespace lochs
