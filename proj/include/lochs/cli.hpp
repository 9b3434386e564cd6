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
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace lochs::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // anything not covered below, e.g. a corrupted fixture
  kUsage = 2,
  kDomain = 3,
  kResource = 4,
  kIndeterminate = 5,
};

// Everything a run depends on. Fields a subcommand does not read keep their
// defaults and are echoed anyway.
struct RunConfig {
  std::string subcommand;
  std::string beta = "10";
  std::string x;
  std::string fixture;
  std::size_t n = 0;
  std::size_t m = 0;
  bool series = false;
  double theta = 1.0;
  double t = 0.0;
  double eps = 0.05;
  double gamma = 0.0;
  unsigned depth = 10;
  unsigned cutoff = 1000;
  bool complete_tail = true;
  std::vector<std::size_t> n_list;
  std::size_t i_max = 6;
  std::size_t samples = 1000;
  unsigned input_bits = 0;  // 0: derive from the largest depth
  unsigned guard_bits = 64;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "text";  // text, csv or json
  std::string output;           // empty: standard output
};

nlohmann::json to_json(const RunConfig& config);

// Accepts either a bare config object or a full JSON report carrying one
// under "config". Throws ParseError on malformed input.
RunConfig config_from_json(const nlohmann::json& doc);

// Fills derived defaults (input_bits) so the echo is complete.
RunConfig resolve(RunConfig config);

// Executes one resolved or unresolved config and writes the report.
// Returns an ExitCode; error messages go to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (including the program name) and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lochs::cli
