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

#include <string>

#include "lochs/numkit.hpp"

namespace lochs {

// Transcendental constants evaluated with MPFR at 256 bits (about 77
// decimal digits, correctly rounded) and then rounded to double.

// pi^2 / (6 log 2) = 2.37313822083125...; equals -P'(1) and the critical
// value of log beta.
double critical_log_beta();

// 2 log((1 + sqrt 5) / 2), the smallest Lyapunov exponent of the Gauss map.
double golden_lyapunov();

// log beta for rational beta > 0.
double log_beta(const ExactRational& beta);

// (6 log 2 log beta) / pi^2. Throws DomainError for beta <= 1.
double lochs_constant(const ExactRational& beta);

// Same value as a decimal string with `digits` significant digits (<= 64).
std::string lochs_constant_digits(const ExactRational& beta, int digits);

}  // namespace lochs
