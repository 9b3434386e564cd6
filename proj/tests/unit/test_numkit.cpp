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

#include <cmath>
#include <random>

#include "doctest.h"
#include "lochs/errors.hpp"
#include "lochs/numkit.hpp"
#include "test_support.hpp"

using lochs::BigInt;
using lochs::ExactRational;

TEST_CASE("decimal strings read exactly") {
  CHECK(lochs::rational_from_decimal("0.25") == ExactRational(1, 4));
  CHECK(lochs::rational_from_decimal("10.731") == ExactRational(10731, 1000));
  CHECK(lochs::rational_from_decimal("2") == ExactRational(2));
  CHECK(lochs::rational_from_decimal("-0.5") == ExactRational(-1, 2));
  CHECK(lochs::rational_from_decimal("+3.000") == ExactRational(3));
  const auto v = lochs::rational_from_decimal("0.1");
  CHECK(v.numerator() == 1);
  CHECK(v.denominator() == 10);
}

TEST_CASE("malformed decimals name the offending position") {
  auto position_of = [](const char* text) -> long {
    try {
      lochs::rational_from_decimal(text);
    } catch (const lochs::ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position_of("1.2x") == 3);
  CHECK(position_of("abc") == 0);
  CHECK(position_of("1..2") == 2);
  CHECK(position_of("") >= 0);
  CHECK(position_of("-") >= 0);
  CHECK(position_of("1.") >= 0);
}

TEST_CASE("parse accepts fractions") {
  CHECK(ExactRational::parse("27183/10000") == ExactRational(27183, 10000));
  CHECK(ExactRational::parse("6/4") == ExactRational(3, 2));
  CHECK(ExactRational::parse("1.5") == ExactRational(3, 2));
  CHECK_THROWS_AS(ExactRational::parse("1/0"), lochs::ParseError);
  CHECK_THROWS_AS(ExactRational::parse("1/"), lochs::ParseError);
}

TEST_CASE("floor and ceil") {
  CHECK(lochs::floor_ratio(ExactRational(7, 2)) == 3);
  CHECK(lochs::floor_ratio(ExactRational(-1, 2)) == -1);
  CHECK(lochs::floor_ratio(ExactRational(10731, 1000)) == 10);
  CHECK(lochs::floor_ratio(ExactRational(-4)) == -4);
  CHECK(lochs::ceil_ratio(ExactRational(7, 2)) == 4);
  CHECK(lochs::ceil_ratio(ExactRational(-1, 2)) == 0);
  CHECK(lochs::ceil_ratio(ExactRational(5)) == 5);
}

TEST_CASE("normal form") {
  const ExactRational r(BigInt(-6), BigInt(-4));
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  const ExactRational s(BigInt(6), BigInt(-4));
  CHECK(s.numerator() == -3);
  CHECK(s.denominator() == 2);
  CHECK_THROWS_AS(ExactRational(BigInt(1), BigInt(0)), lochs::DomainError);
  CHECK(ExactRational(3, 1).is_integer());
  CHECK(ExactRational(0).is_zero());
}

TEST_CASE("formatting") {
  CHECK(ExactRational(3, 8).to_string() == "3/8");
  CHECK(ExactRational(-5).to_string() == "-5");
  CHECK(ExactRational(1, 3).to_decimal(5) == "0.33333");
  CHECK(ExactRational(1, 4).to_decimal(10) == "0.25");
  CHECK(ExactRational(-7, 4).to_decimal(1) == "-1.7");
}

TEST_CASE("powers and logarithms") {
  CHECK(lochs::pow(ExactRational(3, 2), 3) == ExactRational(27, 8));
  CHECK(lochs::pow(ExactRational(5), 0) == ExactRational(1));
  BigInt huge(1);
  huge <<= 5000;
  CHECK(lochs::log_of(huge) == doctest::Approx(5000 * std::log(2.0)).epsilon(1e-14));
  const ExactRational tiny(BigInt(3), huge);
  CHECK(lochs::log_of(tiny) == doctest::Approx(std::log(3.0) - 5000 * std::log(2.0)).epsilon(1e-14));
  CHECK_THROWS_AS(lochs::log_of(ExactRational(0)), lochs::DomainError);
}

TEST_CASE("precision policy") {
  lochs::PrecisionPolicy ok;
  CHECK_NOTHROW(ok.validate());
  lochs::PrecisionPolicy low_guard{256, 32};
  CHECK_THROWS_AS(low_guard.validate(), lochs::DomainError);
  lochs::PrecisionPolicy inverted{100, 128};
  CHECK_THROWS_AS(inverted.validate(), lochs::DomainError);
  lochs::PrecisionPolicy edge{64, 64};
  CHECK_NOTHROW(edge.validate());
}

TEST_CASE("field identities on random rationals") {
  std::mt19937_64 rng(20260101);
  for (int i = 0; i < 10000; ++i) {
    const auto a = lochs::testing::random_rational(rng);
    auto b = lochs::testing::random_rational(rng);
    if (b.is_zero()) b = ExactRational(1, 7);
    REQUIRE((a + b) - b == a);
    REQUIRE((a * b) / b == a);
    REQUIRE(b.denominator() > 0);
    REQUIRE(gcd(b.numerator(), b.denominator()) == 1);
  }
}

TEST_CASE("floor brackets random rationals") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 10000; ++i) {
    const auto x = lochs::testing::random_rational(rng);
    const ExactRational f(lochs::floor_ratio(x));
    REQUIRE(f <= x);
    REQUIRE(x < f + ExactRational(1));
    const ExactRational c(lochs::ceil_ratio(x));
    REQUIRE(c - ExactRational(1) < x);
    REQUIRE(x <= c);
  }
}
