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

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace lochs {

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
// Backed by GMP; no operation ever rounds.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value) : value_(value) {}  // NOLINT(implicit)
  explicit ExactRational(const BigInt& value) : value_(value) {}
  ExactRational(const BigInt& numerator, const BigInt& denominator);
  explicit ExactRational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
  }

  // Reads "[+-]digits[.digits]" exactly as numerator / 10^k.
  static ExactRational from_decimal(std::string_view text);
  // Accepts either a decimal or "p/q".
  static ExactRational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }
  // "p/q", or "p" for integers.
  std::string to_string() const;
  // Decimal expansion truncated toward zero after `digits` fractional
  // digits. Exact when the expansion terminates earlier.
  std::string to_decimal(int digits) const;

  ExactRational operator-() const { return ExactRational(mpq_class(-value_)); }
  ExactRational& operator+=(const ExactRational& rhs);
  ExactRational& operator-=(const ExactRational& rhs);
  ExactRational& operator*=(const ExactRational& rhs);
  ExactRational& operator/=(const ExactRational& rhs);

  friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
  friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
  friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
  friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

  friend bool operator==(const ExactRational& a, const ExactRational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

ExactRational abs(const ExactRational& x);
ExactRational pow(const ExactRational& base, unsigned exponent);

// Greatest integer not exceeding x.
BigInt floor_ratio(const ExactRational& x);
// Smallest integer not below x.
BigInt ceil_ratio(const ExactRational& x);

ExactRational rational_from_decimal(std::string_view text);

// Natural logarithm of a positive rational, accurate to double precision
// even when numerator and denominator overflow a double.
double log_of(const ExactRational& x);
double log_of(const BigInt& x);

// How much information a sampled point carries. input_bits random bits
// define the point; guard_bits is the margin that must remain unconsumed.
struct PrecisionPolicy {
  unsigned input_bits = 256;
  unsigned guard_bits = 64;

  // Throws DomainError unless input_bits >= guard_bits >= 64.
  void validate() const;
};

}  // namespace lochs
