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

#include "lochs/numkit.hpp"

#include <cmath>
#include <numbers>

#include "lochs/errors.hpp"

namespace lochs {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses an optionally signed run of digits covering all of `text`.
BigInt parse_integer(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!is_digit(text[j])) throw ParseError("unexpected character in integer", offset + j);
  }
  BigInt value(std::string(text.substr(i)), 10);
  return negative ? BigInt(-value) : value;
}

}  // namespace

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw DomainError("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::from_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  std::size_t fraction_digits = 0;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (is_digit(c)) {
      digits.push_back(c);
      if (seen_point) ++fraction_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in decimal", i);
    }
  }
  if (digits.empty()) throw ParseError("decimal has no digits", text.size());
  if (seen_point && fraction_digits == 0) throw ParseError("missing fractional digits", text.size());

  BigInt numerator(digits, 10);
  if (negative) numerator = -numerator;
  BigInt denominator;
  mpz_ui_pow_ui(denominator.get_mpz_t(), 10, fraction_digits);
  return ExactRational(numerator, denominator);
}

ExactRational ExactRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_decimal(text);
  const BigInt numerator = parse_integer(text.substr(0, slash), 0);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '+' || den_text[0] == '-')) {
    throw ParseError("sign not allowed in denominator", slash + 1);
  }
  const BigInt denominator = parse_integer(den_text, slash + 1);
  if (denominator == 0) throw ParseError("zero denominator", slash + 1);
  return ExactRational(numerator, denominator);
}

std::string ExactRational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string ExactRational::to_decimal(int digits) const {
  const BigInt num = value_.get_num();
  const BigInt den = value_.get_den();
  BigInt mag = num < 0 ? BigInt(-num) : num;
  BigInt whole = mag / den;
  BigInt rem = mag % den;
  std::string out = (num < 0 ? "-" : "") + whole.get_str();
  if (digits <= 0 || rem == 0) return out;
  out.push_back('.');
  for (int i = 0; i < digits && rem != 0; ++i) {
    rem *= 10;
    BigInt d = rem / den;
    rem -= d * den;
    out.push_back(static_cast<char>('0' + d.get_si()));
  }
  return out;
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
  value_ += rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

ExactRational abs(const ExactRational& x) { return x.sign() < 0 ? -x : x; }

ExactRational pow(const ExactRational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return ExactRational(num, den);
}

BigInt floor_ratio(const ExactRational& x) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

BigInt ceil_ratio(const ExactRational& x) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return q;
}

ExactRational rational_from_decimal(std::string_view text) {
  return ExactRational::from_decimal(text);
}

double log_of(const BigInt& x) {
  if (x <= 0) throw DomainError("logarithm of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double log_of(const ExactRational& x) {
  if (x.sign() <= 0) throw DomainError("logarithm of a non-positive rational");
  return log_of(x.numerator()) - log_of(x.denominator());
}

void PrecisionPolicy::validate() const {
  if (guard_bits < 64) throw DomainError("guard_bits must be at least 64");
  if (input_bits < guard_bits) throw DomainError("input_bits must be at least guard_bits");
}

}  // namespace lochs
