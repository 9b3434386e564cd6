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

#include "lochs/beta_expand.hpp"

#include <cmath>
#include <string>

#include "lochs/errors.hpp"

namespace lochs {

namespace {

void check_beta(const ExactRational& beta) {
  if (beta <= ExactRational(1)) throw DomainError("beta must exceed 1, got " + beta.to_string());
}

constexpr double kEnumerationBudget = 1 << 26;

}  // namespace

Digit max_beta_digit(const ExactRational& beta) {
  check_beta(beta);
  const BigInt top = ceil_ratio(beta) - 1;
  if (!top.fits_slong_p()) throw DomainError("beta too large for machine digits");
  return top.get_si();
}

std::optional<std::size_t> BetaOrbit::terminates_at() const {
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    if (orbit[k].is_zero()) return k;
  }
  return std::nullopt;
}

ExactRational BetaOrbit::partial_sum(std::size_t k) const {
  if (k > digits.size()) throw RangeError("partial sum beyond orbit depth");
  // Horner from the innermost digit: omega_k = (eps_1 + (eps_2 + ...)/beta)/beta.
  ExactRational acc;
  for (std::size_t j = k; j-- > 0;) {
    acc = (acc + ExactRational(static_cast<long>(digits[j]))) / beta;
  }
  return acc;
}

BetaStepper::BetaStepper(const ExactRational& x, const ExactRational& beta)
    : p_(beta.numerator()),
      q_(beta.denominator()),
      u_(x.numerator()),
      d_(x.denominator()),
      p_pow_(1),
      q_pow_(1),
      d_q_pow_(x.denominator()),
      u_p_pow_(x.numerator()),
      s_(x.numerator()),
      t_(1),
      left_(0),
      right_(x.denominator()),
      scale_(x.denominator()) {
  check_beta(beta);
  if (x.sign() < 0 || x >= ExactRational(1)) {
    throw DomainError("x must lie in [0,1), got " + x.to_string());
  }
  max_digit_ = max_beta_digit(beta);
}

void BetaStepper::step() {
  q_pow_ *= q_;
  d_q_pow_ *= q_;
  BigInt scaled = p_ * s_;
  BigInt digit;
  mpz_fdiv_qr(digit.get_mpz_t(), s_.get_mpz_t(), scaled.get_mpz_t(), d_q_pow_.get_mpz_t());
  last_digit_ = digit.get_si();

  t_ = p_ * t_ - digit * q_pow_;
  if (t_ > q_pow_) t_ = q_pow_;

  p_pow_ *= p_;
  u_p_pow_ *= p_;
  scale_ = d_ * p_pow_;
  left_ = u_p_pow_ - s_;
  right_ = left_ + d_ * t_;
  ++depth_;
}

ExactRational BetaStepper::orbit_value() const { return ExactRational(s_, d_q_pow_); }

ExactRational BetaStepper::follower() const { return ExactRational(t_, q_pow_); }

BetaOrbit beta_digits(const ExactRational& x, const ExactRational& beta, std::size_t n) {
  if (n < 1) throw DomainError("depth must be at least 1");
  BetaStepper stepper(x, beta);
  BetaOrbit out{beta, x, {}, {}, {}};
  out.digits.reserve(n);
  out.orbit.reserve(n + 1);
  out.followers.reserve(n + 1);
  out.orbit.push_back(x);
  out.followers.push_back(ExactRational(1));
  for (std::size_t k = 0; k < n; ++k) {
    stepper.step();
    out.digits.push_back(stepper.last_digit());
    out.orbit.push_back(stepper.orbit_value());
    out.followers.push_back(stepper.follower());
  }
  return out;
}

BetaCylinder cylinder(const BetaOrbit& orbit) { return cylinder(orbit, orbit.depth()); }

BetaCylinder cylinder(const BetaOrbit& orbit, std::size_t depth) {
  if (depth > orbit.depth()) throw RangeError("cylinder depth beyond orbit depth");
  const ExactRational scale = pow(orbit.beta, static_cast<unsigned>(depth));
  return BetaCylinder{orbit.partial_sum(depth), orbit.followers[depth] / scale, depth};
}

std::size_t zero_run(const BetaOrbit& orbit, std::size_t n) {
  if (n > orbit.depth()) throw RangeError("zero_run index beyond orbit depth");
  for (std::size_t j = n; j < orbit.depth(); ++j) {
    if (orbit.digits[j] != 0) return j - n;
  }
  throw RangeError("zero run after position " + std::to_string(n) + " exceeds window of " +
                   std::to_string(orbit.depth() - n) + " digits");
}

namespace {

// Words extending a cylinder whose image under T^k is [0, r).
std::uint64_t count_from(const ExactRational& beta, const ExactRational& follower, unsigned remaining) {
  if (remaining == 0) return 1;
  std::uint64_t total = 0;
  const ExactRational scaled = beta * follower;
  const ExactRational one(1);
  // Digit e is admissible iff [e, e+1) meets [0, beta r), i.e. e < beta r.
  for (long e = 0; ExactRational(e) < scaled; ++e) {
    ExactRational next = scaled - ExactRational(e);
    if (next > one) next = one;
    total += count_from(beta, next, remaining - 1);
  }
  return total;
}

}  // namespace

std::uint64_t count_admissible(const ExactRational& beta, unsigned n) {
  check_beta(beta);
  const double b = beta.to_double();
  const double upper = std::pow(b, n + 1.0) / (b - 1.0);
  if (!(upper <= kEnumerationBudget)) {
    throw ResourceError("admissible-word enumeration for n=" + std::to_string(n) +
                        " exceeds the budget of 2^26 words");
  }
  return count_from(beta, ExactRational(1), n);
}

}  // namespace lochs
