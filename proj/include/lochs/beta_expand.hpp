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
#include <optional>
#include <vector>

#include "lochs/numkit.hpp"

namespace lochs {

using Digit = std::int64_t;

// Largest digit the beta-transformation can emit: ceil(beta) - 1.
Digit max_beta_digit(const ExactRational& beta);

// The first n steps of the beta-transformation orbit of x.
//
// digits[k-1] is the k-th digit, orbit[k] = T^k x and followers[k] = r_k,
// where [0, r_k) is the image of the depth-k cylinder under T^k. Hence the
// depth-k cylinder has left endpoint omega_k = sum eps_j beta^-j and length
// r_k beta^-k.
struct BetaOrbit {
  ExactRational beta;
  ExactRational x;
  std::vector<Digit> digits;
  std::vector<ExactRational> orbit;
  std::vector<ExactRational> followers;

  std::size_t depth() const { return digits.size(); }
  // Smallest k >= 1 with T^k x = 0, if the expansion terminates within depth.
  std::optional<std::size_t> terminates_at() const;
  // omega_k.
  ExactRational partial_sum(std::size_t k) const;
};

struct BetaCylinder {
  ExactRational left;
  ExactRational length;
  std::size_t depth = 0;

  ExactRational right() const { return left + length; }
};

// Throws DomainError unless 0 <= x < 1 and beta > 1.
BetaOrbit beta_digits(const ExactRational& x, const ExactRational& beta, std::size_t n);

// Cylinder at the orbit's full depth, or at a shorter prefix depth.
BetaCylinder cylinder(const BetaOrbit& orbit);
BetaCylinder cylinder(const BetaOrbit& orbit, std::size_t depth);

// l_n: the number of zero digits immediately after position n. Positions
// n+1..orbit.depth() form the window; throws RangeError when the whole
// window is zero ("run exceeds window").
std::size_t zero_run(const BetaOrbit& orbit, std::size_t n);

// Number of admissible words of length n, by exhaustive depth-first
// subdivision with the follower recursion. Throws ResourceError when the
// word count could exceed the enumeration budget.
std::uint64_t count_admissible(const ExactRational& beta, unsigned n);

// Integer-scaled beta-transformation for x = u/D and beta = P/Q.
//
// After n steps the orbit value is T^n x = s / (D Q^n), the follower is
// r_n = t / Q^n, and the depth-n cylinder closure is [L, R] / (D P^n) with
// L = u P^n - s and R = L + D t. Nothing is ever reduced, which keeps each
// step to a handful of multiplications.
class BetaStepper {
 public:
  BetaStepper(const ExactRational& x, const ExactRational& beta);

  void step();

  std::size_t depth() const { return depth_; }
  Digit last_digit() const { return last_digit_; }
  bool orbit_is_zero() const { return s_ == 0; }

  const BigInt& left_numerator() const { return left_; }
  const BigInt& right_numerator() const { return right_; }
  const BigInt& denominator() const { return scale_; }

  // Numerator and denominator of x itself.
  const BigInt& x_numerator() const { return u_; }
  const BigInt& x_denominator() const { return d_; }

  ExactRational orbit_value() const;
  ExactRational follower() const;
  ExactRational left() const { return ExactRational(left_, scale_); }
  ExactRational length() const { return ExactRational(BigInt(right_ - left_), scale_); }

 private:
  BigInt p_, q_, u_, d_;
  BigInt p_pow_;    // P^n
  BigInt q_pow_;    // Q^n
  BigInt d_q_pow_;  // D Q^n
  BigInt u_p_pow_;  // u P^n
  BigInt s_, t_;
  BigInt left_, right_, scale_;
  std::size_t depth_ = 0;
  Digit last_digit_ = 0;
  Digit max_digit_ = 0;
};

}  // namespace lochs
