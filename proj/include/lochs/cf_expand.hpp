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
#include <optional>
#include <vector>

#include "lochs/numkit.hpp"

namespace lochs {

// Partial quotients a_1..a_m of a point in (0,1) with its convergents.
//
// Convergents are indexed from -1: p(-1)=1, q(-1)=0, p(0)=0, q(0)=1 and
// p(k) = a_k p(k-1) + p(k-2), likewise for q.
class CFState {
 public:
  CFState();

  std::size_t depth() const { return quotients_.size(); }
  // Set once the Gauss orbit of the (rational) input reached 0.
  bool exhausted() const { return exhausted_; }

  const std::vector<BigInt>& quotients() const { return quotients_; }
  const BigInt& quotient(std::size_t k) const;  // a_k, 1-based
  const BigInt& p(long k) const;
  const BigInt& q(long k) const;
  ExactRational convergent(long k) const { return ExactRational(p(k), q(k)); }

  void push(const BigInt& a);
  void mark_exhausted() { exhausted_ = true; }

 private:
  std::vector<BigInt> quotients_;
  std::vector<BigInt> p_;  // p_[k + 1] = p(k)
  std::vector<BigInt> q_;
  bool exhausted_ = false;
};

// Lazily runs the Gauss map on a rational x in (0,1).
class CFExpander {
 public:
  explicit CFExpander(const ExactRational& x);

  // Extends to depth m if the expansion allows; returns depth() >= m.
  bool extend_to(std::size_t m);

  const CFState& state() const { return state_; }

 private:
  CFState state_;
  BigInt num_, den_;  // current Gauss orbit point num_/den_
};

// Closure of the depth-m cylinder I(a_1..a_m). endpoint_a = p_m/q_m and
// endpoint_b = (p_m + p_{m-1}) / (q_m + q_{m-1}); endpoint_a is the left one
// exactly when m is even.
struct CFCylinder {
  std::size_t depth = 0;
  ExactRational endpoint_a;
  ExactRational endpoint_b;
  ExactRational length;

  const ExactRational& lower() const { return depth % 2 == 0 ? endpoint_a : endpoint_b; }
  const ExactRational& upper() const { return depth % 2 == 0 ? endpoint_b : endpoint_a; }
};

// Throws DomainError unless 0 < x < 1.
CFState cf_digits(const ExactRational& x, std::size_t m_max);

// Throws RangeError when m exceeds state.depth().
CFCylinder cf_cylinder(const CFState& state, std::size_t m);

// |x - p_n/q_n| with its bounds 1/(2 q_{n+1}^2) <= gap <= 1/q_n^2. The lower
// bound is absent when the expansion terminated at depth n.
struct DiophantineGap {
  ExactRational gap;
  ExactRational upper_bound;
  std::optional<ExactRational> lower_bound;
};

// Throws RangeError when q_{n+1} is needed but not computed, and Error if
// the computed gap violates its bounds.
DiophantineGap diophantine_gap(const CFState& state, const ExactRational& x, std::size_t n);

// Value of [a_1, ..., a_m + tail], i.e. the point whose Gauss orbit after m
// steps is tail. Used to invert an expansion.
ExactRational evaluate_continued_fraction(const std::vector<BigInt>& quotients, const ExactRational& tail);

}  // namespace lochs
