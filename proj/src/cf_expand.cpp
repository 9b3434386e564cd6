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

#include "lochs/cf_expand.hpp"

#include <string>

#include "lochs/errors.hpp"

namespace lochs {

CFState::CFState() : p_{BigInt(1), BigInt(0)}, q_{BigInt(0), BigInt(1)} {}

const BigInt& CFState::quotient(std::size_t k) const {
  if (k < 1 || k > quotients_.size()) throw RangeError("partial quotient index out of range");
  return quotients_[k - 1];
}

const BigInt& CFState::p(long k) const {
  if (k < -1 || k > static_cast<long>(depth())) throw RangeError("convergent index out of range");
  return p_[static_cast<std::size_t>(k + 1)];
}

const BigInt& CFState::q(long k) const {
  if (k < -1 || k > static_cast<long>(depth())) throw RangeError("convergent index out of range");
  return q_[static_cast<std::size_t>(k + 1)];
}

void CFState::push(const BigInt& a) {
  const std::size_t n = p_.size();
  quotients_.push_back(a);
  p_.push_back(a * p_[n - 1] + p_[n - 2]);
  q_.push_back(a * q_[n - 1] + q_[n - 2]);
}

CFExpander::CFExpander(const ExactRational& x) : num_(x.numerator()), den_(x.denominator()) {
  if (x.sign() <= 0 || x >= ExactRational(1)) {
    throw DomainError("continued fraction input must lie in (0,1), got " + x.to_string());
  }
}

bool CFExpander::extend_to(std::size_t m) {
  while (state_.depth() < m && !state_.exhausted()) {
    // a = floor(den/num); the Gauss map sends num/den to (den mod num)/num.
    BigInt a, r;
    mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), den_.get_mpz_t(), num_.get_mpz_t());
    state_.push(a);
    den_.swap(num_);
    num_.swap(r);
    if (num_ == 0) state_.mark_exhausted();
  }
  return state_.depth() >= m;
}

CFState cf_digits(const ExactRational& x, std::size_t m_max) {
  CFExpander expander(x);
  expander.extend_to(m_max);
  return expander.state();
}

CFCylinder cf_cylinder(const CFState& state, std::size_t m) {
  if (m > state.depth()) {
    throw RangeError("cylinder depth " + std::to_string(m) + " beyond " +
                     std::to_string(state.depth()) + " available quotients");
  }
  const long k = static_cast<long>(m);
  const BigInt& qm = state.q(k);
  const BigInt qsum = qm + state.q(k - 1);
  CFCylinder out;
  out.depth = m;
  out.endpoint_a = ExactRational(state.p(k), qm);
  out.endpoint_b = ExactRational(BigInt(state.p(k) + state.p(k - 1)), qsum);
  out.length = ExactRational(BigInt(1), BigInt(qm * qsum));
  return out;
}

DiophantineGap diophantine_gap(const CFState& state, const ExactRational& x, std::size_t n) {
  if (n > state.depth()) throw RangeError("diophantine_gap needs q_n beyond computed depth");
  const bool terminal = n == state.depth();
  if (terminal && !state.exhausted()) {
    throw RangeError("diophantine_gap needs q_{n+1}; extend the expansion");
  }
  const long k = static_cast<long>(n);
  DiophantineGap out;
  out.gap = abs(x - state.convergent(k));
  const BigInt qn = state.q(k);
  out.upper_bound = ExactRational(BigInt(1), BigInt(qn * qn));
  if (!terminal) {
    const BigInt& qn1 = state.q(k + 1);
    out.lower_bound = ExactRational(BigInt(1), BigInt(2 * qn1 * qn1));
  }
  if (out.gap > out.upper_bound || (out.lower_bound && out.gap < *out.lower_bound)) {
    throw Error("Diophantine bound violated at depth " + std::to_string(n));
  }
  return out;
}

ExactRational evaluate_continued_fraction(const std::vector<BigInt>& quotients, const ExactRational& tail) {
  ExactRational acc = tail;
  for (std::size_t j = quotients.size(); j-- > 0;) {
    acc = ExactRational(1) / (ExactRational(quotients[j]) + acc);
  }
  return acc;
}

}  // namespace lochs
