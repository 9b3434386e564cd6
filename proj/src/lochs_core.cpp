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

#include "lochs/lochs_core.hpp"

#include <string>

#include "lochs/errors.hpp"

namespace lochs {

namespace {

// Sign of a/b - c/d for positive b, d.
int compare_fractions(const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d) {
  return cmp(BigInt(a * d), BigInt(c * b));
}

struct HullEndpoints {
  BigInt low_num, low_den, high_num, high_den;
};

HullEndpoints hull_of(const CFState& state, std::size_t m) {
  const long k = static_cast<long>(m);
  BigInt a_num = state.p(k), a_den = state.q(k);
  BigInt b_num = state.p(k) + state.p(k - 1), b_den = state.q(k) + state.q(k - 1);
  if (m % 2 == 0) return {a_num, a_den, b_num, b_den};
  return {b_num, b_den, a_num, a_den};
}

}  // namespace

std::string_view to_string(Truncation t) {
  switch (t) {
    case Truncation::none: return "none";
    case Truncation::cf_exhausted: return "cf_exhausted";
    case Truncation::precision: return "precision";
    case Truncation::orbit_terminated: return "orbit_terminated";
  }
  return "unknown";
}

bool ContainmentWitness::verify() const {
  return (cylinder_low <= beta_low) == low_ok && (beta_high <= cylinder_high) == high_ok &&
         (cylinder_low == beta_low) == low_touch && (beta_high == cylinder_high) == high_touch;
}

LochsTracker::LochsTracker(const ExactRational& x, const ExactRational& beta,
                           const ExactRational& cell_width)
    : x_(x), cell_high_(x + cell_width), has_cell_(!cell_width.is_zero()), stepper_(x, beta), cf_(x) {
  if (cell_width.sign() < 0) throw DomainError("cell width must be non-negative");
}

bool LochsTracker::contained_in(std::size_t m) {
  const HullEndpoints h = hull_of(cf_.state(), m);
  const BigInt& left = stepper_.left_numerator();
  const BigInt& right = stepper_.right_numerator();
  const BigInt& scale = stepper_.denominator();
  const int low = compare_fractions(h.low_num, h.low_den, left, scale);
  const int high = compare_fractions(right, scale, h.high_num, h.high_den);
  return low <= 0 && high <= 0;
}

ContainmentWitness LochsTracker::witness(std::size_t m) const {
  const HullEndpoints h = hull_of(cf_.state(), m);
  ContainmentWitness w;
  w.cf_depth = m;
  w.cylinder_low = ExactRational(h.low_num, h.low_den);
  w.cylinder_high = ExactRational(h.high_num, h.high_den);
  w.beta_low = stepper_.left();
  w.beta_high = ExactRational(stepper_.right_numerator(), stepper_.denominator());
  w.low_ok = w.cylinder_low <= w.beta_low;
  w.high_ok = w.beta_high <= w.cylinder_high;
  w.low_touch = w.cylinder_low == w.beta_low;
  w.high_touch = w.beta_high == w.cylinder_high;
  return w;
}

bool LochsTracker::cell_inside_current() const {
  if (!has_cell_) return true;
  // Cell inside J_n: x + w <= R / scale (x >= L / scale holds already).
  const mpq_class& hi = cell_high_.raw();
  if (compare_fractions(hi.get_num(), hi.get_den(), stepper_.right_numerator(), stepper_.denominator()) > 0) {
    return false;
  }
  // Cell inside I_{k+1}.
  const HullEndpoints h = hull_of(cf_.state(), k_ + 1);
  const mpq_class& lo = x_.raw();
  return compare_fractions(h.low_num, h.low_den, lo.get_num(), lo.get_den()) <= 0 &&
         compare_fractions(hi.get_num(), hi.get_den(), h.high_num, h.high_den) <= 0;
}

bool LochsTracker::advance() {
  if (truncated()) return false;
  stepper_.step();
  if (stepper_.orbit_is_zero()) {
    reason_ = Truncation::orbit_terminated;
    return false;
  }
  while (true) {
    if (!cf_.extend_to(k_ + 1)) {
      reason_ = Truncation::cf_exhausted;
      return false;
    }
    if (!contained_in(k_ + 1)) break;
    ++k_;
  }
  if (!cell_inside_current()) {
    reason_ = Truncation::precision;
    return false;
  }
  return true;
}

LochsCertificate LochsTracker::certificate() const {
  LochsCertificate cert;
  cert.n = n();
  cert.k = k_;
  cert.truncated = truncated();
  cert.reason = reason_;
  cert.witness_in = witness(k_);
  if (cf_.state().depth() >= k_ + 1) cert.witness_out = witness(k_ + 1);
  auto touches = [](const ContainmentWitness& w) { return w.low_touch || w.high_touch; };
  // Depth 0 is [0, 1] itself and does not count.
  cert.boundary_collision = (k_ >= 1 && touches(cert.witness_in)) || (cert.witness_out && touches(*cert.witness_out));
  return cert;
}

LochsCertificate kn(const ExactRational& x, const ExactRational& beta, std::size_t n,
                    const ExactRational& cell_width) {
  if (n < 1) throw DomainError("n must be at least 1");
  LochsTracker tracker(x, beta, cell_width);
  while (tracker.n() < n && tracker.advance()) {
  }
  if (tracker.reason() == Truncation::orbit_terminated) {
    throw DegenerateSampleError("beta expansion of " + x.to_string() + " terminates at depth " +
                                std::to_string(tracker.n()));
  }
  return tracker.certificate();
}

std::vector<LochsCertificate> kn_series(const ExactRational& x, const ExactRational& beta,
                                        std::size_t n_max, const ExactRational& cell_width) {
  if (n_max < 1) throw DomainError("n_max must be at least 1");
  LochsTracker tracker(x, beta, cell_width);
  std::vector<LochsCertificate> out;
  out.reserve(n_max);
  while (tracker.n() < n_max) {
    tracker.advance();
    if (tracker.reason() == Truncation::orbit_terminated) {
      throw DegenerateSampleError("beta expansion of " + x.to_string() + " terminates at depth " +
                                  std::to_string(tracker.n()));
    }
    out.push_back(tracker.certificate());
    if (tracker.truncated()) break;
  }
  return out;
}

bool failure_bound_check(const LochsCertificate& cert, const CFState& state, const BetaCylinder& cyl) {
  if (cert.truncated) throw RangeError("failure bound needs a non-truncated certificate");
  const std::size_t need = cert.k + 3;
  if (state.depth() < need) {
    throw RangeError("failure bound needs q_" + std::to_string(need) + ", only " +
                     std::to_string(state.depth()) + " quotients available");
  }
  const BigInt& q = state.q(static_cast<long>(need));
  return cyl.length >= ExactRational(BigInt(1), BigInt(6 * q * q));
}

}  // namespace lochs
