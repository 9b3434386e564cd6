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
#include <string_view>
#include <vector>

#include "lochs/beta_expand.hpp"
#include "lochs/cf_expand.hpp"
#include "lochs/numkit.hpp"

namespace lochs {

// One closed-hull containment test: is [beta_low, beta_high] inside
// [cylinder_low, cylinder_high]? A *_touch flag records that the deciding
// comparison was an exact equality of endpoints.
struct ContainmentWitness {
  std::size_t cf_depth = 0;
  ExactRational cylinder_low;
  ExactRational cylinder_high;
  ExactRational beta_low;
  ExactRational beta_high;
  bool low_ok = false;
  bool high_ok = false;
  bool low_touch = false;
  bool high_touch = false;

  bool contained() const { return low_ok && high_ok; }
  // Recomputes both comparisons from the stored endpoints.
  bool verify() const;
};

enum class Truncation {
  none,
  cf_exhausted,      // the rational input's expansion ended while still contained
  precision,         // the sample cell is not inside J_n or I_{k+1}
  orbit_terminated,  // T^j x = 0 for some j <= n
};

std::string_view to_string(Truncation t);

// k_n(x) with the comparisons that establish it. When truncated, k is only
// a lower bound and witness_out may be absent.
struct LochsCertificate {
  std::size_t n = 0;
  std::size_t k = 0;
  ContainmentWitness witness_in;
  std::optional<ContainmentWitness> witness_out;
  bool truncated = false;
  Truncation reason = Truncation::none;
  // An endpoint of J_n equals an endpoint of I_k or I_{k+1} (k >= 1).
  bool boundary_collision = false;
};

// Incremental evaluation of k_1, k_2, ... for one point. The CF depth only
// moves forward.
//
// The optional cell width w says that x stands in for every point of
// [x, x + w]; results are trusted only while that cell sits inside both J_n
// and I_{k_n + 1}, otherwise the tracker reports Truncation::precision.
class LochsTracker {
 public:
  LochsTracker(const ExactRational& x, const ExactRational& beta,
               const ExactRational& cell_width = ExactRational(0));

  // Consumes one more beta digit and updates k. Returns false (and stays
  // put) once truncated.
  bool advance();

  std::size_t n() const { return stepper_.depth(); }
  std::size_t k() const { return k_; }
  bool truncated() const { return reason_ != Truncation::none; }
  Truncation reason() const { return reason_; }

  const BetaStepper& beta_side() const { return stepper_; }
  const CFState& cf_state() const { return cf_.state(); }
  // Makes a_1..a_m available if the expansion allows.
  bool extend_cf(std::size_t m) { return cf_.extend_to(m); }

  // Closed-hull test of the current J_n against I_m; m must be available.
  bool contained_in(std::size_t m);
  ContainmentWitness witness(std::size_t m) const;

  LochsCertificate certificate() const;

 private:
  bool cell_inside_current() const;

  ExactRational x_;
  ExactRational cell_high_;
  bool has_cell_;
  BetaStepper stepper_;
  CFExpander cf_;
  std::size_t k_ = 0;
  Truncation reason_ = Truncation::none;
};

// k_n(x). Throws DegenerateSampleError when the beta orbit of x terminates
// by depth n, DomainError for x outside (0,1) or beta <= 1.
LochsCertificate kn(const ExactRational& x, const ExactRational& beta, std::size_t n,
                    const ExactRational& cell_width = ExactRational(0));

// k_1..k_{n_max} in one pass. Stops after the first truncated entry.
std::vector<LochsCertificate> kn_series(const ExactRational& x, const ExactRational& beta,
                                        std::size_t n_max,
                                        const ExactRational& cell_width = ExactRational(0));

// |J_n| >= 1 / (6 q_{k_n + 3}^2). Throws RangeError when the certificate is
// truncated or q_{k+3} is not available in state.
bool failure_bound_check(const LochsCertificate& cert, const CFState& state, const BetaCylinder& cyl);

}  // namespace lochs
