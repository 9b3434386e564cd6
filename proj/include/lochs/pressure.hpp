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
#include <functional>
#include <string>
#include <vector>

#include "lochs/numkit.hpp"

namespace lochs {

// Diophantine pressure of the Gauss map,
//
//   P(theta) = lim (1/n) log S_n(theta),  S_n = sum over a_1..a_n of q_n^{-2 theta}.
//
// Cylinder sums are built from the continuant recursion. Writing
// r_k = q_{k-1}/q_k = 1/(a_k + r_{k-1}) with r_0 = 0 gives
// q_n^{-2 theta} = prod_k r_k^{2 theta}, hence S_n = (L^n 1)(0) for
//
//   (L f)(r) = sum_{a=1}^{A} (a + r)^{-2 theta} f(1 / (a + r)).
//
// Each L^k 1 is analytic on a neighbourhood of [0,1] (nearest singularity at
// r = -1), so carrying it on Chebyshev-Lobatto nodes reproduces the word sum
// to rounding error. The contribution of a > A can be added analytically
// from Hurwitz zeta values, which "completes" the truncated sum.

struct PressureOptions {
  unsigned depth = 10;
  unsigned cutoff = 1000;
  bool complete_tail = true;
};

struct PressureEstimate {
  double theta = 0;
  unsigned depth = 0;
  unsigned cutoff = 0;
  std::string method;  // "enumeration" or "continuant-recursion"
  // log of the sum over words with every a_i <= cutoff.
  double log_sum = 0;
  // log_sum / depth.
  double naive_estimate = 0;
  // log of the sum over all words (a_i unrestricted); equals log_sum when
  // tail completion is off.
  double completed_log_sum = 0;
  // completed_log_sum - log_sum: the log-mass carried by words with some
  // a_i > cutoff.
  double tail_bound = 0;
  // log(S_n / S_{n-1}), the one-step growth rate at the requested depth.
  double estimate = 0;
  // Same quantity one level shallower.
  double previous_estimate = 0;
  // |estimate - previous_estimate| plus a rounding floor.
  double error = 0;
};

// Word-sum engine on a fixed node set and cutoff. Immutable after
// construction; safe to share between threads.
class CylinderSumModel {
 public:
  explicit CylinderSumModel(unsigned cutoff = 1000, unsigned nodes = 32);

  unsigned cutoff() const { return cutoff_; }

  // log S_k for k = 0..depth (S_0 = 1). With complete_tail the sums run
  // over all a_i >= 1.
  std::vector<double> log_sums(double theta, unsigned depth, bool complete_tail) const;

  // log sum over words of q_n^{-2 theta} g(q_{n-1}/q_n); g must be smooth
  // on [0,1].
  double log_weighted_sum(double theta, unsigned depth, bool complete_tail,
                          const std::function<double(double)>& terminal) const;

  PressureEstimate estimate(double theta, unsigned depth, bool complete_tail = true) const;

 private:
  std::vector<double> apply_operator(double theta, bool complete_tail) const;

  unsigned cutoff_;
  unsigned nodes_;
  std::vector<double> r_;        // nodes on [0,1], r_[0] = 0
  std::vector<double> interp_;   // [a-1][i][j]: weight of node j at 1/(a + r_i)
  std::vector<double> tail_fit_; // [k][j]: monomial coefficient k in u/h from node j
  double tail_h_ = 0;            // 1/(cutoff + 1)
};

// Brute-force sum over all words with a_i <= cutoff. Throws ResourceError
// when cutoff^depth exceeds budget.
double enumerate_log_sum(double theta, unsigned depth, unsigned cutoff,
                         std::uint64_t budget = 50'000'000);

// Exact sum of |I(a_1..a_n)| = 1/(q_n (q_n + q_{n-1})) over words with
// every a_i <= cutoff. Increases with cutoff towards 1.
ExactRational bounded_length_sum(unsigned depth, unsigned cutoff);

// Exact check of the partition identity: the lengths of depth-n cylinders
// with every a_i <= cutoff, plus the exact lengths of the unions
// I(a_1..a_{j-1}, a_j > cutoff) for j <= n, sum to 1.
ExactRational exact_partition_sum(unsigned depth, unsigned cutoff);

// P(theta) estimate. Throws DomainError for theta <= 1/2 and ResourceError
// for depth outside [1, 10] or cutoff outside [1, 1000]. Small problems
// (cutoff^depth <= 10^6, no tail completion) are enumerated directly.
PressureEstimate pressure_cylinder_sum(double theta, const PressureOptions& options = {});

// Monte Carlo estimate of (1/n) log E(q_n^{2t}) under Lebesgue measure.
struct MomentEstimate {
  double t = 0;
  unsigned depth = 0;
  std::size_t samples = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
  // Deterministic value of the same expectation from the cylinder
  // recursion: sum over words of q_n^{2t} |I(a_1..a_n)|.
  double reference = 0;
  // (1/n) log S_n(1 - t) and the sandwich implied by 1/(2q^2) <= |I| <= 1/q^2:
  // (log S_n - log 2)/n <= (1/n) log E(q_n^{2t}) <= log S_n / n.
  double sandwich_low = 0;
  double sandwich_high = 0;
};

// Throws DomainError for t >= 1/2 or samples < 1000.
MomentEstimate pressure_mc(double t, unsigned depth, std::size_t samples, std::uint64_t seed,
                           unsigned bootstrap_rounds = 400);

struct DerivativeEstimate {
  double value = 0;
  double error = 0;
  double step = 0;
  double second_difference = 0;  // (P(1+h) + P(1-h) - 2P(1)) / h^2
};

// Central difference of the completed estimator at theta = 1, refined by
// one Richardson step; error is the Richardson correction plus propagated
// estimator error.
DerivativeEstimate pressure_derivative_at_1(const PressureOptions& options = {});

enum class SignStatus { certified_negative, indeterminate, not_claimed };
std::string to_string(SignStatus s);

// inf of one objective over its t-range.
struct RateValue {
  double value = 0;
  double error = 0;
  double t_argmin = 0;
  double objective_at_zero = 0;  // boundary value at t = 0 (should be ~0)
  SignStatus status = SignStatus::not_claimed;
};

struct RateConstants {
  ExactRational beta;
  double epsilon = 0;
  double log_beta = 0;
  double a = 0;  // Lochs constant
  RateValue theta1;      // inf_{t>0} (t log b + (a+eps) P(t+1)) / (t+1)
  RateValue theta2;      // inf_{0<t<1/2} -t log b + (a-eps) P(1-t)
  RateValue theta;       // inf_{0<t<1/2} -t log b + P(1-t)
  RateValue theta_star;  // inf_{t>0} (t log b + P(t+1)) / (t+1)
  bool theta_lower_bound_holds = true;       // theta > -(log b)/2 when claimed
  bool theta_star_lower_bound_holds = true;  // theta* >= -log b when log b >= 2 log phi
  unsigned grid_points = 0;
};

// Throws DomainError for beta <= 1, eps <= 0, or eps >= a. Signs that the
// error bars cannot separate from 0 are reported as indeterminate, never
// guessed.
RateConstants rate_constants(const ExactRational& beta, double epsilon,
                             const PressureOptions& options = {});

struct TauEstimate {
  double gamma = 0;
  double tau = 0;
  double t_argmin = 0;
  double error = 0;
  bool at_grid_boundary = false;
};

// tau(gamma) = inf_{t > 1/2} (t gamma + P(t)) / gamma. Throws DomainError
// for gamma < 2 log phi.
TauEstimate lyapunov_tau(double gamma, const PressureOptions& options = {});

}  // namespace lochs
