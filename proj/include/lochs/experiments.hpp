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
#include "lochs/parallel.hpp"

namespace lochs {

// Monte Carlo experiments under Lebesgue measure. A sample is a dyadic
// rational x = u / 2^bits standing for the cell [x, x + 2^-bits]; any
// quantity the cell does not pin down causes the sample to be discarded
// and counted, never guessed.

struct SamplePlan {
  std::uint64_t seed = 1;
  std::size_t count = 1000;
  PrecisionPolicy precision;
  ExactRational beta = ExactRational(10);
};

// ceil(n_max * max(log2 beta, min_bits_per_step)) + 256, at least 256.
unsigned default_input_bits(const ExactRational& beta, std::size_t n_max, double min_bits_per_step = 0.0);

// Throws PlanError unless depth * bits_per_step + guard_bits <= input_bits,
// with bits_per_step = max(log2 beta, min_bits_per_step).
void check_budget(const SamplePlan& plan, std::size_t depth, double min_bits_per_step = 0.0);

// count dyadic rationals in (0,1) with input_bits uniform bits each, drawn
// in order from mt19937_64(seed).
std::vector<ExactRational> sample_points(const SamplePlan& plan);

// 95% Wilson score interval for hits out of trials; {0, 1} when trials = 0.
struct Interval {
  double low = 0;
  double high = 1;
};
Interval wilson_interval(std::size_t hits, std::size_t trials);

// k_n for each sample at each n of a sorted list, computed along a single
// tracker per sample. nullopt marks samples discarded at that n (precision
// horizon, exhausted expansion or terminated orbit); once discarded a sample
// stays discarded for larger n.
struct KnTable {
  ExactRational beta;
  std::vector<std::size_t> n_list;
  std::vector<std::vector<std::optional<std::size_t>>> k;  // [sample][n index]
};
KnTable kn_table(const SamplePlan& plan, const std::vector<std::size_t>& n_list,
                 const Executor& exec = serial_executor());

struct DeviationEntry {
  std::size_t n = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
  std::size_t hits = 0;
  std::size_t used = 0;
  std::size_t discarded = 0;
};

struct DecayFit {
  double slope = 0;
  double intercept = 0;
  std::vector<double> residuals;
  std::size_t points = 0;
};

struct DeviationSeries {
  ExactRational beta;
  double epsilon = 0;
  double lochs_constant = 0;
  std::vector<DeviationEntry> entries;
  // Sum over n of the estimates, rows standing for the gap to the next n.
  double partial_sum = 0;
  // Geometric continuation of the sum past the last row, from the fit.
  std::optional<double> tail_extrapolation;
  std::optional<DecayFit> fit;
  // max(theta1, theta2), when the caller asked for it and eps < a.
  std::optional<double> theory_bound;
};

// Fractions of samples with |k_n/n - a| >= eps, one row per n of the table.
DeviationSeries deviation_from_table(const KnTable& table, double epsilon);

// Throws DomainError for eps <= 0 and PlanError when the largest n does not
// fit the precision budget.
DeviationSeries deviation_measure(const ExactRational& beta, double epsilon,
                                  const std::vector<std::size_t>& n_list, const SamplePlan& plan,
                                  const Executor& exec = serial_executor(), bool with_theory_bound = false);

// Least squares of log(estimate) on n over rows with nonzero estimate.
// Throws FitError with fewer than 3 such rows.
DecayFit decay_fit(const DeviationSeries& series);

struct ZeroRunEntry {
  std::size_t i = 0;
  double estimate = 0;
  double ci_low = 0;
  double ci_high = 0;
  double bound = 0;  // beta^{1-i} / (beta - 1)
  std::size_t hits = 0;
  std::size_t used = 0;
  std::size_t discarded = 0;
};

// Empirical measure of {l_n >= i}. Throws PlanError when n + max(i) digits
// do not fit the budget.
std::vector<ZeroRunEntry> zero_run_tail(const ExactRational& beta, const std::vector<std::size_t>& i_list,
                                        std::size_t n, const SamplePlan& plan,
                                        const Executor& exec = serial_executor());

struct ApproxEntry {
  std::size_t n = 0;
  double fraction_cf_better = 0;    // |x - p_n/q_n| <= x - x_n
  double fraction_beta_better = 0;  // x - x_n <= |x - p_n/q_n|
  double fraction_ties = 0;
  std::size_t cf_better = 0;
  std::size_t beta_better = 0;
  std::size_t ties = 0;
  std::size_t used = 0;
  std::size_t discarded = 0;
};

// Exact comparison of the n-th convergent error with the n-digit beta
// truncation error x - x_n = T^n x / beta^n. The budget also reserves
// 3.5 bits per step so that q_n of the sample is that of its cell.
std::vector<ApproxEntry> approx_compare(const ExactRational& beta, const std::vector<std::size_t>& n_list,
                                        const SamplePlan& plan, const Executor& exec = serial_executor());

// Bits per step reserved by approx_compare's budget.
inline constexpr double kApproxBitsPerStep = 3.5;

struct LochsMean {
  std::size_t n = 0;
  double mean = 0;
  double stddev = 0;
  double lochs_constant = 0;
  std::size_t used = 0;
  std::size_t discarded = 0;
};

LochsMean lochs_mean(const ExactRational& beta, std::size_t n, const SamplePlan& plan,
                     const Executor& exec = serial_executor());

}  // namespace lochs
