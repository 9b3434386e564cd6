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

#include "lochs/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lochs/beta_expand.hpp"
#include "lochs/cf_expand.hpp"
#include "lochs/constants.hpp"
#include "lochs/errors.hpp"
#include "lochs/lochs_core.hpp"
#include "lochs/pressure.hpp"

namespace lochs {

namespace {

double bits_per_step(const ExactRational& beta, double min_bits_per_step) {
  return std::max(log_beta(beta) / std::numbers::ln2, min_bits_per_step);
}

void check_n_list(const std::vector<std::size_t>& n_list) {
  if (n_list.empty()) throw DomainError("empty n list");
  for (std::size_t j = 0; j < n_list.size(); ++j) {
    if (n_list[j] == 0) throw DomainError("n must be positive");
    if (j > 0 && n_list[j] <= n_list[j - 1]) throw DomainError("n list must be strictly increasing");
  }
}

ExactRational cell_width(const SamplePlan& plan) {
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, plan.precision.input_bits);
  return ExactRational(BigInt(1), den);
}

}  // namespace

unsigned default_input_bits(const ExactRational& beta, std::size_t n_max, double min_bits_per_step) {
  if (beta <= ExactRational(1)) throw DomainError("beta must exceed 1");
  return static_cast<unsigned>(std::ceil(n_max * bits_per_step(beta, min_bits_per_step))) + 256;
}

void check_budget(const SamplePlan& plan, std::size_t depth, double min_bits_per_step) {
  plan.precision.validate();
  if (plan.beta <= ExactRational(1)) throw DomainError("beta must exceed 1");
  const double need = depth * bits_per_step(plan.beta, min_bits_per_step) + plan.precision.guard_bits;
  if (need > plan.precision.input_bits) {
    throw PlanError("depth " + std::to_string(depth) + " needs " + std::to_string(static_cast<long>(std::ceil(need))) +
                    " input bits, plan has " + std::to_string(plan.precision.input_bits));
  }
}

std::vector<ExactRational> sample_points(const SamplePlan& plan) {
  plan.precision.validate();
  const unsigned bits = plan.precision.input_bits;
  const unsigned words = (bits + 63) / 64;
  const unsigned top_bits = bits - 64 * (words - 1);
  BigInt den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, bits);
  std::mt19937_64 rng(plan.seed);
  std::vector<ExactRational> out;
  out.reserve(plan.count);
  while (out.size() < plan.count) {
    BigInt u(0);
    for (unsigned w = 0; w < words; ++w) {
      std::uint64_t word = rng();
      unsigned width = 64;
      if (w == 0 && top_bits < 64) {
        word >>= 64 - top_bits;
        width = top_bits;
      }
      u <<= width;
      u += BigInt(static_cast<unsigned long>(word >> 32)) << 32;
      u += static_cast<unsigned long>(word & 0xffffffffULL);
    }
    if (u == 0) continue;
    out.emplace_back(u, den);
  }
  return out;
}

Interval wilson_interval(std::size_t hits, std::size_t trials) {
  if (trials == 0) return {0.0, 1.0};
  constexpr double z = 1.959963984540054;
  const double n = static_cast<double>(trials);
  const double p = hits / n;
  const double denom = 1.0 + z * z / n;
  const double centre = (p + z * z / (2 * n)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n)) / denom;
  Interval ci{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  // Keep the bracket honest at the extremes where rounding bites.
  ci.low = std::min(ci.low, p);
  ci.high = std::max(ci.high, p);
  return ci;
}

KnTable kn_table(const SamplePlan& plan, const std::vector<std::size_t>& n_list, const Executor& exec) {
  check_n_list(n_list);
  check_budget(plan, n_list.back());
  const auto xs = sample_points(plan);
  const ExactRational width = cell_width(plan);
  KnTable table;
  table.beta = plan.beta;
  table.n_list = n_list;
  table.k.assign(xs.size(), std::vector<std::optional<std::size_t>>(n_list.size()));
  exec(xs.size(), [&](std::size_t i) {
    LochsTracker tracker(xs[i], plan.beta, width);
    auto& row = table.k[i];
    for (std::size_t j = 0; j < n_list.size(); ++j) {
      while (tracker.n() < n_list[j] && tracker.advance()) {
      }
      if (tracker.truncated()) break;
      row[j] = tracker.k();
    }
  });
  return table;
}

DeviationSeries deviation_from_table(const KnTable& table, double epsilon) {
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  DeviationSeries s;
  s.beta = table.beta;
  s.epsilon = epsilon;
  s.lochs_constant = lochs_constant(table.beta);
  for (std::size_t j = 0; j < table.n_list.size(); ++j) {
    DeviationEntry e;
    e.n = table.n_list[j];
    for (const auto& row : table.k) {
      if (!row[j]) {
        ++e.discarded;
        continue;
      }
      ++e.used;
      const double ratio = static_cast<double>(*row[j]) / static_cast<double>(e.n);
      if (std::abs(ratio - s.lochs_constant) >= epsilon) ++e.hits;
    }
    e.estimate = e.used ? static_cast<double>(e.hits) / e.used : 0.0;
    const auto ci = wilson_interval(e.hits, e.used);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    s.entries.push_back(e);
  }
  for (std::size_t j = 0; j < s.entries.size(); ++j) {
    std::size_t gap = 1;
    if (j + 1 < s.entries.size()) {
      gap = s.entries[j + 1].n - s.entries[j].n;
    } else if (j > 0) {
      gap = s.entries[j].n - s.entries[j - 1].n;
    }
    s.partial_sum += s.entries[j].estimate * static_cast<double>(gap);
  }
  try {
    s.fit = decay_fit(s);
  } catch (const FitError&) {
    s.fit.reset();
  }
  if (s.fit && s.fit->slope < 0) {
    const double next = static_cast<double>(s.entries.back().n + 1);
    s.tail_extrapolation = std::exp(s.fit->intercept + s.fit->slope * next) / (1.0 - std::exp(s.fit->slope));
  }
  return s;
}

DeviationSeries deviation_measure(const ExactRational& beta, double epsilon, const std::vector<std::size_t>& n_list,
                                  const SamplePlan& plan, const Executor& exec, bool with_theory_bound) {
  if (!(epsilon > 0)) throw DomainError("epsilon must be positive");
  SamplePlan p = plan;
  p.beta = beta;
  auto series = deviation_from_table(kn_table(p, n_list, exec), epsilon);
  if (with_theory_bound && epsilon < series.lochs_constant) {
    const auto rc = rate_constants(beta, epsilon);
    series.theory_bound = std::max(rc.theta1.value, rc.theta2.value);
  }
  return series;
}

DecayFit decay_fit(const DeviationSeries& series) {
  std::vector<double> xs, ys;
  for (const auto& e : series.entries) {
    if (e.estimate > 0) {
      xs.push_back(static_cast<double>(e.n));
      ys.push_back(std::log(e.estimate));
    }
  }
  if (xs.size() < 3) {
    throw FitError("decay fit needs at least 3 rows with nonzero estimate, got " + std::to_string(xs.size()));
  }
  const double m = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0) throw FitError("decay fit needs distinct n values");
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.points = xs.size();
  for (std::size_t i = 0; i < xs.size(); ++i) fit.residuals.push_back(ys[i] - (fit.intercept + fit.slope * xs[i]));
  return fit;
}

std::vector<ZeroRunEntry> zero_run_tail(const ExactRational& beta, const std::vector<std::size_t>& i_list, std::size_t n,
                                        const SamplePlan& plan, const Executor& exec) {
  if (i_list.empty()) throw DomainError("empty i list");
  const std::size_t i_max = *std::max_element(i_list.begin(), i_list.end());
  SamplePlan p = plan;
  p.beta = beta;
  check_budget(p, n + i_max);
  const auto xs = sample_points(p);
  const ExactRational width = cell_width(p);

  // Per sample: the zero-run length seen inside the window (capped at
  // i_max), or nullopt when discarded.
  std::vector<std::optional<std::size_t>> run(xs.size());
  exec(xs.size(), [&](std::size_t s) {
    BetaStepper stepper(xs[s], beta);
    std::size_t zeros = 0;
    bool in_run = true;
    for (std::size_t d = 1; d <= n + i_max; ++d) {
      stepper.step();
      if (stepper.orbit_is_zero()) return;  // terminating expansion
      if (d > n && in_run) {
        if (stepper.last_digit() == 0) {
          ++zeros;
        } else {
          in_run = false;
        }
      }
    }
    if (xs[s] + width > stepper.left() + stepper.length()) return;  // cell leaves J
    run[s] = zeros;
  });

  const double lb = log_beta(beta);
  const double beta_d = beta.to_double();
  std::vector<ZeroRunEntry> out;
  for (std::size_t i : i_list) {
    ZeroRunEntry e;
    e.i = i;
    e.bound = std::exp((1.0 - static_cast<double>(i)) * lb) / (beta_d - 1.0);
    for (const auto& r : run) {
      if (!r) {
        ++e.discarded;
        continue;
      }
      ++e.used;
      if (*r >= i) ++e.hits;
    }
    e.estimate = e.used ? static_cast<double>(e.hits) / e.used : 0.0;
    const auto ci = wilson_interval(e.hits, e.used);
    e.ci_low = ci.low;
    e.ci_high = ci.high;
    out.push_back(e);
  }
  return out;
}

std::vector<ApproxEntry> approx_compare(const ExactRational& beta, const std::vector<std::size_t>& n_list,
                                        const SamplePlan& plan, const Executor& exec) {
  check_n_list(n_list);
  SamplePlan p = plan;
  p.beta = beta;
  check_budget(p, n_list.back(), kApproxBitsPerStep);
  const auto xs = sample_points(p);
  const ExactRational width = cell_width(p);

  // -1: cf strictly better, +1: beta strictly better, 0: tie, nullopt: discarded.
  std::vector<std::vector<std::optional<int>>> verdict(xs.size(), std::vector<std::optional<int>>(n_list.size()));
  exec(xs.size(), [&](std::size_t s) {
    const ExactRational& x = xs[s];
    BetaStepper stepper(x, beta);
    CFExpander cf(x);
    for (std::size_t j = 0; j < n_list.size(); ++j) {
      while (stepper.depth() < n_list[j]) {
        stepper.step();
        if (stepper.orbit_is_zero()) return;
      }
      if (x + width > stepper.left() + stepper.length()) return;
      if (!cf.extend_to(n_list[j])) return;
      const ExactRational beta_err = x - stepper.left();
      const ExactRational cf_err = abs(x - cf.state().convergent(static_cast<long>(n_list[j])));
      const auto c = cf_err <=> beta_err;
      verdict[s][j] = c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
  });

  std::vector<ApproxEntry> out;
  for (std::size_t j = 0; j < n_list.size(); ++j) {
    ApproxEntry e;
    e.n = n_list[j];
    for (const auto& row : verdict) {
      if (!row[j]) {
        ++e.discarded;
        continue;
      }
      ++e.used;
      if (*row[j] <= 0) ++e.cf_better;
      if (*row[j] >= 0) ++e.beta_better;
      if (*row[j] == 0) ++e.ties;
    }
    if (e.used) {
      e.fraction_cf_better = static_cast<double>(e.cf_better) / e.used;
      e.fraction_beta_better = static_cast<double>(e.beta_better) / e.used;
      e.fraction_ties = static_cast<double>(e.ties) / e.used;
    }
    out.push_back(e);
  }
  return out;
}

LochsMean lochs_mean(const ExactRational& beta, std::size_t n, const SamplePlan& plan, const Executor& exec) {
  SamplePlan p = plan;
  p.beta = beta;
  const auto table = kn_table(p, {n}, exec);
  LochsMean out;
  out.n = n;
  out.lochs_constant = lochs_constant(beta);
  double sum = 0, sum_sq = 0;
  for (const auto& row : table.k) {
    if (!row[0]) {
      ++out.discarded;
      continue;
    }
    const double r = static_cast<double>(*row[0]) / static_cast<double>(n);
    ++out.used;
    sum += r;
    sum_sq += r * r;
  }
  if (out.used == 0) throw DegenerateSampleError("every sample was discarded");
  out.mean = sum / out.used;
  if (out.used > 1) {
    const double var = (sum_sq - out.used * out.mean * out.mean) / (out.used - 1);
    out.stddev = std::sqrt(std::max(0.0, var));
  }
  return out;
}

}  // namespace lochs
