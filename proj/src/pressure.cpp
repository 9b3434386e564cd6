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

#include "lochs/pressure.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_sf_zeta.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <random>
#include <string>
#include <utility>

#include "lochs/cf_expand.hpp"
#include "lochs/constants.hpp"
#include "lochs/errors.hpp"

namespace lochs {

namespace {

constexpr unsigned kTailDegree = 8;
constexpr unsigned kMinCompletionCutoff = 32;
constexpr double kRoundingFloor = 1e-11;

// Hurwitz zeta with GSL's abort-on-error handler disabled; underflow is 0.
double hurwitz_zeta(double s, double q) {
  static std::once_flag once;
  std::call_once(once, [] { gsl_set_error_handler_off(); });
  gsl_sf_result result;
  const int status = gsl_sf_hzeta_e(s, q, &result);
  if (status == GSL_EUNDRFLW) return 0.0;
  if (status != GSL_SUCCESS) throw Error(std::string("hurwitz zeta failed: ") + gsl_strerror(status));
  return result.val;
}

// Barycentric interpolation weights on Chebyshev-Lobatto nodes.
std::vector<double> barycentric_row(const std::vector<double>& nodes, double z) {
  const std::size_t n = nodes.size();
  std::vector<double> row(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    if (z == nodes[j]) {
      row[j] = 1.0;
      return row;
    }
  }
  double denom = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    double w = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j + 1 == n) w *= 0.5;
    row[j] = w / (z - nodes[j]);
    denom += row[j];
  }
  for (double& v : row) v /= denom;
  return row;
}

// Solves V c = b for a small dense system by Gaussian elimination with
// partial pivoting. V is row-major n x n; overwritten.
std::vector<double> solve_dense(std::vector<double> v, std::vector<double> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(v[r * n + col]) > std::abs(v[piv * n + col])) piv = r;
    }
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(v[col * n + c], v[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = v[r * n + col] / v[col * n + col];
      for (std::size_t c = col; c < n; ++c) v[r * n + c] -= f * v[col * n + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t r = n; r-- > 0;) {
    double acc = b[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= v[r * n + c] * x[c];
    x[r] = acc / v[r * n + r];
  }
  return x;
}

void check_theta(double theta) {
  if (!(theta > 0.5)) throw DomainError("pressure requires theta > 1/2, got " + std::to_string(theta));
}

// Models are expensive to build (cutoff * nodes^2 weights) and immutable,
// so they are shared per cutoff.
std::shared_ptr<const CylinderSumModel> shared_model(unsigned cutoff) {
  static std::mutex mu;
  static std::map<unsigned, std::shared_ptr<const CylinderSumModel>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[cutoff];
  if (!slot) slot = std::make_shared<const CylinderSumModel>(cutoff);
  return slot;
}

void enumerate_words(double two_theta, unsigned remaining, unsigned cutoff, long double q_prev,
                     long double q, long double& acc) {
  if (remaining == 0) {
    acc += std::pow(q, -static_cast<long double>(two_theta));
    return;
  }
  for (unsigned a = 1; a <= cutoff; ++a) {
    enumerate_words(two_theta, remaining - 1, cutoff, q, a * q + q_prev, acc);
  }
}

void partition_walk(unsigned remaining, unsigned cutoff, const BigInt& q_prev, const BigInt& q,
                    mpq_class& acc, bool with_tails) {
  if (remaining == 0) {
    acc += mpq_class(BigInt(1), BigInt(q * (q + q_prev)));
    return;
  }
  if (with_tails) {
    // of I(w, a) over a > cutoff: endpoints p/q and
    // ((c+1) p + p') / ((c+1) q + q'), length 1 / (q ((c+1) q + q')).
    acc += mpq_class(BigInt(1), BigInt(q * ((cutoff + 1) * q + q_prev)));
  }
  for (unsigned a = 1; a <= cutoff; ++a) {
    partition_walk(remaining - 1, cutoff, q, BigInt(a * q + q_prev), acc, with_tails);
  }
}

}  // namespace

CylinderSumModel::CylinderSumModel(unsigned cutoff, unsigned nodes) : cutoff_(cutoff), nodes_(nodes) {
  if (cutoff < 1) throw DomainError("cutoff must be at least 1");
  if (nodes < 8) throw DomainError("at least 8 interpolation nodes required");
  r_.resize(nodes_);
  for (unsigned j = 0; j < nodes_; ++j) {
    r_[j] = 0.5 * (1.0 - std::cos(std::numbers::pi * j / (nodes_ - 1)));
  }
  r_.front() = 0.0;
  r_.back() = 1.0;

  interp_.resize(static_cast<std::size_t>(cutoff_) * nodes_ * nodes_);
  for (unsigned a = 1; a <= cutoff_; ++a) {
    for (unsigned i = 0; i < nodes_; ++i) {
      const auto row = barycentric_row(r_, 1.0 / (a + r_[i]));
      std::copy(row.begin(), row.end(),
                interp_.begin() + (static_cast<std::size_t>(a - 1) * nodes_ + i) * nodes_);
    }
  }

  // Tail: f on [0, h] as a polynomial in u/h fitted at Chebyshev points.
  tail_h_ = 1.0 / (cutoff_ + 1.0);
  const unsigned m = kTailDegree + 1;
  std::vector<double> vander(m * m);
  std::vector<std::vector<double>> rows(m);
  for (unsigned l = 0; l < m; ++l) {
    const double v = 0.5 * (1.0 - std::cos(std::numbers::pi * l / kTailDegree));
    rows[l] = barycentric_row(r_, v * tail_h_);
    double pw = 1.0;
    for (unsigned k = 0; k < m; ++k) {
      vander[l * m + k] = pw;
      pw *= v;
    }
  }
  tail_fit_.assign(static_cast<std::size_t>(m) * nodes_, 0.0);
  for (unsigned j = 0; j < nodes_; ++j) {
    std::vector<double> rhs(m);
    for (unsigned l = 0; l < m; ++l) rhs[l] = rows[l][j];
    const auto coeff = solve_dense(vander, rhs);
    for (unsigned k = 0; k < m; ++k) tail_fit_[k * nodes_ + j] = coeff[k];
  }
}

std::vector<double> CylinderSumModel::apply_operator(double theta, bool complete_tail) const {
  const std::size_t n = nodes_;
  std::vector<double> op(n * n, 0.0);
  const double two_theta = 2.0 * theta;
  for (std::size_t i = 0; i < n; ++i) {
    double* out = &op[i * n];
    for (unsigned a = 1; a <= cutoff_; ++a) {
      const double w = std::exp(-two_theta * std::log(a + r_[i]));
      if (w == 0.0) break;
      const double* row = &interp_[(static_cast<std::size_t>(a - 1) * n + i) * n];
      for (std::size_t j = 0; j < n; ++j) out[j] += w * row[j];
    }
    if (complete_tail) {
      double h_pow = 1.0;
      for (unsigned k = 0; k <= kTailDegree; ++k) {
        const double z = hurwitz_zeta(two_theta + k, cutoff_ + 1.0 + r_[i]) * h_pow;
        const double* fit = &tail_fit_[k * n];
        for (std::size_t j = 0; j < n; ++j) out[j] += z * fit[j];
        h_pow /= tail_h_;
      }
    }
  }
  return op;
}

std::vector<double> CylinderSumModel::log_sums(double theta, unsigned depth, bool complete_tail) const {
  check_theta(theta);
  const auto op = apply_operator(theta, complete_tail);
  const std::size_t n = nodes_;
  std::vector<double> v(n, 1.0), w(n);
  std::vector<double> out{0.0};
  double log_scale = 0.0;
  for (unsigned k = 1; k <= depth; ++k) {
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += op[i * n + j] * v[j];
      w[i] = acc;
      peak = std::max(peak, std::abs(acc));
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / peak;
    log_scale += std::log(peak);
    out.push_back(log_scale + std::log(v[0]));
  }
  return out;
}

double CylinderSumModel::log_weighted_sum(double theta, unsigned depth, bool complete_tail,
                                          const std::function<double(double)>& terminal) const {
  check_theta(theta);
  const auto op = apply_operator(theta, complete_tail);
  const std::size_t n = nodes_;
  std::vector<double> v(n), w(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = terminal(r_[i]);
  double log_scale = 0.0;
  for (unsigned k = 0; k < depth; ++k) {
    double peak = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += op[i * n + j] * v[j];
      w[i] = acc;
      peak = std::max(peak, std::abs(acc));
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / peak;
    log_scale += std::log(peak);
  }
  return log_scale + std::log(v[0]);
}

PressureEstimate CylinderSumModel::estimate(double theta, unsigned depth, bool complete_tail) const {
  if (depth < 1) throw DomainError("depth must be at least 1");
  const auto sums = log_sums(theta, depth, complete_tail);
  PressureEstimate e;
  e.theta = theta;
  e.depth = depth;
  e.cutoff = cutoff_;
  e.method = "continuant-recursion";
  e.completed_log_sum = sums[depth];
  e.log_sum = sums[depth];
  e.naive_estimate = sums[depth] / depth;
  e.estimate = sums[depth] - sums[depth - 1];
  // At depth 1 there is no shallower ratio; the gap to S_0 = 1 stands in.
  e.previous_estimate = depth >= 2 ? sums[depth - 1] - sums[depth - 2] : 0.0;
  e.error = std::abs(e.estimate - e.previous_estimate) + kRoundingFloor;
  return e;
}

double enumerate_log_sum(double theta, unsigned depth, unsigned cutoff, std::uint64_t budget) {
  check_theta(theta);
  if (std::pow(static_cast<double>(cutoff), depth) > static_cast<double>(budget)) {
    throw ResourceError("enumerating " + std::to_string(cutoff) + "^" + std::to_string(depth) +
                        " words exceeds the budget");
  }
  long double acc = 0.0L;
  // q_{-1} = 0, q_0 = 1.
  enumerate_words(2.0 * theta, depth, cutoff, 0.0L, 1.0L, acc);
  return static_cast<double>(std::log(acc));
}

namespace {

ExactRational exact_length_walk(unsigned depth, unsigned cutoff, bool with_tails) {
  if (cutoff < 1 || depth < 1) throw DomainError("depth and cutoff must be positive");
  if (std::pow(static_cast<double>(cutoff), depth) > 1e5) {
    throw ResourceError("exact cylinder sum exceeds the enumeration budget");
  }
  mpq_class acc(0);
  partition_walk(depth, cutoff, BigInt(0), BigInt(1), acc, with_tails);
  acc.canonicalize();
  return ExactRational(acc);
}

}  // namespace

ExactRational bounded_length_sum(unsigned depth, unsigned cutoff) {
  return exact_length_walk(depth, cutoff, false);
}

ExactRational exact_partition_sum(unsigned depth, unsigned cutoff) {
  return exact_length_walk(depth, cutoff, true);
}

PressureEstimate pressure_cylinder_sum(double theta, const PressureOptions& options) {
  check_theta(theta);
  if (options.depth < 1 || options.depth > 10) {
    throw ResourceError("depth must lie in [1, 10], got " + std::to_string(options.depth));
  }
  if (options.cutoff < 1 || options.cutoff > 1000) {
    throw ResourceError("cutoff must lie in [1, 1000], got " + std::to_string(options.cutoff));
  }
  const unsigned depth = options.depth;
  const bool small = std::pow(static_cast<double>(options.cutoff), depth) <= 1e6;

  PressureEstimate out;
  if (small) {
    out.theta = theta;
    out.depth = depth;
    out.cutoff = options.cutoff;
    out.method = "enumeration";
    out.log_sum = enumerate_log_sum(theta, depth, options.cutoff);
    const double prev = depth >= 2 ? enumerate_log_sum(theta, depth - 1, options.cutoff) : 0.0;
    const double prev2 = depth >= 3 ? enumerate_log_sum(theta, depth - 2, options.cutoff) : 0.0;
    out.estimate = out.log_sum - prev;
    out.previous_estimate = depth >= 2 ? prev - prev2 : 0.0;
  } else {
    out = shared_model(options.cutoff)->estimate(theta, depth, false);
  }
  out.naive_estimate = out.log_sum / depth;
  out.completed_log_sum = out.log_sum;
  out.tail_bound = 0.0;

  if (options.complete_tail) {
    const unsigned explicit_cutoff = std::max(options.cutoff, kMinCompletionCutoff);
    const auto full = shared_model(explicit_cutoff)->estimate(theta, depth, true);
    out.completed_log_sum = full.completed_log_sum;
    out.tail_bound = std::max(0.0, full.completed_log_sum - out.log_sum);
    out.estimate = full.estimate;
    out.previous_estimate = full.previous_estimate;
  }
  out.error = std::abs(out.estimate - out.previous_estimate) + kRoundingFloor;
  return out;
}

MomentEstimate pressure_mc(double t, unsigned depth, std::size_t samples, std::uint64_t seed,
                           unsigned bootstrap_rounds) {
  if (!(t < 0.5)) throw DomainError("moment E(q_n^{2t}) diverges for t >= 1/2");
  if (samples < 1000) throw DomainError("pressure_mc needs at least 1000 samples");
  if (depth < 1 || depth > 10) throw ResourceError("depth must lie in [1, 10]");

  std::mt19937_64 rng(seed);
  constexpr unsigned kWords = 4;  // 256 random bits per point
  BigInt denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 2, 64 * kWords);
  std::vector<double> values;
  values.reserve(samples);
  while (values.size() < samples) {
    BigInt u(0);
    for (unsigned w = 0; w < kWords; ++w) {
      u <<= 64;
      const std::uint64_t word = rng();
      u += BigInt(static_cast<unsigned long>(word >> 32)) << 32;
      u += static_cast<unsigned long>(word & 0xffffffffULL);
    }
    if (u == 0) continue;
    CFExpander cf(ExactRational(u, denom));
    if (!cf.extend_to(depth)) continue;  // rational ran out of quotients
    const double log_q = log_of(cf.state().q(static_cast<long>(depth)));
    values.push_back(std::exp(2.0 * t * log_q));
  }

  auto log_mean = [&](const std::vector<double>& v) {
    long double acc = 0.0L;
    for (double x : v) acc += x;
    return static_cast<double>(std::log(acc / v.size())) / depth;
  };

  MomentEstimate out;
  out.t = t;
  out.depth = depth;
  out.samples = samples;
  out.estimate = log_mean(values);

  std::mt19937_64 boot(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_int_distribution<std::size_t> pick(0, samples - 1);
  std::vector<double> stats;
  stats.reserve(bootstrap_rounds);
  std::vector<double> resample(samples);
  for (unsigned b = 0; b < bootstrap_rounds; ++b) {
    for (auto& x : resample) x = values[pick(boot)];
    stats.push_back(log_mean(resample));
  }
  std::sort(stats.begin(), stats.end());
  out.ci_low = stats[static_cast<std::size_t>(0.025 * (stats.size() - 1))];
  out.ci_high = stats[static_cast<std::size_t>(0.975 * (stats.size() - 1))];

  const auto model = shared_model(1000);
  out.reference = model->log_weighted_sum(1.0 - t, depth, true, [](double r) { return 1.0 / (1.0 + r); }) /
                  depth;
  const double log_s = model->log_sums(1.0 - t, depth, true)[depth];
  out.sandwich_low = (log_s - std::numbers::ln2) / depth;
  out.sandwich_high = log_s / depth;
  return out;
}

namespace {

// P(theta) at fixed depth and cutoff with memoisation.
class PressureFunction {
 public:
  explicit PressureFunction(const PressureOptions& options)
      : options_(options), model_(shared_model(std::max(options.cutoff, kMinCompletionCutoff))) {
    if (options.depth < 2 || options.depth > 10) throw ResourceError("depth must lie in [2, 10]");
  }

  std::pair<double, double> operator()(double theta) {
    auto it = memo_.find(theta);
    if (it != memo_.end()) return it->second;
    const auto e = model_->estimate(theta, options_.depth, options_.complete_tail);
    return memo_[theta] = {e.estimate, e.error};
  }

 private:
  PressureOptions options_;
  std::shared_ptr<const CylinderSumModel> model_;
  std::map<double, std::pair<double, double>> memo_;
};

using Objective = std::function<std::pair<double, double>(double)>;

std::vector<double> log_grid(double lo, double hi, unsigned points) {
  std::vector<double> g(points);
  const double l0 = std::log(lo), l1 = std::log(hi);
  for (unsigned i = 0; i < points; ++i) g[i] = std::exp(l0 + (l1 - l0) * i / (points - 1));
  return g;
}

// Global grid search followed by golden-section refinement inside the
// bracket around the best grid point.
RateValue minimize(const Objective& f, const std::vector<double>& grid, double lo, double hi) {
  std::size_t best = 0;
  double best_val = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double v = f(grid[i]).first;
    if (i == 0 || v < best_val) {
      best = i;
      best_val = v;
    }
  }
  double a = best == 0 ? lo : grid[best - 1];
  double b = best + 1 == grid.size() ? hi : grid[best + 1];
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = f(c).first, fd = f(d).first;
  for (int it = 0; it < 60 && (b - a) > 1e-10 * (1.0 + std::abs(a)); ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c).first;
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d).first;
    }
  }
  double t = 0.5 * (a + b);
  auto [val, err] = f(t);
  if (best_val < val) {
    t = grid[best];
    std::tie(val, err) = f(t);
  }
  RateValue out;
  out.value = val;
  out.error = err;
  out.t_argmin = t;
  return out;
}

void settle_sign(RateValue& v, bool claimed) {
  if (!claimed) {
    v.status = SignStatus::not_claimed;
  } else {
    v.status = v.value + v.error < 0.0 ? SignStatus::certified_negative : SignStatus::indeterminate;
  }
}

constexpr unsigned kGridPoints = 80;
constexpr double kTMin = 1e-4;
constexpr double kTMaxPositive = 50.0;
constexpr double kTMaxHalf = 0.49;

}  // namespace

std::string to_string(SignStatus s) {
  switch (s) {
    case SignStatus::certified_negative: return "certified_negative";
    case SignStatus::indeterminate: return "indeterminate";
    case SignStatus::not_claimed: return "not_claimed";
  }
  return "unknown";
}

DerivativeEstimate pressure_derivative_at_1(const PressureOptions& options) {
  PressureFunction p(options);
  const double h = 0.04;
  auto central = [&](double step) {
    auto [plus, e_plus] = p(1.0 + step);
    auto [minus, e_minus] = p(1.0 - step);
    return std::pair{(plus - minus) / (2.0 * step), (e_plus + e_minus) / (2.0 * step)};
  };
  const auto [d1, e1] = central(h);
  const auto [d2, e2] = central(h / 2);
  DerivativeEstimate out;
  out.step = h / 2;
  out.value = (4.0 * d2 - d1) / 3.0;
  out.error = std::abs(out.value - d2) + e2 + e1 / 3.0;
  const double mid = p(1.0).first;
  out.second_difference = (p(1.0 + h).first + p(1.0 - h).first - 2.0 * mid) / (h * h);
  return out;
}

RateConstants rate_constants(const ExactRational& beta, double epsilon, const PressureOptions& options) {
  if (beta <= ExactRational(1)) throw DomainError("beta must exceed 1");
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  RateConstants rc;
  rc.beta = beta;
  rc.epsilon = epsilon;
  rc.log_beta = log_beta(beta);
  rc.a = lochs_constant(beta);
  if (!(epsilon < rc.a)) {
    throw DomainError("theta2 requires epsilon < a = " + std::to_string(rc.a));
  }
  const double lb = rc.log_beta;
  const double a = rc.a;
  PressureFunction p(options);

  const auto positive = log_grid(kTMin, kTMaxPositive, kGridPoints);
  const auto half = log_grid(kTMin, kTMaxHalf, kGridPoints);
  rc.grid_points = kGridPoints;

  const Objective f1 = [&](double t) {
    auto [pv, pe] = p(t + 1.0);
    return std::pair{(t * lb + (a + epsilon) * pv) / (t + 1.0), (a + epsilon) * pe / (t + 1.0)};
  };
  const Objective f2 = [&](double t) {
    auto [pv, pe] = p(1.0 - t);
    return std::pair{-t * lb + (a - epsilon) * pv, (a - epsilon) * pe};
  };
  const Objective f_theta = [&](double t) {
    auto [pv, pe] = p(1.0 - t);
    return std::pair{-t * lb + pv, pe};
  };
  const Objective f_star = [&](double t) {
    auto [pv, pe] = p(t + 1.0);
    return std::pair{(t * lb + pv) / (t + 1.0), pe / (t + 1.0)};
  };

  rc.theta1 = minimize(f1, positive, 0.0, kTMaxPositive);
  rc.theta2 = minimize(f2, half, 0.0, 0.499);
  rc.theta = minimize(f_theta, half, 0.0, 0.499);
  rc.theta_star = minimize(f_star, positive, 0.0, kTMaxPositive);

  rc.theta1.objective_at_zero = f1(0.0).first;
  rc.theta2.objective_at_zero = f2(0.0).first;
  rc.theta.objective_at_zero = f_theta(0.0).first;
  rc.theta_star.objective_at_zero = f_star(0.0).first;

  const double critical = critical_log_beta();
  settle_sign(rc.theta1, true);
  settle_sign(rc.theta2, true);
  settle_sign(rc.theta, lb > critical);
  settle_sign(rc.theta_star, lb < critical);

  if (lb > critical) {
    rc.theta_lower_bound_holds = rc.theta.value + rc.theta.error > -lb / 2.0;
  }
  if (lb >= golden_lyapunov()) {
    rc.theta_star_lower_bound_holds = rc.theta_star.value + rc.theta_star.error >= -lb;
  }
  return rc;
}

TauEstimate lyapunov_tau(double gamma, const PressureOptions& options) {
  const double floor_gamma = golden_lyapunov();
  if (!(gamma >= floor_gamma)) {
    throw DomainError("tau(gamma) needs gamma >= 2 log phi = " + std::to_string(floor_gamma));
  }
  PressureFunction p(options);
  std::vector<double> grid = log_grid(1e-3, kTMaxPositive, kGridPoints);
  for (double& t : grid) t += 0.5;
  const Objective f = [&](double t) {
    auto [pv, pe] = p(t);
    return std::pair{(t * gamma + pv) / gamma, pe / gamma};
  };
  const RateValue m = minimize(f, grid, 0.5 + 1e-4, 0.5 + kTMaxPositive);
  TauEstimate out;
  out.gamma = gamma;
  out.tau = m.value;
  out.t_argmin = m.t_argmin;
  out.error = m.error;
  out.at_grid_boundary = m.t_argmin >= grid[grid.size() - 2];
  return out;
}

}  // namespace lochs
