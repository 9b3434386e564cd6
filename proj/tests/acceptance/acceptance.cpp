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


// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lochs/beta_expand.hpp"
#include "lochs/cf_expand.hpp"
#include "lochs/cli.hpp"
#include "lochs/constants.hpp"
#include "lochs/errors.hpp"
#include "lochs/experiments.hpp"
#include "lochs/fixtures.hpp"
#include "lochs/lochs_core.hpp"
#include "lochs/pressure.hpp"
#include "test_support.hpp"

using lochs::BigInt;
using lochs::ExactRational;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

int report(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("criterion %d %s: %s (%s) [%.1fs]\n", id, title.c_str(), v.pass ? "PASS" : "FAIL",
              v.detail.str().c_str(), secs);
  std::fflush(stdout);
  return v.pass ? 0 : 1;
}

// ---- independent oracles --------------------------------------------------

// Greedy digits, orbit and follower, without the library stepper.
struct OwnBeta {
  std::vector<long> digits;
  ExactRational left;
  ExactRational length;
  bool terminated = false;
};

OwnBeta own_beta(const ExactRational& x, const ExactRational& beta, std::size_t n) {
  OwnBeta out;
  ExactRational y = x, r(1), scale(1), left(0);
  for (std::size_t k = 0; k < n; ++k) {
    const ExactRational by = beta * y;
    const BigInt e = lochs::floor_ratio(by);
    const ExactRational ed(e);
    y = by - ed;
    r = std::min(beta * r - ed, ExactRational(1));
    scale = scale / beta;
    left = left + ed * scale;
    out.digits.push_back(e.get_si());
    if (y.is_zero()) out.terminated = true;
  }
  out.left = left;
  out.length = r * scale;
  return out;
}

std::vector<BigInt> gauss_quotients(ExactRational y, std::size_t limit) {
  std::vector<BigInt> out;
  while (!y.is_zero() && out.size() < limit) {
    const ExactRational inv = ExactRational(1) / y;
    const BigInt a = lochs::floor_ratio(inv);
    out.push_back(a);
    y = inv - ExactRational(a);
  }
  return out;
}

// q_0..q_m from quotients; p likewise.
void continuants(const std::vector<BigInt>& a, std::vector<BigInt>& p, std::vector<BigInt>& q) {
  p = {BigInt(0)};
  q = {BigInt(1)};
  BigInt pm(1), qm(0);
  for (const auto& ai : a) {
    BigInt pn = ai * p.back() + pm;
    BigInt qn = ai * q.back() + qm;
    pm = p.back();
    qm = q.back();
    p.push_back(pn);
    q.push_back(qn);
  }
}

ExactRational random_beta(std::mt19937_64& rng) {
  const long den = 1 + static_cast<long>(rng() % 1000);
  const long num = den + 1 + static_cast<long>(rng() % (20 * den));
  return ExactRational(num, den);
}

// Walks every admissible word of length n by its follower r (the image of
// the cylinder is [0, r)). Returns the word count; adds
// sum_w beta^{-n} min(r_w, beta^{-i}) to measure for each i <= i_max.
std::uint64_t walk_followers(const ExactRational& beta, unsigned n, const ExactRational& r, unsigned depth,
                             std::vector<ExactRational>& measure, const std::vector<ExactRational>& inv_pow) {
  if (depth == n) {
    for (std::size_t i = 0; i < measure.size(); ++i) {
      measure[i] += inv_pow[n] * std::min(r, inv_pow[i]);
    }
    return 1;
  }
  std::uint64_t total = 0;
  for (long e = 0; ExactRational(e) < beta * r; ++e) {
    const ExactRational next = std::min(beta * r - ExactRational(e), ExactRational(1));
    total += walk_followers(beta, n, next, depth + 1, measure, inv_pow);
  }
  return total;
}

lochs::SamplePlan plan_of(const ExactRational& beta, std::size_t count, unsigned bits) {
  lochs::SamplePlan p;
  p.seed = 1;
  p.count = count;
  p.beta = beta;
  p.precision.input_bits = bits;
  p.precision.guard_bits = 64;
  return p;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---- criteria ---------------------------------------------------------------

void lochs_mean_check(Verdict& v) {
  struct Case {
    ExactRational beta;
    double lo, hi;
  };
  for (const auto& c : {Case{ExactRational(10), 0.960, 0.980}, Case{ExactRational(2), 0.282, 0.302}}) {
    const auto m = lochs::lochs_mean(c.beta, 500, plan_of(c.beta, 200, 4096));
    v.detail << "beta=" << c.beta.to_string() << " mean=" << fmt(m.mean) << " a=" << fmt(m.lochs_constant)
             << " used=" << m.used << "; ";
    v.require(m.mean >= c.lo && m.mean <= c.hi, "mean outside window for beta=" + c.beta.to_string());
  }
}

void pi_oracle_check(Verdict& v) {
  for (const char* threads : {"1", "4"}) {
    std::ostringstream out, err;
    const int code = lochs::cli::main_entry(
        {"lochs", "--json", "--threads", threads, "kn", "--beta", "10", "--fixture", "pi", "--n", "1000"}, out, err);
    v.require(code == 0, std::string("exit code with threads=") + threads);
    if (code != 0) continue;
    const auto doc = nlohmann::json::parse(out.str());
    const long k = doc["result"]["k"].get<long>();
    v.detail << "threads=" << threads << " k=" << k << "; ";
    v.require(k == 968, "k != 968");
  }
  // Common quotients of the endpoints of J_1000, expanded independently.
  const auto fx = lochs::load_fixture("pi");
  BigInt den(1);
  for (int i = 0; i < 1000; ++i) den *= 10;
  const std::string digits(lochs::pi_fixture_digits().substr(0, 1000));
  const ExactRational low(BigInt(digits, 10), den);
  const auto a = gauss_quotients(low, 2000);
  const auto b = gauss_quotients(low + ExactRational(BigInt(1), den), 2000);
  std::size_t k = 0;
  while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
  v.detail << "endpoint oracle k=" << k;
  v.require(k == 968, "endpoint oracle != 968");
}

void normalization_check(Verdict& v) {
  for (unsigned n = 1; n <= 3; ++n) {
    for (unsigned cutoff : {1u, 10u, 40u}) {
      v.require(lochs::exact_partition_sum(n, cutoff) == ExactRational(1),
                "partition sum != 1 at n=" + std::to_string(n) + " A=" + std::to_string(cutoff));
    }
  }
  const auto e = lochs::pressure_cylinder_sum(1.0, {8, 100, true});
  v.detail << "partition sums exact for n=1..3; P(1)=" << fmt(e.estimate) << " +- " << fmt(e.error)
           << " naive=" << fmt(e.naive_estimate);
  v.require(std::abs(e.estimate) <= 0.02, "|P(1)| > 0.02");
}

void derivative_check(Verdict& v) {
  const auto d = lochs::pressure_derivative_at_1();
  const double want = -2.37314;
  v.detail << "P'(1)=" << fmt(d.value) << " +- " << fmt(d.error) << "; ";
  v.require(std::abs(d.value - want) <= 0.05 * std::abs(want), "derivative outside 5%");
  std::vector<lochs::PressureEstimate> p;
  for (int i = 0; i <= 24; ++i) p.push_back(lochs::pressure_cylinder_sum(0.6 + 0.1 * i));
  double worst = 1e300;
  for (std::size_t i = 1; i < p.size(); ++i) v.require(p[i].estimate < p[i - 1].estimate, "not decreasing");
  for (std::size_t i = 1; i + 1 < p.size(); ++i) {
    const double second = p[i + 1].estimate + p[i - 1].estimate - 2 * p[i].estimate;
    worst = std::min(worst, second);
    v.require(second >= -(p[i - 1].error + 2 * p[i].error + p[i + 1].error), "not convex");
  }
  v.detail << "grid 0.6..3 decreasing, min second difference " << fmt(worst);
}

void rate_check(Verdict& v) {
  for (long b : {2L, 10L, 20L}) {
    const auto rc = lochs::rate_constants(ExactRational(b), 0.05);
    v.detail << "beta=" << b << " theta1=" << fmt(rc.theta1.value) << " theta2=" << fmt(rc.theta2.value)
             << " theta*=" << fmt(rc.theta_star.value) << "; ";
    const std::string tag = " beta=" + std::to_string(b);
    v.require(rc.theta1.status == lochs::SignStatus::certified_negative, "theta1" + tag);
    v.require(rc.theta2.status == lochs::SignStatus::certified_negative, "theta2" + tag);
    if (b != 20) v.require(rc.theta_star.status == lochs::SignStatus::certified_negative, "theta*" + tag);
    if (b == 20) {
      v.detail << "theta=" << fmt(rc.theta.value) << "; ";
      v.require(rc.theta.status == lochs::SignStatus::certified_negative, "theta" + tag);
      v.require(rc.theta.value > -std::log(20.0) / 2 && rc.theta_lower_bound_holds, "theta lower bound");
      const double g = std::log(20.0);
      const auto tau = lochs::lyapunov_tau(g);
      const double via_tau = (tau.tau - 1) * g;
      const double joint = g * tau.error + rc.theta.error;
      v.detail << "(tau-1)log b=" << fmt(via_tau) << " joint error " << fmt(joint);
      v.require(std::abs(via_tau - rc.theta.value) <= joint, "tau cross-check");
    }
  }
}

void deviation_check(Verdict& v) {
  const ExactRational beta(10);
  const std::vector<std::size_t> n_list{100, 200, 300, 400, 500, 600};
  const auto plan = plan_of(beta, 2000, lochs::default_input_bits(beta, 600));
  const auto s = lochs::deviation_measure(beta, 0.1, n_list, plan);
  for (const auto& e : s.entries) v.detail << e.n << ":" << fmt(e.estimate) << " ";
  for (std::size_t j = 1; j < s.entries.size(); ++j) {
    const auto& a = s.entries[j - 1];
    const auto& b = s.entries[j];
    v.require(b.estimate <= a.estimate || b.ci_low <= a.ci_high, "increase beyond CI at n=" + std::to_string(b.n));
  }
  v.require(s.fit.has_value(), "no fit");
  if (s.fit) {
    v.detail << "slope=" << fmt(s.fit->slope) << " ";
    v.require(s.fit->slope < 0, "slope not negative");
  }
  v.detail << "partial_sum=" << fmt(s.partial_sum);
  if (s.tail_extrapolation) v.detail << " tail=" << fmt(*s.tail_extrapolation);
  v.require(std::isfinite(s.partial_sum), "partial sum not finite");
}

void approx_check(Verdict& v) {
  struct Case {
    long beta;
    bool cf_side;  // threshold applies to fraction_cf_better
    double limit;
  };
  for (const auto& c : {Case{20, true, 0.02}, Case{2, false, 0.02}, Case{10, false, 0.05}}) {
    const ExactRational beta(c.beta);
    const auto plan = plan_of(beta, 2000, lochs::default_input_bits(beta, 80, lochs::kApproxBitsPerStep));
    const auto rows = lochs::approx_compare(beta, {80}, plan);
    const auto& e = rows.front();
    const double f = c.cf_side ? e.fraction_cf_better : e.fraction_beta_better;
    v.detail << "beta=" << c.beta << (c.cf_side ? " cf_better=" : " beta_better=") << fmt(f) << " used=" << e.used
             << "; ";
    v.require(f <= c.limit, "beta=" + std::to_string(c.beta) + " fraction " + fmt(f) + " > " + fmt(c.limit));
  }
}

// ---- property suites -------------------------------------------------------

constexpr int kCases = 10000;

struct Suite {
  std::string name;
  long cases = 0;
  long violations = 0;
  long skipped = 0;
};

Suite cylinder_bounds_suite() {
  Suite s{"cylinder length bounds"};
  std::mt19937_64 rng(101);
  while (s.cases < kCases) {
    const auto beta = random_beta(rng);
    const auto x = lochs::testing::random_unit(rng, 256);
    const std::size_t n = 1 + rng() % 40;
    const auto own = own_beta(x, beta, n + 60);
    const auto head = own_beta(x, beta, n);
    std::size_t l = 0;
    while (n + l < own.digits.size() && own.digits[n + l] == 0) ++l;
    if (n + l == own.digits.size() || head.terminated) {
      ++s.skipped;
      continue;
    }
    ++s.cases;
    const auto lib = lochs::cylinder(lochs::beta_digits(x, beta, n));
    const ExactRational inv = ExactRational(1) / beta;
    const bool ok = lib.length == head.length && lib.left == head.left &&
                    head.length <= lochs::pow(inv, static_cast<unsigned>(n)) &&
                    head.length >= lochs::pow(inv, static_cast<unsigned>(n + l + 1)) && head.left <= x &&
                    x < head.left + head.length;
    if (!ok) ++s.violations;
  }
  return s;
}

struct ExactCounts {
  std::uint64_t count = 0;
  std::vector<ExactRational> zero_run_measure;  // i = 0..8
};

const std::vector<ExactRational>& count_bases() {
  static const std::vector<ExactRational> b{ExactRational(3, 2), ExactRational(1618033988, 1000000000),
                                            ExactRational(5, 2)};
  return b;
}

const ExactCounts& exact_counts(std::size_t beta_index, unsigned n) {
  static std::map<std::pair<std::size_t, unsigned>, ExactCounts> cache;
  auto it = cache.find({beta_index, n});
  if (it != cache.end()) return it->second;
  const ExactRational& beta = count_bases()[beta_index];
  std::vector<ExactRational> inv_pow{ExactRational(1)};
  for (unsigned k = 1; k <= 20; ++k) inv_pow.push_back(inv_pow.back() / beta);
  ExactCounts c;
  c.zero_run_measure.assign(9, ExactRational(0));
  c.count = walk_followers(beta, n, ExactRational(1), 0, c.zero_run_measure, inv_pow);
  return cache.emplace(std::pair{beta_index, n}, std::move(c)).first->second;
}

Suite counting_suite() {
  // Only 36 (beta, n) pairs exist in the range, so each is checked
  // exhaustively: the library count, an independent follower walk and both
  // bounds beta^n <= N_n <= beta^{n+1}/(beta-1).
  Suite s{"admissible word counts"};
  for (std::size_t bi = 0; bi < count_bases().size(); ++bi) {
    const ExactRational& beta = count_bases()[bi];
    for (unsigned n = 1; n <= 12; ++n) {
      ++s.cases;
      const auto lib = lochs::count_admissible(beta, n);
      const auto& own = exact_counts(bi, n);
      const ExactRational count(BigInt(static_cast<unsigned long>(own.count)));
      const bool ok = lib == own.count && lochs::pow(beta, n) <= count &&
                      count <= lochs::pow(beta, n + 1) / (beta - ExactRational(1));
      if (!ok) ++s.violations;
    }
  }
  return s;
}

Suite determinant_suite() {
  Suite s{"continuant determinant"};
  std::mt19937_64 rng(202);
  for (; s.cases < kCases; ++s.cases) {
    const auto x = lochs::testing::random_unit(rng, 128);
    const auto st = lochs::cf_digits(x, 40);
    std::vector<BigInt> p, q;
    continuants(gauss_quotients(x, 40), p, q);
    bool ok = st.depth() + 1 == q.size();
    for (std::size_t k = 1; ok && k < q.size(); ++k) {
      const long kk = static_cast<long>(k);
      const BigInt det = p[k] * q[k - 1] - p[k - 1] * q[k];
      ok = det == (k % 2 == 1 ? 1 : -1) && st.p(kk) == p[k] && st.q(kk) == q[k] &&
           st.p(kk) * st.q(kk - 1) - st.p(kk - 1) * st.q(kk) == det;
    }
    if (!ok) ++s.violations;
  }
  return s;
}

Suite diophantine_suite() {
  Suite s{"convergent error sandwich"};
  std::mt19937_64 rng(303);
  while (s.cases < kCases) {
    const auto x = lochs::testing::random_unit(rng, 160);
    const auto quotients = gauss_quotients(x, 30);
    std::vector<BigInt> p, q;
    continuants(quotients, p, q);
    if (q.size() < 3) {
      ++s.skipped;
      continue;
    }
    const std::size_t n = 1 + rng() % (q.size() - 2);
    ++s.cases;
    const ExactRational gap = lochs::abs(x - ExactRational(p[n], q[n]));
    const ExactRational lower(BigInt(1), BigInt(2 * q[n + 1] * q[n + 1]));
    const ExactRational upper(BigInt(1), BigInt(q[n] * q[n]));
    // The sharper classical pair sits inside.
    const ExactRational inner_low(BigInt(1), BigInt(q[n] * (q[n] + q[n + 1])));
    const ExactRational inner_high(BigInt(1), BigInt(q[n] * q[n + 1]));
    const auto st = lochs::cf_digits(x, 30);
    const auto lib = lochs::diophantine_gap(st, x, n);
    const bool ok = lower <= inner_low && inner_low <= gap && gap <= inner_high && inner_high <= upper &&
                    lib.gap == gap && lib.upper_bound == upper && lib.lower_bound.has_value() &&
                    *lib.lower_bound == lower;
    if (!ok) ++s.violations;
  }
  return s;
}

ExactRational random_lochs_beta(std::mt19937_64& rng) {
  static const ExactRational bases[] = {ExactRational(10), ExactRational(2), ExactRational(3, 2),
                                        ExactRational(20), ExactRational(1618033988, 1000000000),
                                        ExactRational(27183, 10000)};
  return bases[rng() % 6];
}

Suite containment_suite() {
  Suite s{"containment equivalence"};
  std::mt19937_64 rng(404);
  while (s.cases < kCases) {
    const auto beta = random_lochs_beta(rng);
    const auto x = lochs::testing::random_unit(rng, 256);
    const std::size_t n = 1 + rng() % 30;
    lochs::LochsTracker t(x, beta);
    bool alive = true;
    while (t.n() < n && (alive = t.advance())) {
    }
    if (!alive) {
      ++s.skipped;
      continue;
    }
    const std::size_t k = t.k();
    if (!t.extend_cf(k + 2)) {
      ++s.skipped;
      continue;
    }
    ++s.cases;
    const auto own = own_beta(x, beta, n);
    const ExactRational lo = own.left, hi = own.left + own.length;
    bool ok = true;
    for (std::size_t m = 1; m <= k + 1; ++m) {
      const auto c = lochs::cf_cylinder(t.cf_state(), m);
      const bool inside = c.lower() <= lo && hi <= c.upper();
      ok = ok && inside == (m <= k) && t.contained_in(m) == inside;
    }
    if (!ok) ++s.violations;
  }
  return s;
}

Suite failure_bound_suite() {
  Suite s{"failure bound"};
  std::mt19937_64 rng(505);
  while (s.cases < kCases) {
    const auto beta = random_lochs_beta(rng);
    const auto x = lochs::testing::random_unit(rng, 256);
    const std::size_t n = 1 + rng() % 40;
    lochs::LochsCertificate cert;
    try {
      cert = lochs::kn(x, beta, n);
    } catch (const lochs::DegenerateSampleError&) {
      ++s.skipped;
      continue;
    }
    std::vector<BigInt> p, q;
    continuants(gauss_quotients(x, cert.k + 3), p, q);
    if (q.size() < cert.k + 4) {
      ++s.skipped;
      continue;
    }
    ++s.cases;
    const auto own = own_beta(x, beta, n);
    const BigInt& qk = q[cert.k + 3];
    const bool ok = own.length >= ExactRational(BigInt(1), BigInt(6 * qk * qk)) &&
                    own.length <= lochs::pow(ExactRational(1) / beta, static_cast<unsigned>(n));
    if (!ok) ++s.violations;
  }
  return s;
}

Suite zero_run_suite() {
  // Per case: the zero-run set inside the cylinder of x is the cylinder of
  // w 0^i, of length beta^{-n} min(r_w, beta^{-i}) <= beta^{-(n+i)}; and the
  // exact measure of {l_n >= i} obeys beta^{1-i}/(beta-1).
  Suite s{"zero-run tail"};
  std::mt19937_64 rng(606);
  for (; s.cases < kCases; ++s.cases) {
    const std::size_t bi = rng() % 3;
    const ExactRational& beta = count_bases()[bi];
    const unsigned n = 1 + static_cast<unsigned>(rng() % 12);
    const unsigned i = static_cast<unsigned>(rng() % 9);
    const auto x = lochs::testing::random_unit(rng, 128);
    const ExactRational inv = ExactRational(1) / beta;
    const auto own = own_beta(x, beta, n);
    const auto padded = lochs::cylinder(lochs::beta_digits(own.left, beta, n + i));
    const ExactRational follower = own.length / lochs::pow(inv, n);
    const ExactRational expected = lochs::pow(inv, n) * std::min(follower, lochs::pow(inv, i));
    const auto& counts = exact_counts(bi, n);
    const ExactRational bound = lochs::pow(inv, i) * beta / (beta - ExactRational(1));
    const auto deep = own_beta(x, beta, n + i);
    bool run = true;
    for (unsigned j = 0; j < i; ++j) run = run && deep.digits[n + j] == 0;
    const bool ok = padded.length == expected && expected <= lochs::pow(inv, n + i) &&
                    counts.zero_run_measure[i] <= bound &&
                    (!run || (padded.left <= x && x < padded.left + padded.length));
    if (!ok) ++s.violations;
  }
  return s;
}

Suite monotone_suite() {
  Suite s{"k_n monotone"};
  std::mt19937_64 rng(707);
  while (s.cases < kCases) {
    const auto beta = random_lochs_beta(rng);
    const auto x = lochs::testing::random_unit(rng, 320);
    const std::size_t n = 2 + rng() % 60;
    std::vector<lochs::LochsCertificate> series;
    try {
      series = lochs::kn_series(x, beta, n);
    } catch (const lochs::DegenerateSampleError&) {
      ++s.skipped;
      continue;
    }
    ++s.cases;
    bool ok = true;
    for (std::size_t j = 1; j < series.size(); ++j) ok = ok && series[j - 1].k <= series[j].k;
    if (!ok) ++s.violations;
  }
  return s;
}

void property_check(Verdict& v) {
  for (const auto& make : std::vector<std::function<Suite()>>{
           cylinder_bounds_suite, counting_suite, determinant_suite, diophantine_suite, containment_suite,
           failure_bound_suite, zero_run_suite, monotone_suite}) {
    const Suite s = make();
    v.detail << s.name << " " << s.cases << " cases " << s.violations << " violations";
    if (s.skipped) v.detail << " (" << s.skipped << " skipped)";
    v.detail << "; ";
    v.require(s.violations == 0, s.name);
  }
}

}  // namespace

int main() {
  if (!lochs::pi_fixture_intact()) {
    std::printf("pi fixture checksum mismatch; refusing to run\n");
    for (int i = 1; i <= 8; ++i) std::printf("criterion %d: FAIL (fixture corrupted)\n", i);
    return 1;
  }
  int failures = 0;
  failures += report(1, "lochs mean", lochs_mean_check);
  failures += report(2, "pi oracle", pi_oracle_check);
  failures += report(3, "pressure normalization", normalization_check);
  failures += report(4, "pressure derivative", derivative_check);
  failures += report(5, "rate signs", rate_check);
  failures += report(6, "deviation decay", deviation_check);
  failures += report(7, "approximation comparison", approx_check);
  failures += report(8, "property suites", property_check);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
