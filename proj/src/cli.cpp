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

#include "lochs/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unistd.h>

#include "CLI11.hpp"
#include "lochs/beta_expand.hpp"
#include "lochs/cf_expand.hpp"
#include "lochs/constants.hpp"
#include "lochs/errors.hpp"
#include "lochs/experiments.hpp"
#include "lochs/fixtures.hpp"
#include "lochs/lochs_core.hpp"
#include "lochs/numkit.hpp"
#include "lochs/parallel.hpp"
#include "lochs/pressure.hpp"

namespace lochs::cli {

using nlohmann::json;

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

constexpr int kDecimalDigits = 40;

struct Report {
  json result = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  int status = kOk;
};

ExactRational parse_beta(const RunConfig& c) {
  if (c.beta.empty()) throw UsageError("--beta is required");
  return ExactRational::parse(c.beta);
}

ExactRational parse_x(const RunConfig& c) {
  if (c.x.empty()) throw UsageError("--x is required");
  return ExactRational::parse(c.x);
}

void require_n(std::size_t n, const char* flag) {
  if (n == 0) throw UsageError(std::string(flag) + " must be a positive integer");
}

json rational_json(const ExactRational& v) {
  return json{{"exact", v.to_string()}, {"decimal", v.to_decimal(kDecimalDigits)}};
}

PressureOptions pressure_options(const RunConfig& c) {
  return PressureOptions{c.depth, c.cutoff, c.complete_tail};
}

SamplePlan sample_plan(const RunConfig& c, const ExactRational& beta) {
  SamplePlan p;
  p.seed = c.seed;
  p.count = c.samples;
  p.precision.input_bits = c.input_bits;
  p.precision.guard_bits = c.guard_bits;
  p.beta = beta;
  return p;
}

json rate_json(const RateValue& v) {
  return json{{"value", v.value},
              {"error", v.error},
              {"t_argmin", v.t_argmin},
              {"objective_at_zero", v.objective_at_zero},
              {"status", to_string(v.status)}};
}

Report do_expand(const RunConfig& c) {
  const auto beta = parse_beta(c);
  const auto x = parse_x(c);
  require_n(c.n, "--n");
  const auto orbit = beta_digits(x, beta, c.n);
  const auto cyl = cylinder(orbit);
  Report r;
  r.result["beta"] = beta.to_string();
  r.result["x"] = x.to_string();
  r.result["n"] = c.n;
  r.result["digits"] = orbit.digits;
  r.result["orbit_value"] = rational_json(orbit.orbit.back());
  r.result["follower"] = rational_json(orbit.followers.back());
  r.result["cylinder_left"] = rational_json(cyl.left);
  r.result["cylinder_right"] = rational_json(cyl.right());
  r.result["cylinder_length"] = rational_json(cyl.length);
  const auto term = orbit.terminates_at();
  r.result["terminates_at"] = term ? json(*term) : json(nullptr);
  r.columns = {"k", "digit", "orbit", "follower"};
  for (std::size_t k = 1; k <= orbit.depth(); ++k) {
    r.rows.push_back({k, orbit.digits[k - 1], orbit.orbit[k].to_string(), orbit.followers[k].to_string()});
  }
  return r;
}

Report do_cf(const RunConfig& c) {
  const auto x = parse_x(c);
  require_n(c.m, "--m");
  const auto state = cf_digits(x, c.m);
  Report r;
  r.result["x"] = x.to_string();
  r.result["requested"] = c.m;
  r.result["depth"] = state.depth();
  r.result["exhausted"] = state.exhausted();
  std::vector<std::string> quotients;
  for (const auto& a : state.quotients()) quotients.push_back(a.get_str());
  r.result["quotients"] = quotients;
  if (state.depth() > 0) {
    const auto cyl = cf_cylinder(state, state.depth());
    r.result["cylinder_lower"] = rational_json(cyl.lower());
    r.result["cylinder_upper"] = rational_json(cyl.upper());
  }
  r.columns = {"k", "a", "p", "q"};
  for (std::size_t k = 1; k <= state.depth(); ++k) {
    const long kk = static_cast<long>(k);
    r.rows.push_back({k, state.quotient(k).get_str(), state.p(kk).get_str(), state.q(kk).get_str()});
  }
  return r;
}

Report do_kn(const RunConfig& c) {
  const auto beta = parse_beta(c);
  require_n(c.n, "--n");
  ExactRational x, cell(0);
  Report r;
  if (!c.fixture.empty()) {
    if (!c.x.empty()) throw UsageError("--x and --fixture are mutually exclusive");
    const auto fx = load_fixture(c.fixture);
    x = fx.value;
    cell = fx.cell_width;
    std::ostringstream hex;
    hex << "0x" << std::hex << std::setw(16) << std::setfill('0') << pi_fixture_checksum();
    r.result["fixture"] = fx.name;
    r.result["fixture_checksum"] = hex.str();
  } else {
    x = parse_x(c);
  }
  r.result["beta"] = beta.to_string();
  r.result["n"] = c.n;
  if (c.series) {
    const auto series = kn_series(x, beta, c.n, cell);
    r.columns = {"n", "k", "truncated", "reason"};
    for (const auto& cert : series) {
      r.rows.push_back({cert.n, cert.k, cert.truncated, std::string(to_string(cert.reason))});
    }
    const auto& last = series.back();
    r.result["k"] = last.k;
    r.result["truncated"] = last.truncated;
    r.result["reason"] = std::string(to_string(last.reason));
    if (last.reason == Truncation::precision) r.status = kResource;
    return r;
  }
  const auto cert = kn(x, beta, c.n, cell);
  r.result["k"] = cert.k;
  r.result["truncated"] = cert.truncated;
  r.result["reason"] = std::string(to_string(cert.reason));
  r.result["boundary_collision"] = cert.boundary_collision;
  r.result["beta_cylinder_low"] = cert.witness_in.beta_low.to_decimal(kDecimalDigits);
  r.result["beta_cylinder_high"] = cert.witness_in.beta_high.to_decimal(kDecimalDigits);
  if (cert.witness_out) {
    r.result["first_failing_depth"] = cert.witness_out->cf_depth;
  }
  if (cert.reason == Truncation::precision) r.status = kResource;
  return r;
}

Report do_pressure(const RunConfig& c) {
  const auto e = pressure_cylinder_sum(c.theta, pressure_options(c));
  Report r;
  r.result = json{{"theta", e.theta},
                  {"depth", e.depth},
                  {"cutoff", e.cutoff},
                  {"method", e.method},
                  {"log_sum", e.log_sum},
                  {"naive_estimate", e.naive_estimate},
                  {"completed_log_sum", e.completed_log_sum},
                  {"tail_bound", e.tail_bound},
                  {"estimate", e.estimate},
                  {"previous_estimate", e.previous_estimate},
                  {"error", e.error}};
  return r;
}

Report do_derivative(const RunConfig& c) {
  const auto d = pressure_derivative_at_1(pressure_options(c));
  const double target = -critical_log_beta();
  Report r;
  r.result = json{{"value", d.value},
                  {"error", d.error},
                  {"step", d.step},
                  {"second_difference", d.second_difference},
                  {"target", target},
                  {"relative_deviation", std::abs(d.value - target) / std::abs(target)}};
  return r;
}

Report do_moment(const RunConfig& c) {
  require_n(c.depth, "--depth");
  const auto m = pressure_mc(c.t, c.depth, c.samples, c.seed);
  Report r;
  r.result = json{{"t", m.t},
                  {"depth", m.depth},
                  {"samples", m.samples},
                  {"estimate", m.estimate},
                  {"ci_low", m.ci_low},
                  {"ci_high", m.ci_high},
                  {"reference", m.reference},
                  {"sandwich_low", m.sandwich_low},
                  {"sandwich_high", m.sandwich_high}};
  return r;
}

Report do_rates(const RunConfig& c) {
  const auto beta = parse_beta(c);
  const auto rc = rate_constants(beta, c.eps, pressure_options(c));
  Report r;
  r.result["beta"] = beta.to_string();
  r.result["epsilon"] = rc.epsilon;
  r.result["log_beta"] = rc.log_beta;
  r.result["a"] = rc.a;
  r.result["critical_log_beta"] = critical_log_beta();
  r.result["theta1"] = rate_json(rc.theta1);
  r.result["theta2"] = rate_json(rc.theta2);
  r.result["theta"] = rate_json(rc.theta);
  r.result["theta_star"] = rate_json(rc.theta_star);
  r.result["theta_lower_bound_holds"] = rc.theta_lower_bound_holds;
  r.result["theta_star_lower_bound_holds"] = rc.theta_star_lower_bound_holds;
  r.result["grid_points"] = rc.grid_points;
  r.columns = {"name", "value", "error", "t_argmin", "status"};
  const std::pair<const char*, const RateValue*> named[] = {
      {"theta1", &rc.theta1}, {"theta2", &rc.theta2}, {"theta", &rc.theta}, {"theta_star", &rc.theta_star}};
  for (const auto& [name, v] : named) {
    r.rows.push_back({name, v->value, v->error, v->t_argmin, to_string(v->status)});
    if (v->status == SignStatus::indeterminate) r.status = kIndeterminate;
  }
  return r;
}

Report do_tau(const RunConfig& c) {
  const auto tau = lyapunov_tau(c.gamma, pressure_options(c));
  Report r;
  r.result = json{{"gamma", tau.gamma},
                  {"tau", tau.tau},
                  {"t_argmin", tau.t_argmin},
                  {"error", tau.error},
                  {"at_grid_boundary", tau.at_grid_boundary},
                  {"theta_from_tau", (tau.tau - 1.0) * tau.gamma}};
  return r;
}

Report do_deviation(const RunConfig& c, const Executor& exec) {
  const auto beta = parse_beta(c);
  if (c.n_list.empty()) throw UsageError("--n-list is required");
  const auto s = deviation_measure(beta, c.eps, c.n_list, sample_plan(c, beta), exec, true);
  Report r;
  r.result["beta"] = beta.to_string();
  r.result["epsilon"] = s.epsilon;
  r.result["lochs_constant"] = s.lochs_constant;
  r.result["partial_sum"] = s.partial_sum;
  r.result["tail_extrapolation"] = s.tail_extrapolation ? json(*s.tail_extrapolation) : json(nullptr);
  if (s.fit) {
    r.result["fit"] = json{{"slope", s.fit->slope},
                           {"intercept", s.fit->intercept},
                           {"points", s.fit->points},
                           {"residuals", s.fit->residuals}};
  } else {
    r.result["fit"] = nullptr;
  }
  r.result["theory_bound"] = s.theory_bound ? json(*s.theory_bound) : json(nullptr);
  std::vector<std::size_t> used;
  for (const auto& e : s.entries) used.push_back(e.used);
  r.result["used"] = used;
  r.columns = {"n", "estimate", "ci_low", "ci_high", "discarded"};
  for (const auto& e : s.entries) r.rows.push_back({e.n, e.estimate, e.ci_low, e.ci_high, e.discarded});
  return r;
}

Report do_approx(const RunConfig& c, const Executor& exec) {
  const auto beta = parse_beta(c);
  if (c.n_list.empty()) throw UsageError("--n-list is required");
  const auto rows = approx_compare(beta, c.n_list, sample_plan(c, beta), exec);
  Report r;
  r.result["beta"] = beta.to_string();
  r.result["log_beta"] = log_beta(beta);
  r.result["critical_log_beta"] = critical_log_beta();
  r.columns = {"n", "fraction_cf_better", "fraction_beta_better", "fraction_ties", "used", "discarded"};
  for (const auto& e : rows) {
    r.rows.push_back({e.n, e.fraction_cf_better, e.fraction_beta_better, e.fraction_ties, e.used, e.discarded});
  }
  return r;
}

Report do_lochs_mean(const RunConfig& c, const Executor& exec) {
  const auto beta = parse_beta(c);
  require_n(c.n, "--n");
  const auto m = lochs_mean(beta, c.n, sample_plan(c, beta), exec);
  Report r;
  r.result = json{{"beta", beta.to_string()},
                  {"n", m.n},
                  {"mean", m.mean},
                  {"stddev", m.stddev},
                  {"lochs_constant", m.lochs_constant},
                  {"used", m.used},
                  {"discarded", m.discarded}};
  return r;
}

Report do_zero_runs(const RunConfig& c, const Executor& exec) {
  const auto beta = parse_beta(c);
  std::vector<std::size_t> i_list;
  for (std::size_t i = 0; i <= c.i_max; ++i) i_list.push_back(i);
  const auto rows = zero_run_tail(beta, i_list, c.n, sample_plan(c, beta), exec);
  Report r;
  r.result["beta"] = beta.to_string();
  r.result["n"] = c.n;
  r.columns = {"i", "estimate", "ci_low", "ci_high", "bound", "discarded"};
  for (const auto& e : rows) r.rows.push_back({e.i, e.estimate, e.ci_low, e.ci_high, e.bound, e.discarded});
  return r;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += scalar_text(v[i]);
    }
    return s;
  }
  return v.dump();
}

std::string render(const RunConfig& c, const Report& r) {
  std::ostringstream os;
  const json config = to_json(c);
  if (c.format == "json") {
    json doc{{"config", config}, {"result", r.result}};
    if (!r.columns.empty()) {
      json rows = json::array();
      for (const auto& row : r.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = row[i];
        rows.push_back(obj);
      }
      doc["rows"] = rows;
    }
    os << doc.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "# config " << config.dump() << "\n";
    if (r.columns.empty()) {
      os << "key,value\n";
      for (const auto& [k, v] : r.result.items()) os << k << "," << (v.is_object() ? v.dump() : scalar_text(v)) << "\n";
    } else {
      os << "# result " << r.result.dump() << "\n";
      for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << r.columns[i];
      os << "\n";
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << scalar_text(row[i]);
        os << "\n";
      }
    }
  } else {
    os << "lochs " << c.subcommand << "\n";
    os << "config: " << config.dump() << "\n";
    for (const auto& [k, v] : r.result.items()) {
      os << k << ": " << (v.is_object() ? v.dump() : scalar_text(v)) << "\n";
    }
    if (!r.columns.empty()) {
      for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "\t" : "") << r.columns[i];
      os << "\n";
      for (const auto& row : r.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "\t" : "") << scalar_text(row[i]);
        os << "\n";
      }
    }
  }
  return os.str();
}

// Writes next to the target and renames, so readers never see half a file.
void write_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ResourceError("cannot open " + tmp + " for writing");
    f << text;
    f.flush();
    if (!f) throw ResourceError("write to " + tmp + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw ResourceError("cannot rename output into " + path);
  }
}

Report dispatch(const RunConfig& c) {
  const Executor exec = threaded_executor(c.threads);
  const std::string& s = c.subcommand;
  if (s == "expand") return do_expand(c);
  if (s == "cf") return do_cf(c);
  if (s == "kn") return do_kn(c);
  if (s == "pressure") return do_pressure(c);
  if (s == "derivative") return do_derivative(c);
  if (s == "moment") return do_moment(c);
  if (s == "rates") return do_rates(c);
  if (s == "tau") return do_tau(c);
  if (s == "deviation") return do_deviation(c, exec);
  if (s == "approx") return do_approx(c, exec);
  if (s == "lochs-mean") return do_lochs_mean(c, exec);
  if (s == "zero-runs") return do_zero_runs(c, exec);
  throw UsageError("unknown subcommand '" + s + "'");
}

}  // namespace

json to_json(const RunConfig& c) {
  return json{{"subcommand", c.subcommand},
              {"beta", c.beta},
              {"x", c.x},
              {"fixture", c.fixture},
              {"n", c.n},
              {"m", c.m},
              {"series", c.series},
              {"theta", c.theta},
              {"t", c.t},
              {"eps", c.eps},
              {"gamma", c.gamma},
              {"depth", c.depth},
              {"cutoff", c.cutoff},
              {"complete_tail", c.complete_tail},
              {"n_list", c.n_list},
              {"i_max", c.i_max},
              {"samples", c.samples},
              {"input_bits", c.input_bits},
              {"guard_bits", c.guard_bits},
              {"seed", c.seed},
              {"threads", c.threads},
              {"format", c.format},
              {"output", c.output}};
}

RunConfig config_from_json(const json& doc) {
  const json& j = doc.contains("config") ? doc.at("config") : doc;
  if (!j.is_object()) throw ParseError("config must be a JSON object", 0);
  RunConfig c;
  try {
    auto get = [&](const char* key, auto& field) {
      if (j.contains(key)) j.at(key).get_to(field);
    };
    get("subcommand", c.subcommand);
    get("beta", c.beta);
    get("x", c.x);
    get("fixture", c.fixture);
    get("n", c.n);
    get("m", c.m);
    get("series", c.series);
    get("theta", c.theta);
    get("t", c.t);
    get("eps", c.eps);
    get("gamma", c.gamma);
    get("depth", c.depth);
    get("cutoff", c.cutoff);
    get("complete_tail", c.complete_tail);
    get("n_list", c.n_list);
    get("i_max", c.i_max);
    get("samples", c.samples);
    get("input_bits", c.input_bits);
    get("guard_bits", c.guard_bits);
    get("seed", c.seed);
    get("threads", c.threads);
    get("format", c.format);
    get("output", c.output);
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad config field: ") + e.what(), 0);
  }
  if (c.subcommand.empty()) throw ParseError("config has no subcommand", 0);
  return c;
}

RunConfig resolve(RunConfig c) {
  if (c.input_bits != 0) return c;
  const std::string& s = c.subcommand;
  if (s == "deviation" || s == "approx" || s == "lochs-mean" || s == "zero-runs") {
    const auto beta = parse_beta(c);
    std::size_t depth = c.n;
    if (s == "deviation" || s == "approx") depth = c.n_list.empty() ? 0 : c.n_list.back();
    if (s == "zero-runs") depth = c.n + c.i_max;
    c.input_bits = default_input_bits(beta, depth, s == "approx" ? kApproxBitsPerStep : 0.0);
  }
  return c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "text" && config.format != "csv" && config.format != "json") {
      throw UsageError("--out must be text, csv or json");
    }
    const RunConfig c = resolve(config);
    const Report report = dispatch(c);
    const std::string text = render(c, report);
    if (c.output.empty()) {
      out << text;
      out.flush();
    } else {
      write_atomically(c.output, text);
    }
    if (report.status == kIndeterminate) err << "warning: a claimed sign could not be certified\n";
    if (report.status == kResource) err << "warning: result truncated at the precision horizon\n";
    return report.status;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const RangeError& e) {
    err << "range error: " << e.what() << "\n";
    return kDomain;
  } catch (const DegenerateSampleError& e) {
    err << "degenerate sample: " << e.what() << "\n";
    return kDomain;
  } catch (const FitError& e) {
    err << "fit error: " << e.what() << "\n";
    return kDomain;
  } catch (const PlanError& e) {
    err << "plan error: " << e.what() << "\n";
    return kResource;
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (const IndeterminateSignError& e) {
    err << "indeterminate sign: " << e.what() << "\n";
    return kIndeterminate;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  std::string config_path;
  CLI::App app{"Lochs-type comparison of beta-expansions and continued fractions", "lochs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--threads", c.threads, "worker threads for sampling experiments");
  app.add_option("--seed", c.seed, "64-bit seed");
  app.add_option("--out", c.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--output", c.output, "write the report to this path instead of stdout");
  bool as_json = false;
  app.add_flag("--json", as_json, "same as --out json");

  auto* expand = app.add_subcommand("expand", "beta-expansion digits, orbit and cylinder");
  expand->add_option("--beta", c.beta)->required();
  expand->add_option("--x", c.x)->required();
  expand->add_option("--n", c.n)->required();

  auto* cf = app.add_subcommand("cf", "continued fraction quotients and convergents");
  cf->add_option("--x", c.x)->required();
  cf->add_option("--m,--max-m", c.m)->required();

  auto* kn_cmd = app.add_subcommand("kn", "number of partial quotients fixed by n beta-digits");
  kn_cmd->add_option("--beta", c.beta)->required();
  auto* kx = kn_cmd->add_option("--x", c.x);
  auto* kf = kn_cmd->add_option("--fixture", c.fixture, "bundled constant (pi)");
  kx->excludes(kf);
  kn_cmd->add_option("--n", c.n)->required();
  kn_cmd->add_flag("--series", c.series, "report k_1..k_n");

  auto add_pressure_flags = [&](CLI::App* sub) {
    sub->add_option("--depth", c.depth)->capture_default_str();
    sub->add_option("--cutoff", c.cutoff)->capture_default_str();
  };
  auto* pressure = app.add_subcommand("pressure", "cylinder-sum estimate of P(theta)");
  pressure->add_option("--theta", c.theta)->required();
  add_pressure_flags(pressure);
  pressure->add_flag("!--no-tail", c.complete_tail, "skip the analytic a > cutoff completion");

  auto* derivative = app.add_subcommand("derivative", "P'(1) by Richardson-refined central differences");
  add_pressure_flags(derivative);

  auto* moment = app.add_subcommand("moment", "Monte Carlo (1/n) log E(q_n^{2t})");
  moment->add_option("--t", c.t)->required();
  moment->add_option("--depth", c.depth)->required();
  moment->add_option("--samples", c.samples)->capture_default_str();

  auto* rates = app.add_subcommand("rates", "deviation and approximation rate constants");
  rates->add_option("--beta", c.beta)->required();
  rates->add_option("--eps", c.eps)->capture_default_str();
  add_pressure_flags(rates);

  auto* tau = app.add_subcommand("tau", "Lyapunov spectrum tau(gamma)");
  tau->add_option("--gamma", c.gamma)->required();
  add_pressure_flags(tau);

  auto add_plan_flags = [&](CLI::App* sub) {
    sub->add_option("--samples", c.samples)->capture_default_str();
    sub->add_option("--input-bits", c.input_bits, "random bits per sample (default: from depth)");
    sub->add_option("--guard-bits", c.guard_bits)->capture_default_str();
  };
  auto* deviation = app.add_subcommand("deviation", "measure of {|k_n/n - a| >= eps}");
  deviation->add_option("--beta", c.beta)->required();
  deviation->add_option("--eps", c.eps)->required();
  deviation->add_option("--n-list", c.n_list)->required()->delimiter(',');
  add_plan_flags(deviation);

  auto* approx = app.add_subcommand("approx", "convergent versus beta-truncation error");
  approx->add_option("--beta", c.beta)->required();
  approx->add_option("--n-list", c.n_list)->required()->delimiter(',');
  add_plan_flags(approx);

  auto* mean = app.add_subcommand("lochs-mean", "sample mean of k_n/n");
  mean->add_option("--beta", c.beta)->required();
  mean->add_option("--n", c.n)->required();
  add_plan_flags(mean);

  auto* zero = app.add_subcommand("zero-runs", "measure of {l_n >= i} for i <= i-max");
  zero->add_option("--beta", c.beta)->required();
  zero->add_option("--i-max", c.i_max)->capture_default_str();
  zero->add_option("--n", c.n)->required();
  add_plan_flags(zero);

  auto* replay = app.add_subcommand("replay", "rerun a configuration echoed in a JSON report");
  replay->add_option("--config", config_path)->required()->check(CLI::ExistingFile);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (replay->parsed()) {
    std::ifstream f(config_path);
    json doc;
    try {
      doc = json::parse(f);
    } catch (const json::exception& e) {
      err << "parse error: " << e.what() << "\n";
      return kUsage;
    }
    RunConfig replayed;
    try {
      replayed = config_from_json(doc);
    } catch (const ParseError& e) {
      err << "parse error: " << e.what() << "\n";
      return kUsage;
    }
    replayed.output = c.output;
    if (as_json) replayed.format = "json";
    return run(replayed, out, err);
  }
  if (as_json) c.format = "json";
  c.subcommand = app.get_subcommands().front()->get_name();
  return run(c, out, err);
}

}  // namespace lochs::cli
