// Copyright 2026 The logpareto Authors
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

// Command-line surface. Exit codes: 0 success, 2 usage or precondition
// error, 3 numerical failure. All output is deterministic for a fixed flag
// set: numbers are formatted with 10 significant digits, experiment trials
// reduce over fixed blocks regardless of --threads, and every randomized
// command echoes its seed and configuration.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "logpareto/dct_verify.hpp"
#include "logpareto/distribution.hpp"
#include "logpareto/estimators.hpp"
#include "logpareto/expint.hpp"
#include "logpareto/information.hpp"

using json = nlohmann::ordered_json;

namespace {

std::string fmt10(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt_opt(const std::optional<double>& v) {
  return v ? fmt10(*v) : std::string();
}

std::uint64_t resolve_seed(const CLI::App* sub, std::uint64_t flag_value) {
  if (sub->count("--seed")) return flag_value;
  if (const char* env = std::getenv("LOGPARETO_SEED"))
    return std::strtoull(env, nullptr, 10);
  return flag_value;
}

struct CommonArgs {
  double theta = 1.0;
  double theta_max = logpareto::kDefaultThetaMax;
  bool as_json = false;
};

int cmd_constants(const CommonArgs& args) {
  const logpareto::LogPareto dist(args.theta, args.theta_max);
  const double median = dist.median();
  if (args.as_json) {
    json out;
    out["theta"] = args.theta;
    out["a"] = dist.norm_constant();
    out["da_dtheta"] = dist.norm_derivative();
    out["c"] = dist.score_offset();
    out["median"] = median;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "theta,a,da_dtheta,c,median\n"
            << fmt10(args.theta) << ',' << fmt10(dist.norm_constant()) << ','
            << fmt10(dist.norm_derivative()) << ','
            << fmt10(dist.score_offset()) << ',' << fmt10(median) << "\n";
  return 0;
}

int cmd_info(const CommonArgs& args, const std::optional<double>& trunc_log,
             const std::optional<long long>& n) {
  std::string kind;
  std::optional<double> value, rate, offset, bound;
  std::optional<bool> trivial;

  if (trunc_log) {
    kind = "truncated";
    value = logpareto::fisher_truncated(args.theta, *trunc_log);
  } else {
    const auto info = logpareto::fisher(args.theta);
    if (info.divergent()) {
      kind = "divergent";
      rate = info.rate;
      offset = info.offset;
    } else {
      kind = "finite";
      value = info.value;
    }
    if (n) {
      const auto b = logpareto::cr_bound(args.theta, *n, 0.0);
      bound = b.bound;
      trivial = b.no_information;
    }
  }

  if (args.as_json) {
    json out;
    out["theta"] = args.theta;
    out["kind"] = kind;
    if (value) out["value"] = *value;
    if (rate) {
      out["rate"] = *rate;
      out["offset"] = *offset;
    }
    if (trunc_log) out["trunc_log"] = *trunc_log;
    if (n) {
      out["n"] = *n;
      out["cr_bound"] = *bound;
      out["cr_trivial"] = *trivial;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "theta,kind,value,rate,offset,trunc_log,n,cr_bound,cr_trivial\n"
            << fmt10(args.theta) << ',' << kind << ',' << fmt_opt(value) << ','
            << fmt_opt(rate) << ',' << fmt_opt(offset) << ','
            << fmt_opt(trunc_log) << ','
            << (n ? std::to_string(*n) : std::string()) << ','
            << fmt_opt(bound) << ','
            << (trivial ? std::string(*trivial ? "1" : "0") : std::string())
            << "\n";
  return 0;
}

int cmd_median_curve(double from, double to, long long points,
                     double theta_max, bool as_json) {
  if (points < 1) throw std::domain_error("median-curve: points must be >= 1");
  if (!(from >= 1.0)) throw std::domain_error("median-curve: from must be >= 1");
  if (!(to >= from)) throw std::domain_error("median-curve: to must be >= from");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(from);
  } else {
    for (long long i = 0; i < points; ++i)
      grid.push_back(from + (to - from) * static_cast<double>(i) /
                                static_cast<double>(points - 1));
  }
  const auto curve = logpareto::median_curve(grid, theta_max);
  if (as_json) {
    json rows = json::array();
    for (const auto& [theta, median] : curve)
      rows.push_back({{"theta", theta}, {"median", median}});
    std::cout << rows.dump(2) << "\n";
    return 0;
  }
  std::cout << "theta,median\n";
  for (const auto& [theta, median] : curve)
    std::cout << fmt10(theta) << ',' << fmt10(median) << "\n";
  return 0;
}

int cmd_sample(double theta, long long n, std::uint64_t seed, double theta_max,
               bool as_json) {
  const auto batch = logpareto::sample(n, theta, seed, 0, theta_max);
  if (as_json) {
    json out;
    out["theta"] = theta;
    out["n"] = n;
    out["seed"] = seed;
    json values = json::array();
    for (double u : batch.log_values)
      values.push_back({{"value", std::exp(u)}, {"log_value", u}});
    out["values"] = values;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("# sample theta=%s n=%lld seed=%" PRIu64 "\n",
              fmt10(theta).c_str(), n, seed);
  std::cout << "index,value,log_value\n";
  for (std::size_t i = 0; i < batch.log_values.size(); ++i) {
    const double u = batch.log_values[i];
    std::cout << i << ',' << fmt10(std::exp(u)) << ',' << fmt10(u) << "\n";
  }
  return 0;
}

int cmd_experiment(logpareto::ExperimentConfig cfg, bool measure_slope,
                   double bias_step, long long bias_trials, bool as_json) {
  std::optional<logpareto::BiasSlopePoint> slope;
  if (measure_slope) {
    if (!(cfg.theta - bias_step >= 1.0))
      throw std::domain_error(
          "experiment: bias grid would cross theta = 1; reduce --bias-step");
    const std::vector<double> grid = {cfg.theta - bias_step, cfg.theta,
                                      cfg.theta + bias_step};
    const auto curve = logpareto::estimate_bias_curve(
        grid, cfg.n, bias_trials, cfg.estimator, cfg.seed, cfg.threads,
        cfg.theta_max);
    slope = curve.slopes.front();
    cfg.bias_slope = slope->slope;
  }
  const auto report = logpareto::run_experiment(cfg);
  const char* estimator_name =
      cfg.estimator == logpareto::EstimatorKind::median ? "median" : "mle";

  if (as_json) {
    json out;
    out["estimator"] = estimator_name;
    out["theta"] = cfg.theta;
    out["n"] = cfg.n;
    out["trials"] = cfg.trials;
    out["seed"] = cfg.seed;
    out["mean_estimate"] = report.mean_estimate;
    out["bias"] = report.bias;
    out["variance"] = report.variance;
    out["stddev"] = report.stddev;
    out["se_mean"] = report.se_mean;
    out["se_variance"] = report.se_variance;
    out["clamp_rate"] = report.clamp_rate;
    out["mean_clamped"] = report.mean_clamped;
    out["variance_clamped"] = report.variance_clamped;
    if (report.asymptotic_variance)
      out["asymptotic_variance"] = *report.asymptotic_variance;
    else
      out["asymptotic_variance"] = nullptr;
    out["bias_slope"] = cfg.bias_slope.value_or(0.0);
    if (slope) out["bias_slope_se"] = slope->se;
    out["cr_bound"] = report.bound.bound;
    out["cr_trivial"] = report.bound.no_information;
    std::cout << out.dump(2) << "\n";
    return 0;
  }

  std::printf("# experiment estimator=%s theta=%s n=%lld trials=%lld seed=%" PRIu64
              "\n",
              estimator_name, fmt10(cfg.theta).c_str(), cfg.n, cfg.trials,
              cfg.seed);
  std::cout << "estimator,theta,n,trials,seed,mean_estimate,bias,variance,"
               "stddev,se_mean,se_variance,clamp_rate,mean_clamped,"
               "variance_clamped,asymptotic_variance,bias_slope,cr_bound,"
               "cr_trivial\n";
  std::cout << estimator_name << ',' << fmt10(cfg.theta) << ',' << cfg.n << ','
            << cfg.trials << ',' << cfg.seed << ','
            << fmt10(report.mean_estimate) << ',' << fmt10(report.bias) << ','
            << fmt10(report.variance) << ',' << fmt10(report.stddev) << ','
            << fmt10(report.se_mean) << ',' << fmt10(report.se_variance) << ','
            << fmt10(report.clamp_rate) << ',' << fmt10(report.mean_clamped)
            << ',' << fmt10(report.variance_clamped) << ','
            << fmt_opt(report.asymptotic_variance) << ','
            << fmt10(cfg.bias_slope.value_or(0.0)) << ','
            << fmt10(report.bound.bound) << ','
            << (report.bound.no_information ? "1" : "0") << "\n";
  return 0;
}

int cmd_dct_check(bool as_json) {
  const auto grid = logpareto::domination_grid_check();
  const auto ladder = logpareto::dominated_limit_integral();
  if (as_json) {
    json out;
    out["domination"] = {{"checked", grid.checked},
                         {"violations", grid.violations}};
    json rungs = json::array();
    for (const auto& entry : ladder.ladder)
      rungs.push_back({{"h", entry.h}, {"value", entry.value}});
    out["limit_ladder"] = rungs;
    out["final_value"] = ladder.final_value;
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::printf("# dct-check\n# domination: %d violations on %d grid points\n",
              grid.violations, grid.checked);
  std::cout << "h,limit_integral\n";
  for (const auto& entry : ladder.ladder)
    std::cout << fmt10(entry.h) << ',' << fmt10(entry.value) << "\n";
  std::printf("# limit: final=%s target=-1\n",
              fmt10(ladder.final_value).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Numerics for the density family a_theta x^-theta log^-3 x on [e, inf):"
      " constants, Fisher information, Cramer-Rao bounds, sampling, and"
      " estimator experiments."};
  app.require_subcommand(1);
  std::function<int()> action;

  // constants
  {
    auto* sub = app.add_subcommand(
        "constants", "Normalization a, da/dtheta, score offset c, median");
    auto args = std::make_shared<CommonArgs>();
    sub->add_option("--theta", args->theta, "family parameter")->required();
    sub->add_option("--theta-max", args->theta_max, "upper theta limit");
    sub->add_flag("--json", args->as_json, "JSON output");
    sub->callback([&action, args]() {
      action = [args]() { return cmd_constants(*args); };
    });
  }

  // info
  {
    auto* sub = app.add_subcommand(
        "info", "Fisher information: finite value or divergence law");
    auto args = std::make_shared<CommonArgs>();
    auto trunc = std::make_shared<std::optional<double>>();
    auto nn = std::make_shared<std::optional<long long>>();
    sub->add_option("--theta", args->theta, "family parameter")->required();
    sub->add_option("--theta-max", args->theta_max, "upper theta limit");
    sub->add_option("--trunc-log", *trunc,
                    "report J(U) truncated at log x = U instead");
    sub->add_option("--n", *nn, "sample size for the Cramer-Rao bound column");
    sub->add_flag("--json", args->as_json, "JSON output");
    sub->callback([&action, args, trunc, nn]() {
      action = [args, trunc, nn]() { return cmd_info(*args, *trunc, *nn); };
    });
  }

  // median-curve
  {
    auto* sub =
        app.add_subcommand("median-curve", "CSV of (theta, median) pairs");
    auto from = std::make_shared<double>(1.0);
    auto to = std::make_shared<double>(2.0);
    auto points = std::make_shared<long long>(101);
    auto theta_max = std::make_shared<double>(logpareto::kDefaultThetaMax);
    auto as_json = std::make_shared<bool>(false);
    sub->add_option("--from", *from, "grid start")->required();
    sub->add_option("--to", *to, "grid end")->required();
    sub->add_option("--points", *points, "grid size")->required();
    sub->add_option("--theta-max", *theta_max, "upper theta limit");
    sub->add_flag("--json", *as_json, "JSON output");
    sub->callback([&action, from, to, points, theta_max, as_json]() {
      action = [=]() {
        return cmd_median_curve(*from, *to, *points, *theta_max, *as_json);
      };
    });
  }

  // sample
  {
    auto* sub = app.add_subcommand("sample", "Draw an i.i.d. batch");
    auto theta = std::make_shared<double>(1.0);
    auto n = std::make_shared<long long>(10);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto theta_max = std::make_shared<double>(logpareto::kDefaultThetaMax);
    auto as_json = std::make_shared<bool>(false);
    sub->add_option("--theta", *theta, "family parameter")->required();
    sub->add_option("--n", *n, "batch size")->required();
    sub->add_option("--seed", *seed, "RNG seed (default from LOGPARETO_SEED)");
    sub->add_option("--theta-max", *theta_max, "upper theta limit");
    sub->add_flag("--json", *as_json, "JSON output");
    sub->callback([&action, sub, theta, n, seed, theta_max, as_json]() {
      action = [=]() {
        return cmd_sample(*theta, *n, resolve_seed(sub, *seed), *theta_max,
                          *as_json);
      };
    });
  }

  // experiment
  {
    auto* sub = app.add_subcommand(
        "experiment", "Monte Carlo bias/variance of an estimator");
    auto cfg = std::make_shared<logpareto::ExperimentConfig>();
    auto estimator = std::make_shared<std::string>("median");
    auto seed = std::make_shared<std::uint64_t>(0);
    auto bias_slope = std::make_shared<double>(0.0);
    auto measure = std::make_shared<bool>(false);
    auto bias_step = std::make_shared<double>(0.1);
    auto bias_trials = std::make_shared<long long>(0);
    auto as_json = std::make_shared<bool>(false);
    sub->add_option("--theta", cfg->theta, "true parameter")->required();
    sub->add_option("--n", cfg->n, "batch size (odd, n = 2m+1)")->required();
    sub->add_option("--trials", cfg->trials, "number of trials")->required();
    sub->add_option("--estimator", *estimator, "median or mle")
        ->check(CLI::IsMember({"median", "mle"}));
    sub->add_option("--seed", *seed, "RNG seed (default from LOGPARETO_SEED)");
    sub->add_option("--threads", cfg->threads, "worker count");
    sub->add_option("--theta-max", cfg->theta_max, "upper theta limit");
    sub->add_option("--bias-slope", *bias_slope,
                    "dF/dtheta for the generalized bound");
    sub->add_flag("--measure-bias-slope", *measure,
                  "estimate dF/dtheta from a 3-point bias curve");
    sub->add_option("--bias-step", *bias_step, "bias-curve grid step");
    sub->add_option("--bias-trials", *bias_trials,
                    "trials per bias-curve point (default: --trials)");
    sub->add_flag("--json", *as_json, "JSON output");
    sub->callback([&action, sub, cfg, estimator, seed, bias_slope, measure,
                   bias_step, bias_trials, as_json]() {
      action = [=]() {
        cfg->estimator = *estimator == "median"
                             ? logpareto::EstimatorKind::median
                             : logpareto::EstimatorKind::mle;
        cfg->seed = resolve_seed(sub, *seed);
        if (sub->count("--bias-slope")) cfg->bias_slope = *bias_slope;
        const long long bt = *bias_trials > 0 ? *bias_trials : cfg->trials;
        return cmd_experiment(*cfg, *measure, *bias_step, bt, *as_json);
      };
    });
  }

  // dct-check
  {
    auto* sub = app.add_subcommand(
        "dct-check", "Dominating-bound grid and limit-integral ladder");
    auto as_json = std::make_shared<bool>(false);
    sub->add_flag("--json", *as_json, "JSON output");
    sub->callback([&action, as_json]() {
      action = [as_json]() { return cmd_dct_check(*as_json); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const logpareto::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
