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

#include "logpareto/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "logpareto/brent.hpp"
#include "logpareto/expint.hpp"
#include "logpareto/rng.hpp"

namespace logpareto {

namespace {

constexpr double kPCap = 1.0 - 1e-12;
constexpr double kFdStep = 1e-5;

double median_u_at(double theta, double theta_max) {
  return LogPareto(theta, theta_max).median_u();
}

// d median_u / d theta. Central differences with one Richardson level;
// one-sided second-order stencil at the theta = 1 boundary (the family is
// undefined below 1).
double median_u_slope(double theta, double theta_max) {
  const double h = kFdStep;
  auto mu = [theta_max](double t) { return median_u_at(t, theta_max); };
  if (theta - h >= 1.0 && theta + h <= theta_max) {
    auto central = [&](double step) {
      return (mu(theta + step) - mu(theta - step)) / (2.0 * step);
    };
    const double d1 = central(h);
    const double d2 = central(h / 2.0);
    return (4.0 * d2 - d1) / 3.0;
  }
  // one-sided second-order stencil at either boundary of [1, theta_max]
  const double dir = (theta - h < 1.0) ? h : -h;
  auto one_sided = [&](double step) {
    return (-3.0 * mu(theta) + 4.0 * mu(theta + step) -
            mu(theta + 2.0 * step)) /
           (2.0 * step);
  };
  const double d1 = one_sided(dir);
  const double d2 = one_sided(dir / 2.0);
  return 2.0 * d2 - d1;
}

double c_of_theta(double theta) {
  const double s = theta - 1.0;
  return expint(2, s) / expint(3, s);
}

}  // namespace

double median_slope(double theta, double theta_max) {
  // d median_x/d theta = median_x * d median_u/d theta
  const LogPareto dist(theta, theta_max);
  return dist.median() * median_u_slope(theta, theta_max);
}

MedianInverter::MedianInverter(double theta_max) : theta_max_(theta_max) {
  if (!(theta_max > 1.0))
    throw std::domain_error("MedianInverter: theta_max must exceed 1");
  med_u_hi_ = median_u_at(1.0, theta_max_);
  med_u_lo_ = median_u_at(theta_max_, theta_max_);
  dtheta_du_hi_ = 1.0 / median_u_slope(1.0, theta_max_);
  dtheta_du_lo_ = 1.0 / median_u_slope(theta_max_, theta_max_);
}

double MedianInverter::median_at(double theta) const {
  return LogPareto(theta, theta_max_).median();
}

double MedianInverter::median_log_at(double theta) const {
  return median_u_at(theta, theta_max_);
}

double MedianInverter::median_high() const { return std::exp(med_u_hi_); }

double MedianInverter::median_low() const { return std::exp(med_u_lo_); }

double MedianInverter::invert(double median_x) const {
  if (!(median_x > 0.0))
    throw std::domain_error("invert_median: median must be positive");
  const double w = std::log(median_x);
  if (w > med_u_hi_)
    throw std::domain_error(
        "invert_median: median above e^sqrt(2), the theta = 1 value");
  if (w < med_u_lo_)
    throw std::domain_error(
        "invert_median: median below the theta_max value");
  if (w == med_u_hi_) return 1.0;
  if (w == med_u_lo_) return theta_max_;
  auto fn = [this, w](double theta) {
    return median_u_at(theta, theta_max_) - w;
  };
  return brent_root(fn, 1.0, theta_max_, 1e-12, 1e-12);
}

MedianInverter::Result MedianInverter::invert_extended_log(
    double median_u) const {
  if (median_u > med_u_hi_) {
    const double raw = 1.0 + (median_u - med_u_hi_) * dtheta_du_hi_;
    return {1.0, raw, true};
  }
  if (median_u < med_u_lo_) {
    const double raw = theta_max_ + (median_u - med_u_lo_) * dtheta_du_lo_;
    return {theta_max_, raw, true};
  }
  auto fn = [this, median_u](double theta) {
    return median_u_at(theta, theta_max_) - median_u;
  };
  const double theta = brent_root(fn, 1.0, theta_max_, 1e-12, 1e-12);
  return {theta, theta, false};
}

MedianInverter::Result MedianInverter::invert_extended(double median_x) const {
  if (!(median_x > 0.0))
    throw std::domain_error("invert_median: median must be positive");
  return invert_extended_log(std::log(median_x));
}

double invert_median(double median_x, double theta_max) {
  return MedianInverter(theta_max).invert(median_x);
}

namespace {

double sample_median_log(std::vector<double> log_values) {
  const std::size_t n = log_values.size();
  const std::size_t mid = n / 2;
  std::nth_element(log_values.begin(), log_values.begin() + mid,
                   log_values.end());
  if (n % 2 == 1) return log_values[mid];
  const double upper = log_values[mid];
  const double lower =
      *std::max_element(log_values.begin(), log_values.begin() + mid);
  return 0.5 * (lower + upper);
}

}  // namespace

EstimateOutcome median_estimator(const SampleBatch& batch, double theta_max) {
  if (batch.log_values.empty())
    throw std::domain_error("median_estimator: batch must be nonempty");
  const MedianInverter inverter(theta_max);
  const auto inv =
      inverter.invert_extended_log(sample_median_log(batch.log_values));
  return {inv.theta, inv.theta_raw, inv.clamped};
}

EstimateOutcome mle_estimator(const SampleBatch& batch, double theta_max) {
  if (batch.log_values.empty())
    throw std::domain_error("mle_estimator: batch must be nonempty");
  double mean_log = 0.0;
  for (double u : batch.log_values) mean_log += u;
  mean_log /= static_cast<double>(batch.log_values.size());

  const double c_hi = 2.0;  // c at theta = 1
  const double c_lo = c_of_theta(theta_max);
  if (mean_log >= c_hi) return {1.0, 1.0, mean_log > c_hi};
  if (mean_log <= c_lo) return {theta_max, theta_max, mean_log < c_lo};
  auto fn = [mean_log](double theta) { return c_of_theta(theta) - mean_log; };
  const double theta = brent_root(fn, 1.0, theta_max, 1e-13, 1e-13);
  return {theta, theta, false};
}

namespace {

struct MomentAcc {
  long long count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const MomentAcc& other) {
    if (other.count == 0) return;
    if (count == 0) {
      *this = other;
      return;
    }
    const double total = static_cast<double>(count + other.count);
    const double d = other.mean - mean;
    m2 += other.m2 + d * d * static_cast<double>(count) *
                         static_cast<double>(other.count) / total;
    mean += d * static_cast<double>(other.count) / total;
    count += other.count;
  }

  double variance() const {
    return count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
  }
};

struct BlockAcc {
  MomentAcc raw;
  MomentAcc clamped;
  long long clamp_count = 0;
};

}  // namespace

EstimatorReport run_custom_experiment(
    const ExperimentConfig& config,
    const std::function<TrialOutcome(std::uint64_t)>& trial) {
  if (config.trials < 2)
    throw std::domain_error("run_experiment: trials must be >= 2");
  if (config.threads < 1)
    throw std::domain_error("run_experiment: threads must be >= 1");

  const long long trials = config.trials;
  const int blocks =
      static_cast<int>(std::min<long long>(trials, 64));
  std::vector<BlockAcc> block_acc(blocks);

  // Fixed trial->block partition; workers claim whole blocks, and blocks
  // are merged in index order, so the report is independent of the number
  // of workers and of scheduling.
  std::atomic<int> next_block{0};
  auto worker = [&]() {
    for (;;) {
      const int b = next_block.fetch_add(1);
      if (b >= blocks) return;
      const long long lo = trials * b / blocks;
      const long long hi = trials * (b + 1) / blocks;
      BlockAcc acc;
      for (long long t = lo; t < hi; ++t) {
        const TrialOutcome out = trial(static_cast<std::uint64_t>(t));
        acc.raw.add(out.raw);
        acc.clamped.add(out.clamped);
        if (out.was_clamped) ++acc.clamp_count;
      }
      block_acc[b] = acc;
    }
  };

  const int nthreads = std::min<int>(config.threads, blocks);
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  BlockAcc total;
  for (const auto& acc : block_acc) {
    total.raw.merge(acc.raw);
    total.clamped.merge(acc.clamped);
    total.clamp_count += acc.clamp_count;
  }

  EstimatorReport report;
  report.config = config;
  report.mean_estimate = total.raw.mean;
  report.bias = total.raw.mean - config.theta;
  report.variance = total.raw.variance();
  report.stddev = std::sqrt(report.variance);
  report.se_mean = report.stddev / std::sqrt(static_cast<double>(trials));
  report.se_variance =
      report.variance * std::sqrt(2.0 / static_cast<double>(trials - 1));
  report.mean_clamped = total.clamped.mean;
  report.variance_clamped = total.clamped.variance();
  report.clamp_rate =
      static_cast<double>(total.clamp_count) / static_cast<double>(trials);

  if (config.estimator == EstimatorKind::median) {
    const long long m = (config.n - 1) / 2;
    if (m >= 1) {
      const LogPareto dist(config.theta, config.theta_max);
      const double mu = dist.median();
      const double f = dist.pdf(mu);
      const double dmu = median_slope(config.theta, config.theta_max);
      report.asymptotic_variance =
          1.0 / (8.0 * static_cast<double>(m) * f * f * dmu * dmu);
    }
  }
  report.bound =
      cr_bound(config.theta, config.n, config.bias_slope.value_or(0.0));
  return report;
}

EstimatorReport run_experiment(const ExperimentConfig& config) {
  if (config.n < 1) throw std::domain_error("run_experiment: n must be >= 1");
  if (config.n % 2 == 0)
    throw std::domain_error("run_experiment: n must be odd (n = 2m + 1)");

  const LogPareto dist(config.theta, config.theta_max);
  const QuantileTable table(dist);
  const MedianInverter inverter(config.theta_max);
  const std::size_t n = static_cast<std::size_t>(config.n);
  const std::uint64_t seed = config.seed;
  const EstimatorKind kind = config.estimator;
  const double theta_max = config.theta_max;

  auto trial = [&, n, seed, kind, theta_max](std::uint64_t t) -> TrialOutcome {
    thread_local std::vector<double> buf;
    buf.resize(n);
    const CounterRng rng(seed, t);
    for (std::size_t i = 0; i < n; ++i) {
      const double p = std::min(rng.uniform(i), kPCap);
      buf[i] = table.quantile_u(p);
    }
    if (kind == EstimatorKind::median) {
      const std::size_t mid = n / 2;
      std::nth_element(buf.begin(), buf.begin() + mid, buf.end());
      const auto inv = inverter.invert_extended_log(buf[mid]);
      return {inv.theta_raw, inv.theta, inv.clamped};
    }
    double mean_log = 0.0;
    for (double u : buf) mean_log += u;
    mean_log /= static_cast<double>(n);
    SampleBatch tmp;
    tmp.theta = config.theta;
    tmp.seed = seed;
    tmp.log_values.assign(1, mean_log);  // mle depends on the mean log only
    const auto out = mle_estimator(tmp, theta_max);
    return {out.theta_raw, out.theta, out.at_boundary};
  };

  return run_custom_experiment(config, trial);
}

BiasCurve estimate_bias_curve(const std::vector<double>& theta_grid,
                              long long n, long long trials,
                              EstimatorKind estimator, std::uint64_t seed,
                              int threads, double theta_max) {
  if (theta_grid.size() < 3)
    throw std::domain_error(
        "estimate_bias_curve: grid needs >= 3 points for interior slopes");
  for (std::size_t i = 1; i < theta_grid.size(); ++i)
    if (!(theta_grid[i] > theta_grid[i - 1]))
      throw std::domain_error(
          "estimate_bias_curve: grid must be strictly increasing");

  BiasCurve curve;
  curve.points.reserve(theta_grid.size());
  for (std::size_t j = 0; j < theta_grid.size(); ++j) {
    ExperimentConfig cfg;
    cfg.theta = theta_grid[j];
    cfg.n = n;
    cfg.trials = trials;
    cfg.estimator = estimator;
    cfg.seed = CounterRng::mix64(seed + CounterRng::kGolden * (j + 1));
    cfg.threads = threads;
    cfg.theta_max = theta_max;
    const EstimatorReport report = run_experiment(cfg);
    curve.points.push_back({cfg.theta, report.bias, report.se_mean});
  }
  for (std::size_t j = 1; j + 1 < curve.points.size(); ++j) {
    const auto& lo = curve.points[j - 1];
    const auto& hi = curve.points[j + 1];
    const double span = hi.theta - lo.theta;
    curve.slopes.push_back(
        {curve.points[j].theta, (hi.bias - lo.bias) / span,
         std::sqrt(hi.se * hi.se + lo.se * lo.se) / span});
  }
  return curve;
}

}  // namespace logpareto
