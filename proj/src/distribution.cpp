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

#include "logpareto/distribution.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "logpareto/brent.hpp"
#include "logpareto/expint.hpp"
#include "logpareto/rng.hpp"

namespace logpareto {

namespace {
constexpr double kPCap = 1.0 - 1e-12;
constexpr std::int64_t kTableThreshold = 256;
}  // namespace

LogPareto::LogPareto(double theta, double theta_max)
    : theta_(theta), theta_max_(theta_max) {
  if (!(theta_max > 1.0))
    throw std::domain_error("LogPareto: theta_max must exceed 1");
  if (!(theta >= 1.0))
    throw std::domain_error(
        "LogPareto: theta below 1 (normalization integral diverges)");
  if (!(theta <= theta_max))
    throw std::domain_error("LogPareto: theta above theta_max");
  s_ = theta_ - 1.0;
  e3_ = expint(3, s_);
  a_ = 1.0 / e3_;
  da_ = a_ * a_ * expint(2, s_);
  c_ = da_ / a_;
}

double LogPareto::pdf(double x) const {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < kSupportMin) return 0.0;
  const double u = std::log(x);
  return a_ * std::exp(-theta_ * u) / (u * u * u);
}

double LogPareto::log_pdf(double x) const {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < kSupportMin) return -std::numeric_limits<double>::infinity();
  const double u = std::log(x);
  return std::log(a_) - theta_ * u - 3.0 * std::log(u);
}

double LogPareto::survival_u(double u) const {
  if (std::isnan(u)) return std::numeric_limits<double>::quiet_NaN();
  if (u <= 1.0) return 1.0;
  return a_ * expint(3, s_ * u) / (u * u);
}

double LogPareto::cdf_u(double u) const { return 1.0 - survival_u(u); }

double LogPareto::survival(double x) const {
  if (std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x < kSupportMin) return 1.0;
  return survival_u(std::log(x));
}

double LogPareto::cdf(double x) const { return 1.0 - survival(x); }

double LogPareto::quantile_u(double p) const {
  if (!(p >= 0.0 && p < 1.0))
    throw std::domain_error("quantile: p must lie in [0, 1)");
  if (p == 0.0) return 1.0;
  const double q = 1.0 - p;  // target survival
  double hi = 2.0;
  while (survival_u(hi) > q) {
    hi *= 2.0;
    if (hi > 1e300) throw NumericalError("quantile: bracket expansion failed");
  }
  auto fn = [this, q](double u) { return survival_u(u) - q; };
  return brent_root(fn, hi * 0.5 > 1.0 ? hi * 0.5 : 1.0, hi, 1e-13, 1e-13);
}

double LogPareto::quantile(double p) const { return std::exp(quantile_u(p)); }

double LogPareto::score(double x) const {
  if (!(x >= kSupportMin))
    throw std::domain_error("score: x below support (log-density undefined)");
  return c_ - std::log(x);
}

double LogPareto::density_u(double u) const {
  if (u < 1.0) return 0.0;
  return a_ * std::exp(-s_ * u) / (u * u * u);
}

NormalizationResult normalization(double theta, double theta_max) {
  const LogPareto dist(theta, theta_max);
  return {dist.norm_constant(), dist.norm_derivative()};
}

std::vector<double> SampleBatch::values() const {
  std::vector<double> out(log_values.size());
  for (std::size_t i = 0; i < log_values.size(); ++i)
    out[i] = std::exp(log_values[i]);
  return out;
}

QuantileTable::QuantileTable(const LogPareto& dist, int intervals) {
  if (intervals < 8) throw std::domain_error("QuantileTable: too few intervals");
  const double v_max = -std::log(1.0 - kPCap);
  dv_ = v_max / intervals;
  u_.resize(intervals + 1);
  dudv_.resize(intervals + 1);
  const double log_a = std::log(dist.norm_constant());
  const double s = dist.theta() - 1.0;
  for (int k = 0; k <= intervals; ++k) {
    const double v = k * dv_;
    const double p = -std::expm1(-v);
    const double u = dist.quantile_u(p);
    u_[k] = u;
    // du/dv = (1-p)/density_u(u) = exp(-v + s u + 3 log u - log a)
    dudv_[k] = std::exp(-v + s * u + 3.0 * std::log(u) - log_a);
  }
}

double QuantileTable::quantile_u(double p) const {
  const double v = -std::log1p(-p);
  double idx = v / dv_;
  int k = static_cast<int>(idx);
  const int last = static_cast<int>(u_.size()) - 2;
  if (k > last) k = last;
  const double t = idx - k;
  const double h00 = (1.0 + 2.0 * t) * (1.0 - t) * (1.0 - t);
  const double h10 = t * (1.0 - t) * (1.0 - t);
  const double h01 = t * t * (3.0 - 2.0 * t);
  const double h11 = t * t * (t - 1.0);
  return h00 * u_[k] + h10 * dv_ * dudv_[k] + h01 * u_[k + 1] +
         h11 * dv_ * dudv_[k + 1];
}

SampleBatch sample(std::int64_t n, double theta, std::uint64_t seed,
                   std::uint64_t stream, double theta_max) {
  if (n < 1) throw std::domain_error("sample: n must be >= 1");
  const LogPareto dist(theta, theta_max);
  SampleBatch batch;
  batch.theta = theta;
  batch.seed = seed;
  batch.log_values.resize(static_cast<std::size_t>(n));
  const CounterRng rng(seed, stream);

  if (n >= kTableThreshold) {
    const QuantileTable table(dist);
    for (std::int64_t i = 0; i < n; ++i) {
      const double p = std::min(rng.uniform(static_cast<std::uint64_t>(i)), kPCap);
      batch.log_values[static_cast<std::size_t>(i)] = table.quantile_u(p);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      const double p = std::min(rng.uniform(static_cast<std::uint64_t>(i)), kPCap);
      batch.log_values[static_cast<std::size_t>(i)] = dist.quantile_u(p);
    }
  }
  return batch;
}

std::vector<std::pair<double, double>> median_curve(
    const std::vector<double>& theta_grid, double theta_max) {
  if (theta_grid.empty())
    throw std::domain_error("median_curve: grid must be nonempty");
  std::vector<std::pair<double, double>> out;
  out.reserve(theta_grid.size());
  for (double theta : theta_grid)
    out.emplace_back(theta, LogPareto(theta, theta_max).median());
  return out;
}

}  // namespace logpareto
