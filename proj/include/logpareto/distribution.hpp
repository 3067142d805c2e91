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

#ifndef LOGPARETO_DISTRIBUTION_HPP_
#define LOGPARETO_DISTRIBUTION_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace logpareto {

// Support starts at x = e; in log space at u = 1.
inline constexpr double kSupportMin = 2.718281828459045235360287;
inline constexpr double kDefaultThetaMax = 10.0;

// The density family
//
//   f(x; theta) = a_theta x^{-theta} log^{-3} x   for x >= e,  0 otherwise,
//
// parameterized by theta in [1, theta_max]. Everything reduces to the
// generalized exponential integral after u = log x:
//
//   1/a_theta = E_3(s),  da/dtheta = a^2 E_2(s),  s = theta - 1,
//   S(x) = a (log x)^{-2} E_3(s log x),
//
// so the normalization derivative at theta = 1 is the analytic limit
// a^2 E_2(0) = 4 rather than a finite difference (the log^2 variant of the
// family would make that one-sided derivative infinite).
class LogPareto {
 public:
  explicit LogPareto(double theta, double theta_max = kDefaultThetaMax);

  double theta() const { return theta_; }
  double theta_max() const { return theta_max_; }
  double norm_constant() const { return a_; }        // a_theta
  double norm_derivative() const { return da_; }     // da/dtheta (one-sided at 1)
  double score_offset() const { return c_; }         // c = da/(a dtheta) = E[log X]

  double pdf(double x) const;
  double log_pdf(double x) const;  // -inf below support
  double cdf(double x) const;
  double survival(double x) const;
  double quantile(double p) const;  // p in [0, 1)
  double score(double x) const;     // d log f / d theta = c - log x; x >= e
  double median() const { return quantile(0.5); }

  // Log-space surface (u = log x). All sampling and estimator machinery
  // works here: at theta = 1 the capped quantile reaches u ~ 1e6 where
  // x = e^u overflows double.
  double density_u(double u) const;   // density of U = log X
  double survival_u(double u) const;
  double cdf_u(double u) const;
  double quantile_u(double p) const;
  double median_u() const { return quantile_u(0.5); }

 private:
  double theta_, theta_max_, s_, e3_, a_, da_, c_;
};

struct NormalizationResult {
  double a_theta;
  double da_dtheta;
};

NormalizationResult normalization(double theta,
                                  double theta_max = kDefaultThetaMax);

// An i.i.d. batch, stored in log space. Regeneration from the same
// (theta, seed, n) is bit-identical; every exp(log_values[i]) >= e.
struct SampleBatch {
  double theta = 1.0;
  std::uint64_t seed = 0;
  std::vector<double> log_values;

  std::vector<double> values() const;  // x_i; may overflow to +inf in the
                                       // extreme tail at theta near 1
};

// Inverse-CDF sampling with uniforms from a counter RNG keyed on
// (seed, stream, index). p is capped at 1 - 1e-12 (p = 1 maps to infinity).
SampleBatch sample(std::int64_t n, double theta, std::uint64_t seed,
                   std::uint64_t stream = 0,
                   double theta_max = kDefaultThetaMax);

// (theta, median) pairs over a grid; strictly decreasing in theta.
std::vector<std::pair<double, double>> median_curve(
    const std::vector<double>& theta_grid,
    double theta_max = kDefaultThetaMax);

// Monotone cubic Hermite interpolant of p -> quantile_u(p), indexed by
// v = -log(1-p) so the tail is resolved uniformly. Covers the full capped
// range p <= 1 - 1e-12; per-node values and slopes are exact, which keeps
// the round-trip error |cdf(Q(p)) - p| below ~1e-10. Used by the bulk
// sampler; the exact root-finding quantile stays the reference path.
class QuantileTable {
 public:
  explicit QuantileTable(const LogPareto& dist, int intervals = 4096);
  double quantile_u(double p) const;

 private:
  double dv_;
  std::vector<double> u_, dudv_;
};

}  // namespace logpareto

#endif  // LOGPARETO_DISTRIBUTION_HPP_
