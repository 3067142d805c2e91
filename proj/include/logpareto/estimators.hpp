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

#ifndef LOGPARETO_ESTIMATORS_HPP_
#define LOGPARETO_ESTIMATORS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "logpareto/distribution.hpp"
#include "logpareto/information.hpp"

namespace logpareto {

// d median(theta) / d theta in x space, by Richardson-refined finite
// differences with step 1e-5 (one-sided at the theta = 1 boundary, central
// elsewhere). The median curve is strictly decreasing, so this is < 0.
double median_slope(double theta, double theta_max = kDefaultThetaMax);

// Inverts the strictly decreasing map theta -> median(theta). The
// achievable median range is [median(theta_max), e^sqrt(2)]; medians
// outside it have no preimage.
class MedianInverter {
 public:
  explicit MedianInverter(double theta_max = kDefaultThetaMax);

  double theta_max() const { return theta_max_; }
  double median_at(double theta) const;      // x space
  double median_log_at(double theta) const;  // u space
  double median_high() const;                // at theta = 1, = e^sqrt(2)
  double median_low() const;                 // at theta_max

  // Exact inversion; throws std::domain_error outside the achievable range.
  double invert(double median_x) const;

  // Inversion with a first-order linear extension past either end of the
  // range, then clamped to [1, theta_max]. theta_raw keeps the signed
  // extended value; `clamped` records that the input was out of range.
  // The extension is what makes variance comparisons against delta-method
  // and Cramer-Rao quantities meaningful at the theta = 1 boundary, where
  // half of all sample medians land above e^sqrt(2).
  struct Result {
    double theta;
    double theta_raw;
    bool clamped;
  };
  Result invert_extended(double median_x) const;
  Result invert_extended_log(double median_u) const;

 private:
  double theta_max_;
  double med_u_hi_, med_u_lo_;      // median_u at theta = 1 and theta_max
  double dtheta_du_hi_, dtheta_du_lo_;  // extension slopes at the two ends
};

// Free-function form of the exact inversion.
double invert_median(double median_x, double theta_max = kDefaultThetaMax);

struct EstimateOutcome {
  double theta;      // clamped to [1, theta_max]
  double theta_raw;  // signed extended value (median) / equal to theta (mle)
  bool at_boundary;
};

// g(sample median): the middle order statistic for odd n (midpoint of the
// two central order statistics for even n), pushed through the inverse
// median map.
EstimateOutcome median_estimator(const SampleBatch& batch,
                                 double theta_max = kDefaultThetaMax);

// Solves the score equation c_theta = mean(log x_i). c is strictly
// decreasing from c_1 = 2, so a mean log above 2 pins the boundary
// theta = 1 (flagged); below c_theta_max pins theta_max.
EstimateOutcome mle_estimator(const SampleBatch& batch,
                              double theta_max = kDefaultThetaMax);

enum class EstimatorKind { median, mle };

struct ExperimentConfig {
  double theta = 1.0;
  long long n = 2001;       // must be odd (n = 2m + 1)
  long long trials = 1000;  // >= 2
  EstimatorKind estimator = EstimatorKind::median;
  std::uint64_t seed = 0;
  int threads = 1;
  double theta_max = kDefaultThetaMax;
  std::optional<double> bias_slope;  // feeds the attached CR bound; else 0
};

struct EstimatorReport {
  ExperimentConfig config;
  // Headline moments over the raw (extended) estimates.
  double mean_estimate = 0.0;
  double bias = 0.0;
  double variance = 0.0;
  double stddev = 0.0;
  double se_mean = 0.0;
  double se_variance = 0.0;
  // Clamped-estimator moments and how often the clamp fired.
  double mean_clamped = 0.0;
  double variance_clamped = 0.0;
  double clamp_rate = 0.0;
  // Delta-method prediction g'(median)^2 / (8 m f(median)^2); median
  // estimator only.
  std::optional<double> asymptotic_variance;
  CramerRaoBound bound{};
};

// One trial's estimates as consumed by the harness.
struct TrialOutcome {
  double raw;
  double clamped;
  bool was_clamped;
};

// Generic harness: trials are partitioned into fixed blocks merged in
// index order, so reports are bit-identical for any thread count. The
// trial callable must depend only on (config.seed, trial_index).
EstimatorReport run_custom_experiment(
    const ExperimentConfig& config,
    const std::function<TrialOutcome(std::uint64_t trial_index)>& trial);

// The spec'd experiment: per-trial batches from the counter RNG keyed on
// (seed, trial), estimator per config. Requires odd n and trials >= 2.
EstimatorReport run_experiment(const ExperimentConfig& config);

struct BiasCurvePoint {
  double theta;
  double bias;  // estimated F(theta) = E[theta_hat - theta]
  double se;
};

struct BiasSlopePoint {
  double theta;
  double slope;  // centered difference dF/dtheta
  double se;
};

struct BiasCurve {
  std::vector<BiasCurvePoint> points;
  std::vector<BiasSlopePoint> slopes;  // interior grid points
};

// Grid must have >= 3 strictly increasing points in [1, theta_max].
BiasCurve estimate_bias_curve(const std::vector<double>& theta_grid,
                              long long n, long long trials,
                              EstimatorKind estimator, std::uint64_t seed,
                              int threads = 1,
                              double theta_max = kDefaultThetaMax);

}  // namespace logpareto

#endif  // LOGPARETO_ESTIMATORS_HPP_
