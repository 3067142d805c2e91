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

#include "logpareto/information.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "logpareto/expint.hpp"

namespace logpareto {

namespace {
constexpr double kThetaSnap = 1e-12;  // theta within this of 1 is treated as 1

// Solve the 4x4 normal equations by Gaussian elimination with partial
// pivoting; enough for the fixed ladder design matrix.
std::array<double, 4> solve4(std::array<std::array<double, 4>, 4> m,
                             std::array<double, 4> rhs) {
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[pivot][col])) pivot = r;
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    if (m[col][col] == 0.0)
      throw NumericalError("truncation fit: singular normal equations");
    for (int r = col + 1; r < 4; ++r) {
      const double f = m[r][col] / m[col][col];
      for (int c = col; c < 4; ++c) m[r][c] -= f * m[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<double, 4> x{};
  for (int r = 3; r >= 0; --r) {
    double acc = rhs[r];
    for (int c = r + 1; c < 4; ++c) acc -= m[r][c] * x[c];
    x[r] = acc / m[r][r];
  }
  return x;
}

}  // namespace

double fisher_truncated(double theta, double upper_log,
                        const QuadratureOptions& opts) {
  if (!(theta >= 1.0))
    throw std::domain_error("fisher_truncated: theta must be >= 1");
  if (!(upper_log >= 1.0))
    throw std::domain_error("fisher_truncated: upper_log must be >= 1");
  if (upper_log == 1.0) return 0.0;

  const LogPareto dist(theta);
  const double s = theta - 1.0;
  const double c = dist.score_offset();
  const double a = dist.norm_constant();
  auto integrand = [s, c](double u) {
    const double d = c - u;
    return d * d * std::exp(-s * u) / (u * u * u);
  };
  if (std::isinf(upper_log)) {
    // divergent at theta = 1: sentinel, not an exception
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    return a * integrate_half_line(integrand, 1.0, opts);
  }
  return a * integrate(integrand, 1.0, upper_log, opts);
}

double fisher_closed_form(double theta) {
  if (!(theta > 1.0))
    throw std::domain_error("fisher_closed_form: requires theta > 1");
  const double s = theta - 1.0;
  const double e3 = expint(3, s);
  const double c = expint(2, s) / e3;
  return expint(1, s) / e3 - c * c;
}

double fisher_quadrature(double theta, const QuadratureOptions& opts) {
  if (!(theta > 1.0))
    throw std::domain_error("fisher_quadrature: requires theta > 1");
  return fisher_truncated(theta, std::numeric_limits<double>::infinity(), opts);
}

TruncationFit fit_truncation_ladder(double theta, double u0, int points) {
  if (points < 4)
    throw std::domain_error("fit_truncation_ladder: need at least 4 points");
  TruncationFit fit;
  fit.upper_logs.reserve(points);
  fit.values.reserve(points);
  double u = u0;
  for (int k = 0; k < points; ++k, u *= 2.0) {
    fit.upper_logs.push_back(u);
    fit.values.push_back(fisher_truncated(theta, u));
  }

  std::array<std::array<double, 4>, 4> normal{};
  std::array<double, 4> rhs{};
  for (int k = 0; k < points; ++k) {
    const double uu = fit.upper_logs[k];
    const std::array<double, 4> row = {std::log(uu), 1.0, 1.0 / uu,
                                       1.0 / (uu * uu)};
    for (int i = 0; i < 4; ++i) {
      rhs[i] += row[i] * fit.values[k];
      for (int j = 0; j < 4; ++j) normal[i][j] += row[i] * row[j];
    }
  }
  const auto coef = solve4(normal, rhs);
  fit.rate = coef[0];
  fit.offset = coef[1];
  return fit;
}

InformationResult fisher(double theta) {
  if (!(theta >= 1.0 - kThetaSnap))
    throw std::domain_error("fisher: theta must be >= 1");
  if (std::fabs(theta - 1.0) <= kThetaSnap) {
    const auto fit = fit_truncation_ladder(1.0);
    return {1.0, InformationResult::Kind::divergent, 0.0, fit.rate,
            fit.offset};
  }
  return {theta, InformationResult::Kind::finite, fisher_closed_form(theta),
          0.0, 0.0};
}

CramerRaoBound cr_bound(double theta, long long n, double bias_slope) {
  if (n < 1) throw std::domain_error("cr_bound: n must be >= 1");
  const InformationResult info = fisher(theta);
  if (info.divergent()) return {theta, n, bias_slope, 0.0, true};
  const double factor = 1.0 + bias_slope;
  const double bound =
      factor * factor / (static_cast<double>(n) * info.value);
  return {theta, n, bias_slope, bound, false};
}

}  // namespace logpareto
