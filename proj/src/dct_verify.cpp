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

#include "logpareto/dct_verify.hpp"

#include <cmath>
#include <stdexcept>

#include "logpareto/distribution.hpp"

namespace logpareto {

const std::array<double, 9> kDominationGridH = {1e-8, 1e-4, 1e-2, 0.1, 0.5,
                                                1.0,  2.0,  5.0,  10.0};
const std::array<double, 6> kDominationGridX = {
    kSupportMin,        // e
    2.7456010150169163, // e^1.01
    7.3890560989306495, // e^2
    54.598150033144236, // e^4
    22026.465794806718, // e^10
    1e6};

DominationCheck domination_holds(double h, double x) {
  if (!(h > 0.0)) throw std::domain_error("domination_holds: h must be > 0");
  if (!(x >= kSupportMin))
    throw std::domain_error("domination_holds: x must be >= e");
  const double log_x = std::log(x);
  // (1 - x^h)/(h x^h) = (x^{-h} - 1)/h = expm1(-h log x)/h, which is
  // cancellation-safe for tiny h log x and overflow-safe for large.
  const double ratio = std::expm1(-h * log_x) / h;
  const double bound = kSupportMin * log_x;
  return {h, x, ratio, bound, std::fabs(ratio) <= bound};
}

LimitCheckReport limit_check(double x, const std::vector<double>& h_sequence) {
  if (!(x >= kSupportMin))
    throw std::domain_error("limit_check: x must be >= e");
  if (h_sequence.empty())
    throw std::domain_error("limit_check: h sequence must be nonempty");
  for (std::size_t i = 0; i < h_sequence.size(); ++i) {
    if (!(h_sequence[i] > 0.0))
      throw std::domain_error("limit_check: h values must be positive");
    if (i > 0 && !(h_sequence[i] < h_sequence[i - 1]))
      throw std::domain_error("limit_check: h sequence must strictly decrease");
  }

  LimitCheckReport report;
  report.x = x;
  report.limit = -std::log(x);
  report.entries.reserve(h_sequence.size());
  for (double h : h_sequence) {
    const double ratio = std::expm1(-h * std::log(x)) / h;
    report.entries.push_back({h, ratio, std::fabs(ratio - report.limit)});
  }
  const std::size_t n = report.entries.size();
  const std::size_t tail = n >= 3 ? 3 : n;
  report.max_tail_deviation = 0.0;
  for (std::size_t i = n - tail; i < n; ++i)
    report.max_tail_deviation =
        std::max(report.max_tail_deviation, report.entries[i].deviation);
  report.tail_monotone = true;
  for (std::size_t i = n - tail; i + 1 < n; ++i)
    if (!(report.entries[i + 1].deviation <= report.entries[i].deviation))
      report.tail_monotone = false;
  return report;
}

LimitIntegralReport dominated_limit_integral(const QuadratureOptions& opts) {
  LimitIntegralReport report;
  double h = 1.0;
  for (int k = 0; k <= 8; ++k, h *= 0.1) {
    // u = log x turns the integrand into expm1(-h u)/h * u^{-3}
    auto integrand = [h](double u) {
      return std::expm1(-h * u) / h / (u * u * u);
    };
    report.ladder.push_back({h, integrate_half_line(integrand, 1.0, opts)});
  }
  report.final_value = report.ladder.back().value;
  return report;
}

DominationGridReport domination_grid_check() {
  DominationGridReport report;
  for (double h : kDominationGridH) {
    for (double x : kDominationGridX) {
      const auto check = domination_holds(h, x);
      ++report.checked;
      if (!check.ok) {
        ++report.violations;
        report.failures.push_back(check);
      }
    }
  }
  return report;
}

}  // namespace logpareto
