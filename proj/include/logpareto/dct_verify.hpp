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

#ifndef LOGPARETO_DCT_VERIFY_HPP_
#define LOGPARETO_DCT_VERIFY_HPP_

#include <array>
#include <vector>

#include "logpareto/quadrature.hpp"

namespace logpareto {

// Numerical checks of the dominated-convergence argument behind the
// one-sided normalization derivative: the difference-quotient kernel
// (1 - x^h)/(h x^h) is bounded by e log x for every h > 0, x >= e, and its
// h -> 0+ limit is -log x, so the limit of the perturbed normalization
// integral is -int_e^inf dx/(x log^2 x) = -1.

struct DominationCheck {
  double h;
  double x;
  double ratio;  // (1 - x^h)/(h x^h), formed as expm1(-h log x)/h
  double bound;  // e log x
  bool ok;       // |ratio| <= bound
};

// Throws std::domain_error for h <= 0 or x < e. Evaluates in log space so
// x^h never overflows (x = 1e6, h = 5 stays finite).
DominationCheck domination_holds(double h, double x);

struct LimitCheckEntry {
  double h;
  double ratio;
  double deviation;  // |ratio - (-log x)|
};

struct LimitCheckReport {
  double x;
  double limit;  // -log x
  std::vector<LimitCheckEntry> entries;
  double max_tail_deviation;  // over the final three points
  bool tail_monotone;         // deviations shrink over the final three
};

// h_sequence must be positive and strictly decreasing.
LimitCheckReport limit_check(double x, const std::vector<double>& h_sequence);

struct LimitIntegralEntry {
  double h;
  double value;  // int_e^inf (1-x^h)/(h x^h) dx/(x log^3 x) by quadrature
};

struct LimitIntegralReport {
  std::vector<LimitIntegralEntry> ladder;
  double final_value;  // value at the smallest h; converges to -1
};

// Ladder h = 1, 1e-1, ..., 1e-8. Each rung is an independent adaptive
// quadrature in u = log x space; no closed form is consulted.
LimitIntegralReport dominated_limit_integral(const QuadratureOptions& opts = {});

// Canonical appendix grid: 9 h-values x 6 x-values = 54 points.
extern const std::array<double, 9> kDominationGridH;
extern const std::array<double, 6> kDominationGridX;

struct DominationGridReport {
  int checked = 0;
  int violations = 0;
  std::vector<DominationCheck> failures;
};

DominationGridReport domination_grid_check();

}  // namespace logpareto

#endif  // LOGPARETO_DCT_VERIFY_HPP_
