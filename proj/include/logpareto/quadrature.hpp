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

#ifndef LOGPARETO_QUADRATURE_HPP_
#define LOGPARETO_QUADRATURE_HPP_

#include <functional>
#include <limits>

namespace logpareto {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_panels = 4000;
};

// Globally adaptive Gauss-Kronrod 15(7) on a finite interval. Throws
// NumericalError if the panel budget is exhausted before the requested
// tolerance is met.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

// Same scheme on [a, inf), mapped to (0, 1] via u = a + (1-t)/t. Endpoints
// are never evaluated (all Kronrod nodes are interior).
double integrate_half_line(const std::function<double(double)>& f, double a,
                           const QuadratureOptions& opts = {});

// One member of the integral family
//   \int_e^{exp(U)} dx / (x^theta log^p x)  =  \int_1^U e^{-(theta-1)u} u^{-p} du,
// expressed in log space: `upper_log` is U = log of the x-space cutoff.
struct LogKernelIntegral {
  double theta;
  int log_power;
  double upper_log = std::numeric_limits<double>::infinity();
};

enum class Divergence { convergent, log_divergent, power_divergent };

// Exact classification of the U = inf case: theta > 1 converges for every
// p >= 1; at theta = 1 the integral converges iff p >= 2 (p = 1 grows like
// log U); theta < 1 diverges like a power.
Divergence classify_divergence(const LogKernelIntegral& k);

// Operational probe of the same classification: evaluates truncations at
// U, 2U, 4U and inspects the increment pattern (constant increment per
// doubling means log-divergence), escalating U until the pattern resolves.
Divergence verify_divergence_numeric(const LogKernelIntegral& k,
                                     double initial_upper_log = 64.0);

// Evaluates the integral by adaptive quadrature in log space. Divergent
// configurations with upper_log = inf return +infinity (a sentinel, not an
// exception). Throws std::domain_error for log_power < 1 or upper_log <= 1.
double integrate_log_kernel(const LogKernelIntegral& k,
                            const QuadratureOptions& opts = {});

}  // namespace logpareto

#endif  // LOGPARETO_QUADRATURE_HPP_
