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

#ifndef LOGPARETO_INFORMATION_HPP_
#define LOGPARETO_INFORMATION_HPP_

#include <vector>

#include "logpareto/distribution.hpp"
#include "logpareto/quadrature.hpp"

namespace logpareto {

// Expected squared score over x in [e, e^U]:
//   J_theta(U) = a \int_1^U (c - u)^2 e^{-su} u^{-3} du,  s = theta - 1.
// At theta = 1 this equals 2 ln U + 8/U - 4/U^2 - 4 and grows without
// bound; for theta > 1 it converges to the Fisher information.
// upper_log = 1 gives the empty range (0); values below 1 are rejected.
double fisher_truncated(double theta, double upper_log,
                        const QuadratureOptions& opts = {});

// Fisher information for theta > 1 in closed form,
//   I(theta) = E_1(s)/E_3(s) - (E_2(s)/E_3(s))^2,
// and by direct semi-infinite quadrature of the variance integral. The two
// are independent routes and are held to 1e-8 relative agreement in tests.
double fisher_closed_form(double theta);
double fisher_quadrature(double theta, const QuadratureOptions& opts = {});

// Least-squares fit of the truncation ladder U = U0 * 2^k, k = 0..points-1
// against {ln U, 1, 1/U, 1/U^2}; the transient terms are required because
// J_1's 8/U tail decays too slowly for a two-term regression over this
// ladder. For theta = 1 the fit recovers rate 2, offset -4.
struct TruncationFit {
  double rate;    // coefficient of ln U
  double offset;  // constant term
  std::vector<double> upper_logs;
  std::vector<double> values;
};
TruncationFit fit_truncation_ladder(double theta, double u0 = 8.0,
                                    int points = 7);

struct InformationResult {
  enum class Kind { finite, divergent };
  double theta;
  Kind kind;
  double value = 0.0;   // finite case
  double rate = 0.0;    // divergent case: J(U) ~ rate * ln U + offset
  double offset = 0.0;

  bool divergent() const { return kind == Kind::divergent; }
};

// theta within 1e-12 of 1 is treated as 1 (below quadrature resolution the
// finite/divergent distinction is meaningless); the divergent result
// carries the fitted (rate, offset) so callers can report the growth law.
InformationResult fisher(double theta);

struct CramerRaoBound {
  double theta;
  long long n;
  double bias_slope;
  double bound;
  bool no_information;  // true when the information diverges (bound 0)
};

// var(theta-hat) >= (1 + bias_slope)^2 / (n I(theta)); bias_slope is the
// derivative of the estimator's bias, 0 for the unbiased form. Divergent
// information yields the trivial bound 0.
CramerRaoBound cr_bound(double theta, long long n, double bias_slope = 0.0);

}  // namespace logpareto

#endif  // LOGPARETO_INFORMATION_HPP_
