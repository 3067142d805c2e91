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

#ifndef LOGPARETO_EXPINT_HPP_
#define LOGPARETO_EXPINT_HPP_

#include <stdexcept>

namespace logpareto {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

// Raised when an iterative scheme fails to converge (distinct from
// domain errors; the CLI maps it to its numerical-failure exit code).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generalized exponential integral E_n(x) = \int_1^inf e^{-x t} t^{-n} dt
// for integer n >= 1 and x >= 0.
//
// Power series for x <= 1, modified-Lentz continued fraction for x > 1;
// relative accuracy ~1e-15 in both regimes. E_1(0) is the divergent case
// and returns +infinity; E_n(0) = 1/(n-1) otherwise.
//
// Throws std::domain_error for n < 1 or x < 0.
double expint(int n, double x);

}  // namespace logpareto

#endif  // LOGPARETO_EXPINT_HPP_
