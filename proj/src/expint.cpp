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

#include "logpareto/expint.hpp"

#include <cmath>
#include <limits>

namespace logpareto {

namespace {

// E_n(x) for x > 1 via the continued fraction
//   E_n(x) = e^{-x} / (x + n - 1*n/(x + n + 2 - 2(n+1)/(x + n + 4 - ...)))
// evaluated with the modified Lentz algorithm.
double expint_cf(int n, double x) {
  constexpr int kMaxIter = 400;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = 1e-300;

  double b = x + n;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * (n - 1 + i);
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0) <= kEps) return h * std::exp(-x);
  }
  throw NumericalError("expint: continued fraction failed to converge");
}

// E_n(x) for 0 < x <= 1 via the power series
//   E_n(x) = (-x)^{n-1}/(n-1)! [psi(n) - ln x] - sum_{m != n-1} (-x)^m / ((m-n+1) m!)
double expint_series(int n, double x) {
  constexpr int kMaxIter = 400;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  const int nm1 = n - 1;
  double ans = (nm1 != 0) ? 1.0 / nm1 : -std::log(x) - kEulerGamma;
  double fact = 1.0;
  for (int i = 1; i <= kMaxIter; ++i) {
    fact *= -x / i;
    double del;
    if (i != nm1) {
      del = -fact / (i - nm1);
    } else {
      double psi = -kEulerGamma;
      for (int k = 1; k <= nm1; ++k) psi += 1.0 / k;
      del = fact * (psi - std::log(x));
    }
    ans += del;
    if (std::fabs(del) < std::fabs(ans) * kEps) return ans;
  }
  throw NumericalError("expint: series failed to converge");
}

}  // namespace

double expint(int n, double x) {
  if (n < 1) throw std::domain_error("expint: order must be >= 1");
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("expint: argument must be >= 0");
  if (x == 0.0) {
    if (n == 1) return std::numeric_limits<double>::infinity();
    return 1.0 / (n - 1);
  }
  return (x > 1.0) ? expint_cf(n, x) : expint_series(n, x);
}

}  // namespace logpareto
