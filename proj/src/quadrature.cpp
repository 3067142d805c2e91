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

#include "logpareto/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include "logpareto/expint.hpp"

namespace logpareto {

namespace {

// 15-point Kronrod abscissae/weights and the embedded 7-point Gauss
// weights (QUADPACK dqk15 constants).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct PanelResult {
  double value;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double halfwidth = 0.5 * (b - a);

  const double fc = f(center);
  double fv1[7], fv2[7];
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  for (int j = 0; j < 7; ++j) {
    const double dx = halfwidth * kXgk[j];
    fv1[j] = f(center - dx);
    fv2[j] = f(center + dx);
    const double fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
  }

  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::fabs(fv1[j] - reskh) + std::fabs(fv2[j] - reskh));

  const double value = resk * halfwidth;
  resabs *= std::fabs(halfwidth);
  resasc *= std::fabs(halfwidth);
  double err = std::fabs((resk - resg) * halfwidth);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double round = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, round);
  return {value, err};
}

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

double adaptive(const std::function<double(double)>& f, double a, double b,
                const QuadratureOptions& opts) {
  std::priority_queue<Panel> queue;
  auto first = gk15(f, a, b);
  if (std::isinf(first.value)) return first.value;
  if (std::isnan(first.value))
    throw NumericalError("integrate: integrand produced NaN");
  queue.push({a, b, first.value, first.error});
  double total = first.value;
  double total_err = first.error;
  int panels = 1;

  while (total_err > std::max(opts.abs_tol, opts.rel_tol * std::fabs(total))) {
    if (panels >= opts.max_panels)
      throw NumericalError("integrate: panel budget exhausted");
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b)
      throw NumericalError("integrate: interval too small to split");
    const auto left = gk15(f, worst.a, mid);
    const auto right = gk15(f, mid, worst.b);
    if (std::isinf(left.value) || std::isinf(right.value))
      return std::isinf(left.value) ? left.value : right.value;
    if (std::isnan(left.value) || std::isnan(right.value))
      throw NumericalError("integrate: integrand produced NaN");
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    queue.push({worst.a, mid, left.value, left.error});
    queue.push({mid, worst.b, right.value, right.error});
    ++panels;
  }
  return total;
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
  if (!(a < b)) {
    if (a == b) return 0.0;
    throw std::domain_error("integrate: bounds must satisfy a <= b");
  }
  return adaptive(f, a, b, opts);
}

double integrate_half_line(const std::function<double(double)>& f, double a,
                           const QuadratureOptions& opts) {
  auto mapped = [&f, a](double t) {
    const double u = a + (1.0 - t) / t;
    return f(u) / (t * t);
  };
  return adaptive(mapped, 0.0, 1.0, opts);
}

Divergence classify_divergence(const LogKernelIntegral& k) {
  if (k.theta > 1.0) return Divergence::convergent;
  if (k.theta < 1.0) return Divergence::power_divergent;
  return k.log_power >= 2 ? Divergence::convergent : Divergence::log_divergent;
}

namespace {

double truncated_kernel(double theta, int p, double upper_log,
                        const QuadratureOptions& opts) {
  const double s = theta - 1.0;
  auto integrand = [s, p](double u) {
    return std::exp(-s * u) * std::pow(u, -p);
  };
  return integrate(integrand, 1.0, upper_log, opts);
}

}  // namespace

Divergence verify_divergence_numeric(const LogKernelIntegral& k,
                                     double initial_upper_log) {
  QuadratureOptions opts;
  opts.rel_tol = 1e-9;
  double upper = initial_upper_log;
  // Increment ratio per doubling: decaying => convergent, ~1 => log-like,
  // growing => power divergence. Escalate the scale while inconclusive.
  for (int scale = 0; scale < 9; ++scale) {
    const double i1 = truncated_kernel(k.theta, k.log_power, upper, opts);
    const double i2 = truncated_kernel(k.theta, k.log_power, 2.0 * upper, opts);
    const double i3 = truncated_kernel(k.theta, k.log_power, 4.0 * upper, opts);
    if (!std::isfinite(i3)) return Divergence::power_divergent;
    const double d1 = i2 - i1;
    const double d2 = i3 - i2;
    if (d2 > 1.25 * d1) return Divergence::power_divergent;
    if (d2 < 0.8 * d1 || d2 <= 1e-12 * std::fabs(i3))
      return Divergence::convergent;
    upper *= 4.0;
  }
  return Divergence::log_divergent;
}

double integrate_log_kernel(const LogKernelIntegral& k,
                            const QuadratureOptions& opts) {
  if (k.log_power < 1)
    throw std::domain_error("integrate_log_kernel: log_power must be >= 1");
  if (!(k.upper_log > 1.0))
    throw std::domain_error("integrate_log_kernel: upper_log must exceed 1");

  const double s = k.theta - 1.0;
  const int p = k.log_power;
  if (std::isinf(k.upper_log)) {
    if (classify_divergence(k) != Divergence::convergent)
      return std::numeric_limits<double>::infinity();
    auto integrand = [s, p](double u) {
      return std::exp(-s * u) * std::pow(u, -p);
    };
    return integrate_half_line(integrand, 1.0, opts);
  }
  return truncated_kernel(k.theta, p, k.upper_log, opts);
}

}  // namespace logpareto
