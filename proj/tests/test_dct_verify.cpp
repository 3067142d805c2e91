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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "logpareto/dct_verify.hpp"
#include "logpareto/distribution.hpp"

using logpareto::domination_grid_check;
using logpareto::domination_holds;
using logpareto::dominated_limit_integral;
using logpareto::kSupportMin;
using logpareto::limit_check;

TEST_CASE("domination ratio point values") {
  const auto at1 = domination_holds(1.0, kSupportMin);
  CHECK(at1.ratio ==
        doctest::Approx((1.0 - kSupportMin) / kSupportMin).epsilon(1e-14));
  CHECK(at1.bound == doctest::Approx(kSupportMin).epsilon(1e-14));
  CHECK(at1.ok);

  const auto tiny_h = domination_holds(1e-8, kSupportMin);
  CHECK(tiny_h.ratio == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(tiny_h.ok);

  // x^h = 10^30 must never be formed directly
  const auto large = domination_holds(5.0, 1e6);
  CHECK(std::isfinite(large.ratio));
  CHECK(large.ratio == doctest::Approx(-0.2).epsilon(1e-10));
  CHECK(large.ok);
}

TEST_CASE("domination domain errors") {
  CHECK_THROWS_AS(domination_holds(0.0, kSupportMin), std::domain_error);
  CHECK_THROWS_AS(domination_holds(-1.0, kSupportMin), std::domain_error);
  CHECK_THROWS_AS(domination_holds(1.0, 2.0), std::domain_error);
}

TEST_CASE("appendix grid has zero violations") {
  const auto report = domination_grid_check();
  CHECK(report.checked == 54);
  CHECK(report.violations == 0);
}

TEST_CASE("sharper bound 2 log x holds when 1/h <= log x") {
  for (double h : logpareto::kDominationGridH) {
    for (double x : logpareto::kDominationGridX) {
      const double log_x = std::log(x);
      if (1.0 / h <= log_x) {
        const auto check = domination_holds(h, x);
        CHECK(std::fabs(check.ratio) <= 2.0 * log_x);
      }
    }
  }
}

TEST_CASE("limit of the ratio is -log x") {
  const auto at_e = limit_check(kSupportMin, {1e-2, 1e-4, 1e-6});
  CHECK(at_e.limit == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(at_e.tail_monotone);
  CHECK(at_e.entries.back().deviation < 1e-5);

  const auto at_e4 = limit_check(std::exp(4.0), {1e-2, 1e-4, 1e-6});
  CHECK(at_e4.limit == doctest::Approx(-4.0).epsilon(1e-14));
  CHECK(at_e4.entries.back().ratio == doctest::Approx(-4.0).epsilon(1e-5));

  const auto single = limit_check(kSupportMin, {1e-3});
  CHECK(single.entries.size() == 1);
  CHECK(single.tail_monotone);

  CHECK_THROWS_AS(limit_check(kSupportMin, {}), std::domain_error);
  CHECK_THROWS_AS(limit_check(kSupportMin, {1e-2, 1e-2}), std::domain_error);
  CHECK_THROWS_AS(limit_check(2.0, {1e-2}), std::domain_error);
}

TEST_CASE("limit integral ladder converges to -1") {
  const auto report = dominated_limit_integral();
  REQUIRE(report.ladder.size() == 9);
  // value at h = 1 equals (E_3(1) - 1/2)/1; 40-digit reference
  CHECK(report.ladder.front().value ==
        doctest::Approx(-0.39030803280223986).epsilon(1e-9));
  // every rung sits above -1 and the ladder decreases monotonically
  double prev = 0.0;
  for (const auto& entry : report.ladder) {
    CHECK(entry.value > -1.0);
    CHECK(entry.value < prev);
    prev = entry.value;
  }
  CHECK(std::fabs(report.final_value + 1.0) < 1e-6);
  // h = 1e-6 rung is already within 1e-5
  CHECK(std::fabs(report.ladder[6].value + 1.0) < 1e-5);
}
