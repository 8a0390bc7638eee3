// Copyright 2026 The qdc Authors
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
#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "qdc/error.hpp"
#include "qdc/stats.hpp"

namespace qdc {
namespace {

using Catch::Approx;

// Direct scan for the first R meeting the bound.
std::uint64_t scan(double eps, double z, IntervalMethod m) {
  for (std::uint64_t r = 1;; ++r) {
    const double rr = static_cast<double>(r);
    const double b = m == IntervalMethod::Wald
                         ? z / (2 * std::sqrt(rr))
                         : std::sqrt(z * z * (rr + z * z) / (4 * rr * rr));
    if (b <= eps * (1 + 1e-12)) return r;
  }
}

}  // namespace

TEST_CASE("Wald estimate", "[stats]") {
  const auto e = wald(4096, 8192, kZ99);
  CHECK(e.p_hat == 0.5);
  CHECK(e.max_error == Approx(0.01425).margin(1e-5));
  CHECK(e.worst_case == Approx(2.58 / (2 * std::sqrt(8192.0))));
  CHECK_FALSE(e.degenerate);
  const auto d = wald(10, 10, kZ99);
  CHECK(d.max_error == 0.0);
  CHECK(d.degenerate);
  CHECK(wald(0, 10, kZ99).degenerate);
  CHECK_THROWS_AS(wald(0, 0, kZ99), ArgumentError);
  CHECK_THROWS_AS(wald(11, 10, kZ99), ArgumentError);
  CHECK_THROWS_AS(wald(1, 10, 0.0), ArgumentError);
}

TEST_CASE("Wilson estimate", "[stats]") {
  const auto zero = wilson(0, 10, kZ99);
  CHECK(zero.p_hat > 0.0);
  CHECK(zero.max_error > 0.0);
  CHECK(wilson_worst_case(8192, kZ99) == Approx(0.01426).margin(1e-5));
  const auto big = wilson(12345678, 100000000, kZ99);
  CHECK(std::abs(big.p_hat - 0.12345678) < 1e-6);
  // Spot values of the closed forms.
  for (std::uint64_t r : {1ULL, 7ULL, 100ULL, 8192ULL}) {
    for (double z : {1.0, 1.96, 2.58}) {
      const std::uint64_t s = r / 3;
      const double rr = static_cast<double>(r), raw = s / rr, z2 = z * z;
      const auto w = wilson(s, r, z);
      CHECK(w.p_hat ==
            Approx((raw + z2 / (2 * rr)) / (1 + z2 / rr)).epsilon(1e-12));
      CHECK(w.max_error == Approx(z / (1 + z2 / rr) *
                                  std::sqrt(raw * (1 - raw) / rr +
                                            z2 / (4 * rr * rr)))
                               .epsilon(1e-12));
      CHECK(w.worst_case ==
            Approx(std::sqrt(z2 * (rr + z2) / (4 * rr * rr))).epsilon(1e-12));
    }
  }
}

TEST_CASE("Worst-case bounds peak at one half", "[stats][property]") {
  const std::uint64_t R = 10000;
  double best_wald = -1, best_wilson = -1;
  std::uint64_t arg_wald = 0, arg_wilson = 0;
  for (std::uint64_t k = 0; k <= 100; ++k) {
    const std::uint64_t s = k * R / 100;
    const double a = wald(s, R, kZ99).max_error;
    const double b = wilson(s, R, kZ99).max_error;
    if (a > best_wald) best_wald = a, arg_wald = k;
    if (b > best_wilson) best_wilson = b, arg_wilson = k;
    CHECK(a <= wald_worst_case(R, kZ99) + 1e-15);
    CHECK(b <= wilson_worst_case(R, kZ99) + 1e-15);
  }
  CHECK(arg_wald == 50);
  CHECK(arg_wilson == 50);
}

TEST_CASE("Shot budgets", "[stats]") {
  CHECK(shots_for_error(0.01, kZ99, IntervalMethod::Wald) == 16641);
  for (auto m : {IntervalMethod::Wald, IntervalMethod::Wilson}) {
    std::uint64_t previous = 0;
    for (double eps : {0.2, 0.1, 0.05, 0.02, 0.01}) {
      const auto r = shots_for_error(eps, kZ99, m);
      CHECK(r == scan(eps, kZ99, m));
      CHECK(worst_case_bound(m, r, kZ99) <= eps * (1 + 1e-12));
      if (r > 1) CHECK(worst_case_bound(m, r - 1, kZ99) > eps);
      CHECK(r >= previous);
      previous = r;
    }
  }
  CHECK(shots_for_error(0.01, kZ99, IntervalMethod::Wilson) == 16648);
  CHECK_THROWS_AS(shots_for_error(0.6, kZ99, IntervalMethod::Wald),
                  ArgumentError);
  CHECK_THROWS_AS(shots_for_error(0.0, kZ99, IntervalMethod::Wald),
                  ArgumentError);
  CHECK_THROWS_AS(shots_for_error(0.1, -1.0, IntervalMethod::Wald),
                  ArgumentError);
  CHECK(parse_method("wilson") == IntervalMethod::Wilson);
  CHECK(method_name(IntervalMethod::Wald) == "wald");
  CHECK_THROWS_AS(parse_method("jeffreys"), ArgumentError);
}

}  // namespace qdc
