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

#include "qdc/stats.hpp"

#include <cmath>
#include <string>

#include "qdc/error.hpp"

namespace qdc {
namespace {

constexpr double kBoundSlack = 1e-12;

void check_args(std::uint64_t successes, std::uint64_t R, double z) {
  if (R < 1) throw ArgumentError("R must be >= 1");
  if (successes > R) {
    throw ArgumentError("successes (" + std::to_string(successes) +
                        ") exceed R (" + std::to_string(R) + ")");
  }
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw ArgumentError("z must be positive and finite");
  }
}

bool within(double bound, double epsilon) {
  return bound <= epsilon * (1.0 + kBoundSlack);
}

}  // namespace

std::string_view method_name(IntervalMethod method) {
  return method == IntervalMethod::Wald ? "wald" : "wilson";
}

IntervalMethod parse_method(std::string_view name) {
  if (name == "wald") return IntervalMethod::Wald;
  if (name == "wilson") return IntervalMethod::Wilson;
  throw ArgumentError("unknown interval method '" + std::string(name) + "'");
}

IntervalEstimate wald(std::uint64_t successes, std::uint64_t R, double z) {
  check_args(successes, R, z);
  const double r = static_cast<double>(R);
  IntervalEstimate out;
  out.method = IntervalMethod::Wald;
  out.z = z;
  out.R = R;
  out.p_hat = static_cast<double>(successes) / r;
  out.max_error = z * std::sqrt(out.p_hat * (1.0 - out.p_hat) / r);
  out.worst_case = wald_worst_case(R, z);
  out.degenerate = successes == 0 || successes == R;
  return out;
}

IntervalEstimate wilson(std::uint64_t successes, std::uint64_t R, double z) {
  check_args(successes, R, z);
  const double r = static_cast<double>(R);
  const double z2 = z * z;
  const double raw = static_cast<double>(successes) / r;
  const double shrink = 1.0 / (1.0 + z2 / r);
  IntervalEstimate out;
  out.method = IntervalMethod::Wilson;
  out.z = z;
  out.R = R;
  out.p_hat = shrink * (raw + z2 / (2.0 * r));
  out.max_error =
      z * shrink * std::sqrt(raw * (1.0 - raw) / r + z2 / (4.0 * r * r));
  out.worst_case = wilson_worst_case(R, z);
  return out;
}

double wald_worst_case(std::uint64_t R, double z) {
  if (R < 1) throw ArgumentError("R must be >= 1");
  return z / (2.0 * std::sqrt(static_cast<double>(R)));
}

double wilson_worst_case(std::uint64_t R, double z) {
  if (R < 1) throw ArgumentError("R must be >= 1");
  const double r = static_cast<double>(R);
  const double z2 = z * z;
  return std::sqrt(z2 * (r + z2) / (4.0 * r * r));
}

double worst_case_bound(IntervalMethod method, std::uint64_t R, double z) {
  return method == IntervalMethod::Wald ? wald_worst_case(R, z)
                                        : wilson_worst_case(R, z);
}

std::uint64_t shots_for_error(double epsilon, double z, IntervalMethod method) {
  if (!(epsilon > 0.0 && epsilon < 0.5)) {
    throw ArgumentError("epsilon must lie in (0, 0.5), got " +
                        std::to_string(epsilon));
  }
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw ArgumentError("z must be positive and finite");
  }
  // Both bounds decrease in R; bracket by doubling, then bisect.
  std::uint64_t hi = 1;
  while (!within(worst_case_bound(method, hi, z), epsilon)) {
    if (hi > (std::uint64_t{1} << 62)) {
      throw ArgumentError("epsilon too small for a representable shot count");
    }
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // bound(lo) > epsilon unless lo == 0
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (within(worst_case_bound(method, mid, z), epsilon)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace qdc
