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
/**
 * @file
 * Binomial proportion estimates for postselected readout: Wald and Wilson
 * point estimates, maximum-error bounds and shot budgets.
 */

#pragma once

#include <cstdint>
#include <string_view>

namespace qdc {

enum class IntervalMethod { Wald, Wilson };

std::string_view method_name(IntervalMethod method);

/// Throws ArgumentError for anything but "wald" or "wilson".
IntervalMethod parse_method(std::string_view name);

struct IntervalEstimate {
  double p_hat = 0.0;
  /// Half-width at this outcome.
  double max_error = 0.0;
  /// Half-width maximised over outcomes for the same R and z.
  double worst_case = 0.0;
  IntervalMethod method = IntervalMethod::Wald;
  double z = 0.0;
  std::uint64_t R = 0;
  /// Wald only: p_hat is 0 or 1, so max_error collapses to 0.
  bool degenerate = false;
};

/// z = 2.58 gives 99% confidence.
inline constexpr double kZ99 = 2.58;

/**
 * p_hat = s / R, max_error = z sqrt(p_hat (1 - p_hat) / R).
 *
 * Throws ArgumentError unless R >= 1, successes <= R and z > 0.
 */
IntervalEstimate wald(std::uint64_t successes, std::uint64_t R, double z);

/// Wilson score estimate centred on (s/R + z^2/2R) / (1 + z^2/R).
IntervalEstimate wilson(std::uint64_t successes, std::uint64_t R, double z);

/// z / (2 sqrt R).
double wald_worst_case(std::uint64_t R, double z);

/// sqrt(z^2 (R + z^2) / (4 R^2)).
double wilson_worst_case(std::uint64_t R, double z);

double worst_case_bound(IntervalMethod method, std::uint64_t R, double z);

/**
 * Smallest R whose worst-case bound is at most epsilon.
 *
 * Throws ArgumentError unless 0 < epsilon < 0.5 and z > 0. The comparison
 * allows a relative slack of 1e-12 so exact inversions survive rounding.
 */
std::uint64_t shots_for_error(double epsilon, double z, IntervalMethod method);

}  // namespace qdc
