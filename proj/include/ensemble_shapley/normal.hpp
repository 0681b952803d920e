// Copyright 2026 The ensemble-shapley Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

namespace ensemble_shapley {

/// Standard normal CDF via the complementary error function. glibc's erfc is
/// accurate to a few ulp, which keeps the absolute error far below 1e-12 over
/// the whole real line (including both tails).
double standard_normal_cdf(double z) noexcept;

/// CDF of Normal(mean, variance) at x. Requires variance > 0.
double normal_cdf(double x, double mean, double variance) noexcept;

/// P(lower <= X < upper) for X ~ Normal(mean, variance). Evaluated as a
/// difference of upper-tail probabilities when both endpoints sit above the
/// mean, so small intervals far in the right tail do not cancel to zero.
double normal_interval_probability(double lower, double upper, double mean,
                                   double variance) noexcept;

}  // namespace ensemble_shapley
