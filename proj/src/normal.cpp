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

#include "ensemble_shapley/normal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace ensemble_shapley {

double standard_normal_cdf(double z) noexcept {
  return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double normal_cdf(double x, double mean, double variance) noexcept {
  return standard_normal_cdf((x - mean) / std::sqrt(variance));
}

double normal_interval_probability(double lower, double upper, double mean,
                                   double variance) noexcept {
  if (!(lower < upper)) return 0.0;
  const double scale = std::sqrt(2.0 * variance);
  const double zl = (lower - mean) / scale;
  const double zu = (upper - mean) / scale;
  double p;
  if (zl >= 0.0) {
    // Right tail: Q(lower) - Q(upper).
    p = 0.5 * (std::erfc(zl) - std::erfc(zu));
  } else {
    p = 0.5 * (std::erfc(-zu) - std::erfc(-zl));
  }
  return std::max(p, 0.0);
}

}  // namespace ensemble_shapley
