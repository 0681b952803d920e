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

#include <cmath>
#include <numbers>
#include <string>

#include "ensemble_shapley/errors.hpp"
#include "ensemble_shapley/valuation.hpp"

namespace ensemble_shapley {

ErrorBound error_bound(const BoundParameters& params) {
  if (params.n == 0 || params.m == 0 || !(params.epsilon > 0.0)) {
    throw ValidationError("error bound needs n >= 1, m >= 1 and epsilon > 0");
  }
  const double n = static_cast<double>(params.n);
  const double m = static_cast<double>(params.m);
  const double eps2 = params.epsilon * params.epsilon;
  const double p = 2.0 * std::exp(-std::sqrt(n * n * m * eps2 * eps2 * std::numbers::pi / 8.0));
  return {p, p >= 1.0};
}

std::uint64_t required_sample_size(std::uint64_t m, double epsilon, double alpha) {
  if (m == 0) throw ValidationError("ensemble size m must be at least 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw ValidationError("precision epsilon must be positive");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) throw ValidationError("significance alpha must be in (0, 1)");
  const double log_term = std::log(alpha / 2.0);
  const double eps2 = epsilon * epsilon;
  const double bound = std::sqrt(8.0 * log_term * log_term /
                                 (eps2 * eps2 * static_cast<double>(m) * std::numbers::pi));
  const double n = std::ceil(bound);
  return n < 1.0 ? 1 : static_cast<std::uint64_t>(n);
}

double lemma_bound(std::uint64_t m) {
  if (m == 0) throw ValidationError("ensemble size m must be at least 1");
  return std::sqrt(8.0 / (static_cast<double>(m) * std::numbers::pi));
}

}  // namespace ensemble_shapley
