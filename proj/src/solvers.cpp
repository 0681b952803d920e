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

#include "ensemble_shapley/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "ensemble_shapley/errors.hpp"
#include "ensemble_shapley/normal.hpp"
#include "ensemble_shapley/rng.hpp"

namespace ensemble_shapley {
namespace {

constexpr SolverTag kApproximateSolvers[] = {SolverTag::mc, SolverTag::mle, SolverTag::emc};

double floored_variance(double variance, double stability) {
  const double v = std::max(variance, stability);
  if (!(v > 0.0)) {
    throw DegenerateError(
        "weight variance is zero and the stability parameter is 0; "
        "use a positive stability (delta) to solve this game");
  }
  return v;
}

// Efficiency normalization applies to won games only; a lost game keeps its
// raw values.
ShapleyVector finish(std::vector<double> values, SolverTag tag, const SimplifiedGame& game,
                     bool normalize_values) {
  ShapleyVector out{std::move(values), tag, false};
  return normalize_values && game.outcome().won ? normalize(std::move(out)) : out;
}

}  // namespace

std::string_view to_string(SolverTag tag) noexcept {
  switch (tag) {
    case SolverTag::exact: return "exact";
    case SolverTag::mc: return "mc";
    case SolverTag::mle: return "mle";
    case SolverTag::emc: return "emc";
  }
  return "unknown";
}

SolverTag parse_solver_tag(std::string_view name) {
  for (SolverTag tag : {SolverTag::exact, SolverTag::mc, SolverTag::mle, SolverTag::emc}) {
    if (name == to_string(tag)) return tag;
  }
  throw ValidationError("unknown solver '" + std::string(name) +
                        "' (expected exact, mc, mle or emc)");
}

void SolverConfig::validate() const {
  if (permutations < 1) throw ValidationError("permutations must be at least 1");
  if (!(stability >= 0.0) || !std::isfinite(stability)) {
    throw ValidationError("stability must be a finite nonnegative number");
  }
  if (enumeration_limit > kMaxEnumerationLimit) {
    throw ValidationError("enumeration limit " + std::to_string(enumeration_limit) +
                          " exceeds the hard maximum " + std::to_string(kMaxEnumerationLimit));
  }
}

double ShapleyVector::sum() const noexcept {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

ShapleyVector normalize(ShapleyVector shapley) {
  const double total = shapley.sum();
  if (total > 0.0) {
    for (double& v : shapley.values) v /= total;
    shapley.normalized = true;
  }
  return shapley;
}

std::vector<double> shapley_from_value_table(std::span<const double> table) {
  if (table.empty() || !std::has_single_bit(table.size())) {
    throw ValidationError("value table size must be a power of two");
  }
  const std::size_t m = static_cast<std::size_t>(std::countr_zero(table.size()));
  if (m == 0) throw ValidationError("value table describes a game with no players");

  // coefficient[s] = s! (m-s-1)! / m! = 1 / (m * C(m-1, s))
  std::vector<double> coefficient(m);
  double binom = 1.0;
  for (std::size_t s = 0; s < m; ++s) {
    coefficient[s] = 1.0 / (static_cast<double>(m) * binom);
    binom = binom * static_cast<double>(m - 1 - s) / static_cast<double>(s + 1);
  }

  std::vector<double> phi(m, 0.0);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
    const auto members = static_cast<std::size_t>(std::popcount(mask));
    if (members == m) continue;
    const double base = table[mask];
    const double c = coefficient[members];
    for (std::size_t j = 0; j < m; ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (mask & bit) continue;
      const double gain = table[mask | bit] - base;
      if (gain != 0.0) phi[j] += c * gain;
    }
  }
  return phi;
}

ShapleyVector exact_shapley(const SimplifiedGame& game, std::size_t enumeration_limit) {
  const std::size_t m = game.size();
  const std::size_t limit = std::min(enumeration_limit, kMaxEnumerationLimit);
  if (m > limit) {
    throw EnumerationLimitError("exact Shapley enumeration refused: m = " + std::to_string(m) +
                                " exceeds the enumeration limit of " + std::to_string(limit));
  }
  const std::size_t count = std::size_t{1} << m;
  const auto& w = game.weights();
  // Coalition weights summed in ascending player order: the highest member
  // is always added last.
  std::vector<double> coalition_weight(count, 0.0);
  std::vector<double> value(count, 0.0);
  value[0] = game.wins(0.0) ? 1.0 : 0.0;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int top = std::bit_width(mask) - 1;
    coalition_weight[mask] = coalition_weight[mask ^ (std::size_t{1} << top)] + w[top];
    value[mask] = game.wins(coalition_weight[mask]) ? 1.0 : 0.0;
  }
  return {shapley_from_value_table(value), SolverTag::exact, false};
}

std::vector<std::uint64_t> mc_pivot_counts(const SimplifiedGame& game,
                                           std::uint64_t permutations, std::uint64_t seed) {
  const std::size_t m = game.size();
  const auto& w = game.weights();
  std::vector<std::uint64_t> counts(m, 0);
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  rng::Stream stream(seed);
  const bool empty_wins = game.wins(0.0);
  for (std::uint64_t round = 0; round < permutations; ++round) {
    for (std::size_t i = m - 1; i > 0; --i) {
      std::swap(order[i], order[stream.below(i + 1)]);
    }
    if (empty_wins) continue;  // every marginal contribution is zero
    double acc = 0.0;
    for (std::size_t j : order) {
      acc += w[j];
      if (game.wins(acc)) {
        ++counts[j];
        break;
      }
    }
  }
  return counts;
}

ShapleyVector mc_shapley(const SimplifiedGame& game, const SolverConfig& config) {
  config.validate();
  const auto counts = mc_pivot_counts(game, config.permutations, config.seed);
  std::vector<double> values(counts.size());
  const double p = static_cast<double>(config.permutations);
  for (std::size_t j = 0; j < counts.size(); ++j) values[j] = static_cast<double>(counts[j]) / p;
  return finish(std::move(values), SolverTag::mc, game, config.normalize);
}

ShapleyVector mle_shapley(const SimplifiedGame& game, const SolverConfig& config) {
  config.validate();
  const double mean = game.moments().mean;
  const double variance = floored_variance(game.moments().variance, config.stability);
  const double cutoff = game.cutoff();
  std::vector<double> values(game.size());
  for (std::size_t j = 0; j < game.size(); ++j) {
    values[j] = normal_interval_probability(cutoff - game.weights()[j], cutoff, mean, variance);
  }
  return finish(std::move(values), SolverTag::mle, game, config.normalize);
}

ShapleyVector emc_shapley(const SimplifiedGame& game, const SolverConfig& config) {
  config.validate();
  const std::size_t m = game.size();
  const auto& w = game.weights();
  const double cutoff = game.cutoff();
  const WeightMoments& moments = game.moments();

  std::vector<double> values(m, 0.0);
  // Size-0 coalition: weight is exactly zero.
  for (std::size_t j = 0; j < m; ++j) {
    if (cutoff - w[j] <= 0.0 && 0.0 < cutoff) values[j] = 1.0;
  }
  for (std::size_t size = 1; size < m; ++size) {
    const double s = static_cast<double>(size);
    const double mean = s * moments.mean;
    const double variance = floored_variance(s * moments.variance, config.stability);
    for (std::size_t j = 0; j < m; ++j) {
      values[j] += normal_interval_probability(cutoff - w[j], cutoff, mean, variance);
    }
  }
  for (double& v : values) v /= static_cast<double>(m);
  return finish(std::move(values), SolverTag::emc, game, config.normalize);
}

ShapleyVector solve(const SimplifiedGame& game, SolverTag solver, const SolverConfig& config) {
  switch (solver) {
    case SolverTag::exact: {
      config.validate();
      auto out = exact_shapley(game, config.enumeration_limit);
      return finish(std::move(out.values), SolverTag::exact, game, config.normalize);
    }
    case SolverTag::mc: return mc_shapley(game, config);
    case SolverTag::mle: return mle_shapley(game, config);
    case SolverTag::emc: return emc_shapley(game, config);
  }
  throw ValidationError("unknown solver tag");
}

SolverErrorRow score_against_exact(SolverTag solver, std::vector<double> estimate,
                                   std::span<const double> exact) {
  if (estimate.size() != exact.size()) {
    throw ValidationError("estimate and exact vectors differ in length");
  }
  SolverErrorRow row;
  row.solver = solver;
  const std::size_t m = exact.size();
  row.absolute_error.resize(m);
  row.percentage_error.resize(m);
  row.floored.resize(m);
  double ape_sum = 0.0;
  double abs_sum = 0.0;
  std::size_t counted = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double err = std::abs(estimate[j] - exact[j]);
    const bool floored = std::abs(exact[j]) < kPercentageErrorFloor;
    const double denom = floored ? kPercentageErrorFloor : std::abs(exact[j]);
    row.absolute_error[j] = err;
    row.percentage_error[j] = err / denom * 100.0;
    row.floored[j] = floored;
    abs_sum += err;
    if (!floored) {
      ape_sum += row.percentage_error[j];
      ++counted;
    }
  }
  row.values = std::move(estimate);
  row.mean_absolute_error = m ? abs_sum / static_cast<double>(m) : 0.0;
  if (counted) row.mean_percentage_error = ape_sum / static_cast<double>(counted);
  return row;
}

SolverComparison compare_solvers(const SimplifiedGame& game, const SolverConfig& config,
                                 std::span<const SolverTag> solvers) {
  config.validate();
  if (solvers.empty()) solvers = kApproximateSolvers;
  SolverComparison out;
  out.exact = solve(game, SolverTag::exact, config);
  for (SolverTag tag : solvers) {
    auto estimate = solve(game, tag, config);
    out.rows.push_back(score_against_exact(tag, std::move(estimate.values), out.exact.values));
  }
  return out;
}

}  // namespace ensemble_shapley
