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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ensemble_shapley/game.hpp"

namespace ensemble_shapley {

enum class SolverTag { exact, mc, mle, emc };

std::string_view to_string(SolverTag tag) noexcept;
/// Accepts "exact", "mc", "mle", "emc"; throws ValidationError otherwise.
SolverTag parse_solver_tag(std::string_view name);

inline constexpr std::size_t kDefaultEnumerationLimit = 20;
// 2^m doubles are materialized; past this the tables stop fitting in memory.
inline constexpr std::size_t kMaxEnumerationLimit = 30;

struct SolverConfig {
  std::uint64_t permutations = 1000;  // Monte Carlo only
  double stability = 1e-9;            // variance floor for the Gaussian solvers
  std::uint64_t seed = 42;
  bool normalize = true;             // scale to sum 1, won games only
  std::size_t enumeration_limit = kDefaultEnumerationLimit;

  /// Throws ValidationError on p < 1, negative or non-finite stability, or an
  /// enumeration limit above kMaxEnumerationLimit.
  void validate() const;
};

struct ShapleyVector {
  std::vector<double> values;
  SolverTag solver = SolverTag::exact;
  bool normalized = false;

  double sum() const noexcept;
};

/// Scales values to sum to 1 when their sum is positive; otherwise returns
/// the input unchanged (lost games stay all-zero).
ShapleyVector normalize(ShapleyVector shapley);

/// Shapley values of a generic m-player game given v on every coalition.
/// table[mask] is v(S) for the coalition whose members are the set bits of
/// mask; table.size() must be 2^m.
std::vector<double> shapley_from_value_table(std::span<const double> table);

/// Exact values by subset enumeration with factorial weights, O(2^m m).
/// Coalition weights are summed in ascending player order. Refuses games
/// larger than `enumeration_limit` with EnumerationLimitError.
ShapleyVector exact_shapley(const SimplifiedGame& game,
                            std::size_t enumeration_limit = kDefaultEnumerationLimit);

/// Number of sampled permutations in which each player is pivotal. The
/// counts sum to p * (v(M) - v(empty)) exactly.
std::vector<std::uint64_t> mc_pivot_counts(const SimplifiedGame& game,
                                           std::uint64_t permutations, std::uint64_t seed);

/// Monte Carlo permutation sampling: pivot counts divided by p.
ShapleyVector mc_shapley(const SimplifiedGame& game, const SolverConfig& config);

/// Multilinear-extension approximation: the probability that a single
/// Normal(mean, max(variance, stability)) draw falls in [cutoff - w_j, cutoff).
ShapleyVector mle_shapley(const SimplifiedGame& game, const SolverConfig& config);

/// Expected marginal contributions. For each coalition size k-1 = 0..m-1 the
/// coalition weight is modeled as Normal((k-1) mean, max((k-1) variance,
/// stability)) and player j collects the probability that it lands in the
/// pivotal interval [cutoff - w_j, cutoff). The empty coalition (k = 1) has
/// weight exactly 0. Values are averaged over the m sizes. O(m^2).
ShapleyVector emc_shapley(const SimplifiedGame& game, const SolverConfig& config);

/// Dispatches on the tag. The exact solver honors config.normalize and
/// config.enumeration_limit like the others. With config.normalize set, values
/// of a won game are scaled to sum to 1; a lost game keeps its raw values.
ShapleyVector solve(const SimplifiedGame& game, SolverTag solver, const SolverConfig& config);

inline constexpr double kPercentageErrorFloor = 1e-12;

struct SolverErrorRow {
  SolverTag solver = SolverTag::emc;
  std::vector<double> values;
  std::vector<double> absolute_error;
  /// |estimate - exact| / max(|exact|, floor) * 100.
  std::vector<double> percentage_error;
  /// True where |exact| < floor and the denominator was floored.
  std::vector<bool> floored;
  /// Mean percentage error over models whose exact value was not floored;
  /// absent when every model was floored (e.g. a lost game).
  std::optional<double> mean_percentage_error;
  double mean_absolute_error = 0.0;
};

struct SolverComparison {
  ShapleyVector exact;
  std::vector<SolverErrorRow> rows;
};

/// Compares the approximate solvers against the exact one on a single game.
/// Normalization follows config.normalize exactly as in solve().
SolverComparison compare_solvers(const SimplifiedGame& game, const SolverConfig& config,
                                 std::span<const SolverTag> solvers = {});

SolverErrorRow score_against_exact(SolverTag solver, std::vector<double> estimate,
                                   std::span<const double> exact);

}  // namespace ensemble_shapley
