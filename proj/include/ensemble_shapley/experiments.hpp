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
#include <vector>

#include "ensemble_shapley/game.hpp"
#include "ensemble_shapley/solvers.hpp"

namespace ensemble_shapley {

/// Synthetic heterogeneous ensemble. Model j outputs
/// (1 - noise_j) * b_i + noise_j * u_ij with b_i = base_signal on positives,
/// 1 - base_signal on negatives, and u_ij ~ U(0,1).
struct SyntheticSpec {
  std::size_t n_points = 0;
  std::size_t m_models = 0;
  std::vector<double> quality_mix;  // noise ratio per model, in [0,1]
  double base_signal = 0.9;         // in (0.5, 1]
  std::uint64_t seed = 42;

  void validate() const;
};

PredictionDataset generate_synthetic(const SyntheticSpec& spec);

/// Mixes the listed columns with U(0,1) noise: p' = (1 - r) p + r u. Noise
/// draws are indexed by (point, model), so different ratios share one noise
/// field for a given seed.
PredictionDataset corrupt(const PredictionDataset& dataset,
                          std::span<const std::size_t> adversarial_models, double noise_ratio,
                          std::uint64_t seed);

/// Rank-based (Mann-Whitney) AUC; tied scores count 1/2.
double auc(std::span<const double> scores, std::span<const int> labels);

/// Fraction of points where (score >= cutoff) matches the label.
double accuracy(std::span<const double> scores, std::span<const int> labels, double cutoff);

struct AdversarialRow {
  double noise_ratio = 0.0;
  double adversarial_mean = 0.0;
  double adversarial_standard_error = 0.0;
  double honest_mean = 0.0;
  double honest_standard_error = 0.0;
  std::size_t n_positive = 0;

  double pooled_standard_error() const noexcept;
  /// (honest_mean - adversarial_mean) / pooled standard error; 0 when the
  /// pooled standard error is 0.
  double separation() const noexcept;
};

/// For each ratio: corrupt the adversarial columns, run Troupe, and report
/// the group mean of the primary positive average (with standard error of
/// the mean across group members). Noise comes from config.seed.
std::vector<AdversarialRow> adversarial_study(const PredictionDataset& dataset,
                                              std::span<const std::size_t> adversarial_models,
                                              std::span<const double> ratios, double cutoff,
                                              const SolverConfig& config,
                                              SolverTag solver = SolverTag::emc);

/// Model indices sorted by descending value, ties by ascending index.
std::vector<std::size_t> rank_by_value(std::span<const double> values);

struct PrefixScores {
  std::vector<double> accuracy;  // entry k-1 is the top-k sub-ensemble
  std::vector<double> auc;
};

/// Scores sub-ensembles formed from the first k entries of `ordering`,
/// k = 1..ordering.size(). Each sub-ensemble averages its probability
/// columns (summed in ascending model index) and thresholds at the cutoff.
PrefixScores prefix_scores(const PredictionDataset& test, std::span<const std::size_t> ordering,
                           double cutoff);

struct SelectionTrace {
  std::vector<std::size_t> ordering;
  std::vector<double> shapley;  // positive conditional average used to rank
  PrefixScores scores;
};

/// Ranks models by Troupe's positive conditional average on the valuation
/// split and scores forward sub-ensembles on the test split.
SelectionTrace forward_selection(const PredictionDataset& valuation,
                                 const PredictionDataset& test, double cutoff,
                                 const SolverConfig& config, SolverTag solver = SolverTag::emc);

struct DatasetComparisonRow {
  SolverTag solver = SolverTag::emc;
  /// Mean over points of each point's mean percentage error; absent if no
  /// point had a non-floored exact value.
  std::optional<double> mean_percentage_error;
  std::size_t points_with_percentage_error = 0;
  double mean_absolute_error = 0.0;
};

/// Solves every point's game (the dual game for misclassified points) with
/// the exact solver and each approximate solver, and averages the per-point
/// errors. Requires m within config.enumeration_limit.
std::vector<DatasetComparisonRow> compare_on_dataset(const PredictionDataset& dataset,
                                                     double cutoff, const SolverConfig& config,
                                                     std::span<const SolverTag> solvers = {});

struct SweepSize {
  std::size_t n = 0;
  std::size_t m = 0;
};

struct TimingRow {
  std::size_t n = 0;
  std::size_t m = 0;
  SolverTag solver = SolverTag::emc;
  std::size_t runs = 0;
  double mean_seconds = 0.0;
  double per_point_seconds = 0.0;
};

/// Mean wall time of the full Troupe pipeline over `runs` repetitions on a
/// synthetic dataset of each size.
std::vector<TimingRow> runtime_sweep(std::span<const SweepSize> sizes,
                                     std::span<const SolverTag> solvers,
                                     const SolverConfig& config, std::size_t runs = 10);

}  // namespace ensemble_shapley
