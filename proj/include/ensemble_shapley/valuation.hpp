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
#include <string>
#include <vector>

#include "ensemble_shapley/game.hpp"
#include "ensemble_shapley/solvers.hpp"

namespace ensemble_shapley {

/// Shapley values of one data point. Exactly one of the two vectors can be
/// nonzero: the ensemble game's when the point is classified (the grand
/// coalition wins), the dual game's otherwise.
struct PointValuation {
  std::size_t index = 0;
  ShapleyVector ensemble_shapley;
  ShapleyVector dual_shapley;
  bool classified = false;
};

/// Conditional averages over classified (positive) and misclassified
/// (negative) points. An average over an empty set is absent.
struct ConditionalAverages {
  std::optional<std::vector<double>> avg_positive;
  std::optional<std::vector<double>> avg_negative;
  std::size_t n_positive = 0;
  std::size_t n_negative = 0;
};

struct ConditionalSummary {
  ConditionalAverages averages;
  std::optional<double> entropy_positive;
  std::optional<double> entropy_negative;
};

struct ValuationReport {
  std::vector<std::string> model_ids;
  double cutoff = 0.5;
  SolverTag solver = SolverTag::emc;
  SolverConfig config;
  ConditionalSummary raw;
  ConditionalSummary normalized;

  /// The variant selected by config.normalize.
  const ConditionalSummary& primary() const noexcept {
    return config.normalize ? normalized : raw;
  }
};

struct TroupeResult {
  /// Raw (unnormalized) solver output per point, in ascending point order.
  std::vector<PointValuation> points;
  ValuationReport report;
};

/// Scores one point, builds its ensemble game, and solves either that game
/// (if the grand coalition wins) or its dual. The dual is reparametrized
/// inline from the scored weights and their moments. Returns raw values;
/// config.normalize is ignored. For the Monte Carlo solver the caller
/// supplies the per-point seed through config.seed.
PointValuation value_point(std::span<const double> probabilities_row, int label,
                           std::size_t index, double cutoff, const SolverConfig& config,
                           SolverTag solver);

/// Values every point of the dataset and aggregates the report. Points are
/// solved on `threads` workers (0 picks the hardware concurrency); per-point
/// Monte Carlo seeds are derived from (config.seed, point index) and the
/// reduction runs in ascending point order, so output does not depend on the
/// thread count.
TroupeResult troupe(const PredictionDataset& dataset, double cutoff, const SolverConfig& config,
                    SolverTag solver = SolverTag::emc, std::size_t threads = 1);

ConditionalAverages average_conditional(std::span<const PointValuation> valuations);

/// Entropy (natural log) of phi_bar after renormalizing it to sum 1.
/// 0 log 0 = 0. Throws DegenerateError for an all-zero vector and
/// ValidationError for negative components.
double shapley_entropy(std::span<const double> phi_bar);

/// Builds raw and normalized summaries from raw per-point values.
ValuationReport build_report(std::span<const PointValuation> points,
                             std::vector<std::string> model_ids, double cutoff,
                             SolverTag solver, const SolverConfig& config);

struct BoundParameters {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  double epsilon = 0.0;
  double alpha = 0.05;
};

struct ErrorBound {
  double probability = 0.0;
  /// The bound is at least 1 and therefore says nothing.
  bool vacuous = false;
};

/// Tail bound on the deviation of the average approximation error from its
/// expectation: 2 exp(-sqrt(n^2 m eps^4 pi / 8)). Uses n, m and epsilon.
ErrorBound error_bound(const BoundParameters& params);

/// Smallest n with n >= sqrt(8 ln^2(alpha/2) / (eps^4 m pi)).
std::uint64_t required_sample_size(std::uint64_t m, double epsilon, double alpha);

/// Per-game bound on the expected-marginal-contribution error: sqrt(8/(m pi)).
double lemma_bound(std::uint64_t m);

}  // namespace ensemble_shapley
