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

#include "ensemble_shapley/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "ensemble_shapley/errors.hpp"
#include "ensemble_shapley/rng.hpp"
#include "ensemble_shapley/valuation.hpp"

namespace ensemble_shapley {
namespace {

// Stream identifiers for counter-based draws.
constexpr std::uint64_t kLabelStream = 0;
constexpr std::uint64_t kSignalNoiseStream = 1;
constexpr std::uint64_t kAdversarialNoiseStream = 2;

struct GroupStats {
  double mean = 0.0;
  double standard_error = 0.0;
};

GroupStats group_stats(std::span<const double> values, std::span<const std::size_t> members) {
  GroupStats s;
  const double k = static_cast<double>(members.size());
  for (std::size_t j : members) s.mean += values[j];
  s.mean /= k;
  if (members.size() > 1) {
    double ss = 0.0;
    for (std::size_t j : members) ss += (values[j] - s.mean) * (values[j] - s.mean);
    s.standard_error = std::sqrt(ss / (k - 1.0)) / std::sqrt(k);
  }
  return s;
}

}  // namespace

void SyntheticSpec::validate() const {
  if (n_points == 0 || m_models == 0) throw ValidationError("synthetic spec needs n, m >= 1");
  if (quality_mix.size() != m_models) {
    throw ValidationError("quality mix has " + std::to_string(quality_mix.size()) +
                          " entries, expected " + std::to_string(m_models));
  }
  for (std::size_t j = 0; j < quality_mix.size(); ++j) {
    if (!(quality_mix[j] >= 0.0 && quality_mix[j] <= 1.0)) {
      throw ValidationError("noise ratio of model " + std::to_string(j + 1) + " outside [0, 1]");
    }
  }
  if (!(base_signal > 0.5 && base_signal <= 1.0)) {
    throw ValidationError("base signal must lie in (0.5, 1]");
  }
}

PredictionDataset generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n_points;
  const std::size_t m = spec.m_models;
  std::vector<int> labels(n);
  std::vector<double> probabilities(n * m);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = rng::uniform_at(spec.seed, {kLabelStream, i}) < 0.5 ? 0 : 1;
    const double signal = labels[i] == 1 ? spec.base_signal : 1.0 - spec.base_signal;
    for (std::size_t j = 0; j < m; ++j) {
      const double noise = spec.quality_mix[j];
      const double u = rng::uniform_at(spec.seed, {kSignalNoiseStream, i, j});
      probabilities[i * m + j] = (1.0 - noise) * signal + noise * u;
    }
  }
  return PredictionDataset(n, m, std::move(probabilities), std::move(labels));
}

PredictionDataset corrupt(const PredictionDataset& dataset,
                          std::span<const std::size_t> adversarial_models, double noise_ratio,
                          std::uint64_t seed) {
  if (!(noise_ratio >= 0.0 && noise_ratio <= 1.0)) {
    throw ValidationError("noise ratio must lie in [0, 1]");
  }
  const std::size_t m = dataset.n_models();
  for (std::size_t j : adversarial_models) {
    if (j >= m) throw ValidationError("adversarial model index " + std::to_string(j) + " out of range");
  }
  std::vector<double> probabilities = dataset.probabilities();
  for (std::size_t i = 0; i < dataset.n_points(); ++i) {
    for (std::size_t j : adversarial_models) {
      const double u = rng::uniform_at(seed, {kAdversarialNoiseStream, i, j});
      double& p = probabilities[i * m + j];
      p = std::clamp((1.0 - noise_ratio) * p + noise_ratio * u, 0.0, 1.0);
    }
  }
  return PredictionDataset(dataset.n_points(), m, std::move(probabilities), dataset.labels(),
                           dataset.model_ids());
}

double auc(std::span<const double> scores, std::span<const int> labels) {
  if (scores.size() != labels.size()) throw ValidationError("scores and labels differ in length");
  std::size_t positives = 0;
  for (int y : labels) positives += (y == 1);
  const std::size_t negatives = labels.size() - positives;
  if (positives == 0 || negatives == 0) {
    throw DegenerateError("AUC is undefined when only one class is present");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  // Sum of (1-based, tie-averaged) ranks of the positives.
  double positive_rank_sum = 0.0;
  for (std::size_t lo = 0; lo < order.size();) {
    std::size_t hi = lo;
    while (hi + 1 < order.size() && scores[order[hi + 1]] == scores[order[lo]]) ++hi;
    const double rank = 0.5 * static_cast<double>(lo + hi) + 1.0;
    for (std::size_t k = lo; k <= hi; ++k) {
      if (labels[order[k]] == 1) positive_rank_sum += rank;
    }
    lo = hi + 1;
  }
  const double np = static_cast<double>(positives);
  const double nn = static_cast<double>(negatives);
  return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

double accuracy(std::span<const double> scores, std::span<const int> labels, double cutoff) {
  if (scores.size() != labels.size()) throw ValidationError("scores and labels differ in length");
  if (scores.empty()) throw ValidationError("accuracy of an empty prediction set");
  std::size_t hits = 0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    hits += ((scores[i] >= cutoff ? 1 : 0) == labels[i]);
  }
  return static_cast<double>(hits) / static_cast<double>(scores.size());
}

double AdversarialRow::pooled_standard_error() const noexcept {
  return std::sqrt(adversarial_standard_error * adversarial_standard_error +
                   honest_standard_error * honest_standard_error);
}

double AdversarialRow::separation() const noexcept {
  const double se = pooled_standard_error();
  return se > 0.0 ? (honest_mean - adversarial_mean) / se : 0.0;
}

std::vector<AdversarialRow> adversarial_study(const PredictionDataset& dataset,
                                              std::span<const std::size_t> adversarial_models,
                                              std::span<const double> ratios, double cutoff,
                                              const SolverConfig& config, SolverTag solver) {
  const std::size_t m = dataset.n_models();
  std::vector<bool> is_adversarial(m, false);
  for (std::size_t j : adversarial_models) {
    if (j >= m) throw ValidationError("adversarial model index " + std::to_string(j) + " out of range");
    is_adversarial[j] = true;
  }
  std::vector<std::size_t> adversarial;
  std::vector<std::size_t> honest;
  for (std::size_t j = 0; j < m; ++j) (is_adversarial[j] ? adversarial : honest).push_back(j);
  if (adversarial.empty() || honest.empty()) {
    throw ValidationError("adversarial study needs non-empty adversarial and honest groups");
  }

  const std::uint64_t noise_seed = rng::derive(config.seed, {kAdversarialNoiseStream});
  std::vector<AdversarialRow> rows;
  for (double ratio : ratios) {
    const PredictionDataset corrupted = corrupt(dataset, adversarial, ratio, noise_seed);
    const TroupeResult result = troupe(corrupted, cutoff, config, solver);
    const auto& summary = result.report.primary();
    if (!summary.averages.avg_positive) {
      throw DegenerateError("no classified points at noise ratio " + std::to_string(ratio));
    }
    const auto& phi = *summary.averages.avg_positive;
    const GroupStats a = group_stats(phi, adversarial);
    const GroupStats h = group_stats(phi, honest);
    rows.push_back({ratio, a.mean, a.standard_error, h.mean, h.standard_error,
                    summary.averages.n_positive});
  }
  return rows;
}

std::vector<std::size_t> rank_by_value(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
  return order;
}

PrefixScores prefix_scores(const PredictionDataset& test, std::span<const std::size_t> ordering,
                           double cutoff) {
  const std::size_t m = test.n_models();
  const std::size_t n = test.n_points();
  std::vector<bool> selected(m, false);
  for (std::size_t j : ordering) {
    if (j >= m) throw ValidationError("model index " + std::to_string(j) + " out of range");
    if (selected[j]) throw ValidationError("ordering repeats model " + std::to_string(j));
    selected[j] = true;
  }
  std::fill(selected.begin(), selected.end(), false);

  PrefixScores out;
  std::vector<double> ensemble(n);
  for (std::size_t k = 0; k < ordering.size(); ++k) {
    selected[ordering[k]] = true;
    const double size = static_cast<double>(k + 1);
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::size_t j = 0; j < m; ++j) {
        if (selected[j]) sum += test.probability(i, j);
      }
      ensemble[i] = sum / size;
    }
    out.accuracy.push_back(accuracy(ensemble, test.labels(), cutoff));
    out.auc.push_back(auc(ensemble, test.labels()));
  }
  return out;
}

SelectionTrace forward_selection(const PredictionDataset& valuation,
                                 const PredictionDataset& test, double cutoff,
                                 const SolverConfig& config, SolverTag solver) {
  if (valuation.n_models() != test.n_models()) {
    throw ValidationError("valuation and test splits have different ensemble sizes");
  }
  const TroupeResult result = troupe(valuation, cutoff, config, solver);
  const auto& summary = result.report.primary();
  if (!summary.averages.avg_positive) {
    throw DegenerateError("no classified points in the valuation split");
  }
  SelectionTrace trace;
  trace.shapley = *summary.averages.avg_positive;
  trace.ordering = rank_by_value(trace.shapley);
  trace.scores = prefix_scores(test, trace.ordering, cutoff);
  return trace;
}

std::vector<DatasetComparisonRow> compare_on_dataset(const PredictionDataset& dataset,
                                                     double cutoff, const SolverConfig& config,
                                                     std::span<const SolverTag> solvers) {
  static constexpr SolverTag kDefault[] = {SolverTag::mc, SolverTag::mle, SolverTag::emc};
  if (solvers.empty()) solvers = kDefault;
  std::vector<DatasetComparisonRow> rows(solvers.size());
  std::vector<double> ape_sums(solvers.size(), 0.0);
  for (std::size_t k = 0; k < solvers.size(); ++k) rows[k].solver = solvers[k];

  SolverConfig point_config = config;
  for (std::size_t i = 0; i < dataset.n_points(); ++i) {
    point_config.seed = rng::derive(config.seed, {i});
    SimplifiedGame game = build_game(score_point(dataset.row(i), dataset.label(i)), cutoff);
    if (!game.outcome().won) game = dualize(game);
    const SolverComparison cmp = compare_solvers(game, point_config, solvers);
    for (std::size_t k = 0; k < solvers.size(); ++k) {
      const SolverErrorRow& r = cmp.rows[k];
      rows[k].mean_absolute_error += r.mean_absolute_error;
      if (r.mean_percentage_error) {
        ape_sums[k] += *r.mean_percentage_error;
        ++rows[k].points_with_percentage_error;
      }
    }
  }
  const double n = static_cast<double>(dataset.n_points());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    rows[k].mean_absolute_error /= n;
    if (rows[k].points_with_percentage_error) {
      rows[k].mean_percentage_error =
          ape_sums[k] / static_cast<double>(rows[k].points_with_percentage_error);
    }
  }
  return rows;
}

std::vector<TimingRow> runtime_sweep(std::span<const SweepSize> sizes,
                                     std::span<const SolverTag> solvers,
                                     const SolverConfig& config, std::size_t runs) {
  if (runs == 0) throw ValidationError("runtime sweep needs at least one run");
  std::vector<TimingRow> rows;
  for (const SweepSize& size : sizes) {
    SyntheticSpec spec;
    spec.n_points = size.n;
    spec.m_models = size.m;
    spec.base_signal = 0.8;
    spec.seed = config.seed;
    for (std::size_t j = 0; j < size.m; ++j) {
      spec.quality_mix.push_back(static_cast<double>(j) / static_cast<double>(size.m));
    }
    const PredictionDataset data = generate_synthetic(spec);
    for (SolverTag solver : solvers) {
      double total = 0.0;
      for (std::size_t r = 0; r < runs; ++r) {
        const auto start = std::chrono::steady_clock::now();
        const TroupeResult result = troupe(data, 0.5, config, solver);
        const auto stop = std::chrono::steady_clock::now();
        total += std::chrono::duration<double>(stop - start).count();
        if (result.points.size() != size.n) throw std::logic_error("troupe dropped points");
      }
      const double mean = total / static_cast<double>(runs);
      rows.push_back({size.n, size.m, solver, runs, mean, mean / static_cast<double>(size.n)});
    }
  }
  return rows;
}

}  // namespace ensemble_shapley
