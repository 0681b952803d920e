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

#include "ensemble_shapley/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "ensemble_shapley/errors.hpp"
#include "ensemble_shapley/rng.hpp"

namespace ensemble_shapley {
namespace {

ShapleyVector zeros(std::size_t m, SolverTag solver) {
  return {std::vector<double>(m, 0.0), solver, false};
}

std::optional<double> entropy_if_defined(const std::optional<std::vector<double>>& avg) {
  if (!avg) return std::nullopt;
  double total = 0.0;
  for (double v : *avg) total += v;
  if (!(total > 0.0)) return std::nullopt;
  return shapley_entropy(*avg);
}

ConditionalSummary summarize(std::span<const PointValuation> points) {
  ConditionalSummary s;
  s.averages = average_conditional(points);
  s.entropy_positive = entropy_if_defined(s.averages.avg_positive);
  s.entropy_negative = entropy_if_defined(s.averages.avg_negative);
  return s;
}

}  // namespace

PointValuation value_point(std::span<const double> probabilities_row, int label,
                           std::size_t index, double cutoff, const SolverConfig& config,
                           SolverTag solver) {
  SolverConfig raw = config;
  raw.normalize = false;

  std::vector<double> weights = score_point(probabilities_row, label);
  const WeightMoments moments = weight_moments(weights);
  const std::size_t m = weights.size();
  SimplifiedGame game = build_game(std::move(weights), cutoff, moments);

  PointValuation out;
  out.index = index;
  if (game.outcome().won) {
    out.classified = true;
    out.ensemble_shapley = solve(game, solver, raw);
    out.dual_shapley = zeros(m, solver);
    return out;
  }

  // Dual game: cutoff 1 - gamma, weights 1/m - w_j, mean 1/m - mu, same variance.
  const double share = 1.0 / static_cast<double>(m);
  std::vector<double> dual_weights(m);
  for (std::size_t j = 0; j < m; ++j) {
    dual_weights[j] = std::max(0.0, share - game.weights()[j]);
  }
  const WeightMoments dual_moments{share - moments.mean, moments.variance};
  const SimplifiedGame dual = build_game(std::move(dual_weights), 1.0 - cutoff, dual_moments);

  out.classified = false;
  out.ensemble_shapley = zeros(m, solver);
  out.dual_shapley = solve(dual, solver, raw);
  return out;
}

TroupeResult troupe(const PredictionDataset& dataset, double cutoff, const SolverConfig& config,
                    SolverTag solver, std::size_t threads) {
  config.validate();
  if (!(cutoff >= 0.0 && cutoff <= 1.0)) {
    throw ValidationError("cutoff " + std::to_string(cutoff) + " outside [0, 1]");
  }
  const std::size_t n = dataset.n_points();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);

  std::vector<PointValuation> points(n);
  auto run_block = [&](std::size_t begin, std::size_t end) {
    SolverConfig point_config = config;
    for (std::size_t i = begin; i < end; ++i) {
      point_config.seed = rng::derive(config.seed, {i});
      points[i] = value_point(dataset.row(i), dataset.label(i), i, cutoff, point_config, solver);
    }
  };

  if (threads <= 1) {
    run_block(0, n);
  } else {
    std::vector<std::exception_ptr> failures(threads);
    {
      std::vector<std::jthread> workers;
      const std::size_t chunk = (n + threads - 1) / threads;
      for (std::size_t t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(n, t * chunk);
        const std::size_t end = std::min(n, begin + chunk);
        workers.emplace_back([&, t, begin, end] {
          try {
            run_block(begin, end);
          } catch (...) {
            failures[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  TroupeResult result;
  result.report = build_report(points, dataset.model_ids(), cutoff, solver, config);
  result.points = std::move(points);
  return result;
}

ConditionalAverages average_conditional(std::span<const PointValuation> valuations) {
  ConditionalAverages out;
  if (valuations.empty()) return out;
  const std::size_t m = valuations.front().ensemble_shapley.values.size();
  std::vector<double> pos(m, 0.0);
  std::vector<double> neg(m, 0.0);
  for (const PointValuation& p : valuations) {
    const auto& v = p.classified ? p.ensemble_shapley.values : p.dual_shapley.values;
    if (v.size() != m) throw ValidationError("point valuations disagree on ensemble size");
    auto& acc = p.classified ? pos : neg;
    for (std::size_t j = 0; j < m; ++j) acc[j] += v[j];
    ++(p.classified ? out.n_positive : out.n_negative);
  }
  if (out.n_positive) {
    for (double& x : pos) x /= static_cast<double>(out.n_positive);
    out.avg_positive = std::move(pos);
  }
  if (out.n_negative) {
    for (double& x : neg) x /= static_cast<double>(out.n_negative);
    out.avg_negative = std::move(neg);
  }
  return out;
}

double shapley_entropy(std::span<const double> phi_bar) {
  double total = 0.0;
  for (std::size_t j = 0; j < phi_bar.size(); ++j) {
    if (!(phi_bar[j] >= 0.0)) {
      throw ValidationError("Shapley component " + std::to_string(j + 1) +
                            " is negative; entropy needs a distribution");
    }
    total += phi_bar[j];
  }
  if (!(total > 0.0)) throw DegenerateError("Shapley entropy is undefined for an all-zero vector");
  double h = 0.0;
  for (double v : phi_bar) {
    const double p = v / total;
    if (p > 0.0) h -= p * std::log(p);
  }
  return std::max(h, 0.0);
}

ValuationReport build_report(std::span<const PointValuation> points,
                             std::vector<std::string> model_ids, double cutoff,
                             SolverTag solver, const SolverConfig& config) {
  if (points.empty()) throw ValidationError("no point valuations to aggregate");
  ValuationReport report;
  report.model_ids = std::move(model_ids);
  report.cutoff = cutoff;
  report.solver = solver;
  report.config = config;
  report.raw = summarize(points);

  std::vector<PointValuation> scaled(points.begin(), points.end());
  for (PointValuation& p : scaled) {
    p.ensemble_shapley = normalize(std::move(p.ensemble_shapley));
    p.dual_shapley = normalize(std::move(p.dual_shapley));
  }
  report.normalized = summarize(scaled);
  return report;
}

}  // namespace ensemble_shapley
