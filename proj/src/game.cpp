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

#include "ensemble_shapley/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "ensemble_shapley/errors.hpp"

namespace ensemble_shapley {
namespace {

// Slack for the 1/m upper bound on weights computed elsewhere as p/m.
constexpr double kBoundSlack = 8 * std::numeric_limits<double>::epsilon();

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

void check_weights(const std::vector<double>& weights) {
  if (weights.empty()) throw ValidationError("game needs at least one classifier");
  const double cap = 1.0 / static_cast<double>(weights.size());
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double w = weights[j];
    if (!(w >= 0.0) || w > cap * (1.0 + kBoundSlack)) {
      throw ValidationError("weight " + std::to_string(j + 1) + " = " + std::to_string(w) +
                            " violates the individual weight bound [0, 1/m]");
    }
  }
}

void check_cutoff(double cutoff) {
  if (!is_probability(cutoff)) {
    throw ValidationError("cutoff " + std::to_string(cutoff) + " outside [0, 1]");
  }
}

}  // namespace

PredictionDataset::PredictionDataset(std::size_t n_points, std::size_t n_models,
                                     std::vector<double> probabilities,
                                     std::vector<int> labels,
                                     std::vector<std::string> model_ids)
    : n_points_(n_points),
      n_models_(n_models),
      probabilities_(std::move(probabilities)),
      labels_(std::move(labels)),
      model_ids_(std::move(model_ids)) {
  if (n_points_ == 0) throw ValidationError("dataset has no data points");
  if (n_models_ == 0) throw ValidationError("dataset has no classifiers");
  if (probabilities_.size() != n_points_ * n_models_) {
    throw ValidationError("probability matrix has " + std::to_string(probabilities_.size()) +
                          " entries, expected " + std::to_string(n_points_ * n_models_));
  }
  if (labels_.size() != n_points_) {
    throw ValidationError("expected " + std::to_string(n_points_) + " labels, got " +
                          std::to_string(labels_.size()));
  }
  if (model_ids_.empty()) {
    for (std::size_t j = 0; j < n_models_; ++j) model_ids_.push_back("p_" + std::to_string(j + 1));
  } else if (model_ids_.size() != n_models_) {
    throw ValidationError("expected " + std::to_string(n_models_) + " model ids, got " +
                          std::to_string(model_ids_.size()));
  }
  for (std::size_t i = 0; i < n_points_; ++i) {
    if (labels_[i] != 0 && labels_[i] != 1) {
      throw ValidationError("row " + std::to_string(i + 1) + ": label " +
                            std::to_string(labels_[i]) + " is not binary");
    }
    for (std::size_t j = 0; j < n_models_; ++j) {
      if (!is_probability(probabilities_[i * n_models_ + j])) {
        throw ValidationError("row " + std::to_string(i + 1) + ", column " +
                              std::to_string(j + 1) + ": probability " +
                              std::to_string(probabilities_[i * n_models_ + j]) +
                              " outside [0, 1]");
      }
    }
  }
}

WeightMoments weight_moments(std::span<const double> weights) {
  if (weights.empty()) return {};
  const double m = static_cast<double>(weights.size());
  double sum = 0.0;
  for (double w : weights) sum += w;
  const double mean = sum / m;
  double ss = 0.0;
  for (double w : weights) ss += (w - mean) * (w - mean);
  return {mean, ss / m};
}

SimplifiedGame::SimplifiedGame(std::vector<double> weights, double cutoff,
                               WeightMoments moments)
    : cutoff_(cutoff), weights_(std::move(weights)), moments_(moments), total_weight_(0.0) {
  for (double w : weights_) total_weight_ += w;
}

std::vector<double> score_point(std::span<const double> probabilities_row, int label) {
  if (probabilities_row.empty()) throw ValidationError("cannot score a point with no classifiers");
  if (label != 0 && label != 1) {
    throw ValidationError("label " + std::to_string(label) + " is not binary");
  }
  const double m = static_cast<double>(probabilities_row.size());
  std::vector<double> weights(probabilities_row.size());
  for (std::size_t j = 0; j < probabilities_row.size(); ++j) {
    const double p = probabilities_row[j];
    if (!is_probability(p)) {
      throw ValidationError("probability " + std::to_string(j + 1) + " = " + std::to_string(p) +
                            " outside [0, 1]");
    }
    weights[j] = (label == 1 ? p : 1.0 - p) / m;
  }
  return weights;
}

SimplifiedGame build_game(std::vector<double> weights, double cutoff) {
  check_weights(weights);
  check_cutoff(cutoff);
  const WeightMoments moments = weight_moments(weights);
  return SimplifiedGame(std::move(weights), cutoff, moments);
}

SimplifiedGame build_game(std::vector<double> weights, double cutoff, WeightMoments moments) {
  check_weights(weights);
  check_cutoff(cutoff);
  if (!(moments.variance >= 0.0)) throw ValidationError("weight variance must be nonnegative");
  return SimplifiedGame(std::move(weights), cutoff, moments);
}

SimplifiedGame dualize(const SimplifiedGame& game) {
  const double share = 1.0 / static_cast<double>(game.size());
  std::vector<double> dual(game.size());
  for (std::size_t j = 0; j < game.size(); ++j) dual[j] = std::max(0.0, share - game.weights()[j]);
  const WeightMoments moments{share - game.moments().mean, game.moments().variance};
  return build_game(std::move(dual), 1.0 - game.cutoff(), moments);
}

}  // namespace ensemble_shapley
