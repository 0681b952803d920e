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
#include <span>
#include <string>
#include <vector>

namespace ensemble_shapley {

/// Positive-class probabilities of m pre-trained binary classifiers on n
/// labeled points. Stored row-major: one row per data point.
class PredictionDataset {
 public:
  /// Validates shape, labels in {0,1} and probabilities in [0,1]. Messages
  /// name the offending row/column (1-based). Empty model_ids get p_1..p_m.
  PredictionDataset(std::size_t n_points, std::size_t n_models,
                    std::vector<double> probabilities, std::vector<int> labels,
                    std::vector<std::string> model_ids = {});

  std::size_t n_points() const noexcept { return n_points_; }
  std::size_t n_models() const noexcept { return n_models_; }

  std::span<const double> row(std::size_t point) const noexcept {
    return {probabilities_.data() + point * n_models_, n_models_};
  }
  double probability(std::size_t point, std::size_t model) const noexcept {
    return probabilities_[point * n_models_ + model];
  }
  int label(std::size_t point) const noexcept { return labels_[point]; }

  const std::vector<double>& probabilities() const noexcept { return probabilities_; }
  const std::vector<int>& labels() const noexcept { return labels_; }
  const std::vector<std::string>& model_ids() const noexcept { return model_ids_; }

  friend bool operator==(const PredictionDataset&, const PredictionDataset&) = default;

 private:
  std::size_t n_points_;
  std::size_t n_models_;
  std::vector<double> probabilities_;
  std::vector<int> labels_;
  std::vector<std::string> model_ids_;
};

/// Population mean and variance (divisor m) of a weight vector.
struct WeightMoments {
  double mean = 0.0;
  double variance = 0.0;
};

WeightMoments weight_moments(std::span<const double> weights);

/// Value of the grand coalition.
struct GameOutcome {
  bool won = false;
  double total_weight = 0.0;
};

/// An ensemble game in simplified form: a cutoff and one vote weight per
/// classifier, each in [0, 1/m]. A coalition wins iff its summed weight is
/// at least the cutoff.
///
/// The weight moments are carried with the game. build_game computes them
/// from the weights; dualize derives the dual's moments from the identities
/// mean' = 1/m - mean and variance' = variance, so every path to a dual game
/// hands solvers the same bits.
class SimplifiedGame {
 public:
  double cutoff() const noexcept { return cutoff_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return weights_.size(); }
  const WeightMoments& moments() const noexcept { return moments_; }

  /// Summed weight of the grand coalition, accumulated in ascending index
  /// order (the same order coalition sums use everywhere in this library).
  double total_weight() const noexcept { return total_weight_; }
  GameOutcome outcome() const noexcept {
    return {total_weight_ >= cutoff_, total_weight_};
  }

  /// Coalition value v(S) for a weight already summed by the caller.
  bool wins(double coalition_weight) const noexcept {
    return coalition_weight >= cutoff_;
  }

 private:
  friend SimplifiedGame build_game(std::vector<double> weights, double cutoff);
  friend SimplifiedGame build_game(std::vector<double> weights, double cutoff,
                                   WeightMoments moments);

  SimplifiedGame(std::vector<double> weights, double cutoff, WeightMoments moments);

  double cutoff_;
  std::vector<double> weights_;
  WeightMoments moments_;
  double total_weight_;
};

/// Label-conditional vote weights for one data point: p_j/m when the label is
/// 1, (1 - p_j)/m otherwise.
std::vector<double> score_point(std::span<const double> probabilities_row, int label);

/// Validates the weight bound 0 <= w_j <= 1/m and 0 <= cutoff <= 1.
SimplifiedGame build_game(std::vector<double> weights, double cutoff);

/// As above with moments supplied by the caller (used for reparametrized
/// dual games).
SimplifiedGame build_game(std::vector<double> weights, double cutoff,
                          WeightMoments moments);

/// (1 - cutoff, [1/m - w_1, ..., 1/m - w_m]).
SimplifiedGame dualize(const SimplifiedGame& game);

}  // namespace ensemble_shapley
