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

#include <nlohmann/json.hpp>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ensemble_shapley/experiments.hpp"
#include "ensemble_shapley/solvers.hpp"
#include "ensemble_shapley/valuation.hpp"

namespace ensemble_shapley::output {

inline constexpr const char* kSchemaVersion = "ensemble-shapley/1";

nlohmann::json config_to_json(const SolverConfig& config);

/// Valuation report; per-point values are included when `points` is given
/// (normalized or raw to match the report's config).
nlohmann::json report_to_json(const ValuationReport& report,
                              std::optional<std::span<const PointValuation>> points = std::nullopt);

nlohmann::json entropy_to_json(const ValuationReport& report);

nlohmann::json comparison_to_json(const SimplifiedGame& game, const SolverComparison& comparison,
                                  const SolverConfig& config);

nlohmann::json dataset_comparison_to_json(std::size_t n_points, double cutoff,
                                          const SolverConfig& config,
                                          std::span<const DatasetComparisonRow> rows);

nlohmann::json selection_to_json(const SelectionTrace& trace,
                                 const std::vector<std::string>& model_ids, double cutoff,
                                 SolverTag solver, const SolverConfig& config);
std::string selection_to_csv(const SelectionTrace& trace, const std::vector<std::string>& model_ids);

nlohmann::json adversarial_to_json(std::span<const AdversarialRow> rows,
                                   std::span<const std::size_t> adversarial_models, double cutoff,
                                   SolverTag solver, const SolverConfig& config);
std::string adversarial_to_csv(std::span<const AdversarialRow> rows);

nlohmann::json timing_to_json(std::span<const TimingRow> rows, const SolverConfig& config);
std::string timing_to_csv(std::span<const TimingRow> rows);

/// Pretty-printed with a trailing newline.
std::string dump(const nlohmann::json& doc);

}  // namespace ensemble_shapley::output
