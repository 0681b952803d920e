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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "ensemble_shapley/game.hpp"

namespace ensemble_shapley::io {

enum class DataFormat { csv, json };

/// "csv" or "json"; throws ValidationError otherwise.
DataFormat parse_format(std::string_view name);
/// By extension: .json is JSON, anything else CSV.
DataFormat format_for_path(const std::filesystem::path& path);

/// CSV layout: header `label,<id_1>,...,<id_m>` (conventionally p_1..p_m),
/// then one row per point. Errors name the row (1-based, data rows) and
/// column.
PredictionDataset parse_predictions_csv(std::string_view text);

/// JSON layout: {"model_ids": [...], "labels": [...], "probabilities": [[...], ...]}.
/// model_ids is optional.
PredictionDataset parse_predictions_json(std::string_view text);

PredictionDataset load_predictions(const std::filesystem::path& path,
                                   std::optional<DataFormat> format = std::nullopt);

/// Probabilities are written in shortest round-trip form, so reading the
/// output back yields bit-identical values.
std::string predictions_to_csv(const PredictionDataset& dataset);
std::string predictions_to_json(const PredictionDataset& dataset);

void save_predictions(const PredictionDataset& dataset, const std::filesystem::path& path,
                      std::optional<DataFormat> format = std::nullopt);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// Shortest decimal that parses back to the same double.
std::string format_double(double value);

}  // namespace ensemble_shapley::io
