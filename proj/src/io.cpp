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

#include "ensemble_shapley/io.hpp"

#include <charconv>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <vector>

#include "ensemble_shapley/errors.hpp"

namespace ensemble_shapley::io {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string where(std::size_t row, std::size_t column) {
  return "row " + std::to_string(row) + ", column " + std::to_string(column);
}

}  // namespace

DataFormat parse_format(std::string_view name) {
  if (name == "csv") return DataFormat::csv;
  if (name == "json") return DataFormat::json;
  throw ValidationError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

DataFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".json" ? DataFormat::json : DataFormat::csv;
}

PredictionDataset parse_predictions_csv(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(trim(text.substr(start, end - start)));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw ValidationError("CSV input is empty");

  const auto header = split(lines.front(), ',');
  if (header.size() < 2 || header.front() != "label") {
    throw ValidationError("malformed header: expected 'label,p_1,...,p_m'");
  }
  std::vector<std::string> model_ids;
  for (std::size_t c = 1; c < header.size(); ++c) {
    if (header[c].empty()) {
      throw ValidationError("malformed header: column " + std::to_string(c + 1) + " has no name");
    }
    model_ids.emplace_back(header[c]);
  }
  const std::size_t m = model_ids.size();
  if (lines.size() < 2) throw ValidationError("CSV input has a header but no data rows");

  std::vector<double> probabilities;
  std::vector<int> labels;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const std::size_t row = r;  // data rows are 1-based
    if (lines[r].empty()) throw ValidationError("row " + std::to_string(row) + " is empty");
    const auto fields = split(lines[r], ',');
    if (fields.size() != m + 1) {
      throw ValidationError("row " + std::to_string(row) + " has " + std::to_string(fields.size()) +
                            " fields, expected " + std::to_string(m + 1) + " (ragged row)");
    }
    int label = -1;
    const auto lf = fields[0];
    const auto [lp, lec] = std::from_chars(lf.data(), lf.data() + lf.size(), label);
    if (lec != std::errc() || lp != lf.data() + lf.size() || (label != 0 && label != 1)) {
      throw ValidationError("row " + std::to_string(row) + ": label '" + std::string(lf) +
                            "' is not 0 or 1");
    }
    labels.push_back(label);
    for (std::size_t c = 1; c <= m; ++c) {
      double p = 0.0;
      const auto f = fields[c];
      const auto [pp, pec] = std::from_chars(f.data(), f.data() + f.size(), p);
      if (pec != std::errc() || pp != f.data() + f.size()) {
        throw ValidationError(where(row, c + 1) + ": '" + std::string(f) + "' is not a number");
      }
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(where(row, c + 1) + ": probability " + std::string(f) +
                              " outside [0, 1]");
      }
      probabilities.push_back(p);
    }
  }
  const std::size_t n = labels.size();
  return PredictionDataset(n, m, std::move(probabilities), std::move(labels),
                           std::move(model_ids));
}

PredictionDataset parse_predictions_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("probabilities")) {
    throw ValidationError("JSON predictions need 'labels' and 'probabilities'");
  }
  const auto& jl = doc["labels"];
  const auto& jp = doc["probabilities"];
  if (!jl.is_array() || !jp.is_array()) {
    throw ValidationError("'labels' and 'probabilities' must be arrays");
  }
  if (jl.size() != jp.size()) {
    throw ValidationError("'labels' has " + std::to_string(jl.size()) + " entries but " +
                          "'probabilities' has " + std::to_string(jp.size()) + " rows");
  }
  if (jp.empty()) throw ValidationError("JSON predictions contain no data points");
  if (!jp[0].is_array() || jp[0].empty()) throw ValidationError("row 1 has no probabilities");
  const std::size_t m = jp[0].size();

  std::vector<std::string> model_ids;
  if (doc.contains("model_ids")) {
    const auto& ids = doc["model_ids"];
    if (!ids.is_array() || ids.size() != m) {
      throw ValidationError("'model_ids' must list one name per probability column");
    }
    for (const auto& id : ids) {
      if (!id.is_string()) throw ValidationError("'model_ids' entries must be strings");
      model_ids.push_back(id.get<std::string>());
    }
  }

  std::vector<double> probabilities;
  std::vector<int> labels;
  for (std::size_t i = 0; i < jp.size(); ++i) {
    const std::size_t row = i + 1;
    const auto& y = jl[i];
    if (!y.is_number_integer() || (y.get<long long>() != 0 && y.get<long long>() != 1)) {
      throw ValidationError("row " + std::to_string(row) + ": label " + y.dump() +
                            " is not 0 or 1");
    }
    labels.push_back(y.get<int>());
    const auto& r = jp[i];
    if (!r.is_array() || r.size() != m) {
      throw ValidationError("row " + std::to_string(row) + " has " +
                            std::to_string(r.is_array() ? r.size() : 0) +
                            " probabilities, expected " + std::to_string(m) + " (ragged row)");
    }
    for (std::size_t j = 0; j < m; ++j) {
      if (!r[j].is_number()) {
        throw ValidationError(where(row, j + 1) + ": probability is not a number");
      }
      const double p = r[j].get<double>();
      if (!(p >= 0.0 && p <= 1.0)) {
        throw ValidationError(where(row, j + 1) + ": probability " + r[j].dump() +
                              " outside [0, 1]");
      }
      probabilities.push_back(p);
    }
  }
  const std::size_t n = labels.size();
  return PredictionDataset(n, m, std::move(probabilities), std::move(labels),
                           std::move(model_ids));
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw ValidationError("failed writing " + path.string());
}

PredictionDataset load_predictions(const std::filesystem::path& path,
                                   std::optional<DataFormat> format) {
  const std::string text = read_file(path);
  switch (format.value_or(format_for_path(path))) {
    case DataFormat::json: return parse_predictions_json(text);
    case DataFormat::csv: break;
  }
  return parse_predictions_csv(text);
}

std::string format_double(double value) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

std::string predictions_to_csv(const PredictionDataset& dataset) {
  std::string out = "label";
  for (const auto& id : dataset.model_ids()) out += "," + id;
  out += '\n';
  for (std::size_t i = 0; i < dataset.n_points(); ++i) {
    out += std::to_string(dataset.label(i));
    for (double p : dataset.row(i)) {
      out += ',';
      out += format_double(p);
    }
    out += '\n';
  }
  return out;
}

std::string predictions_to_json(const PredictionDataset& dataset) {
  nlohmann::json doc;
  doc["model_ids"] = dataset.model_ids();
  doc["labels"] = dataset.labels();
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < dataset.n_points(); ++i) {
    rows.push_back(std::vector<double>(dataset.row(i).begin(), dataset.row(i).end()));
  }
  doc["probabilities"] = std::move(rows);
  return doc.dump(2) + "\n";
}

void save_predictions(const PredictionDataset& dataset, const std::filesystem::path& path,
                      std::optional<DataFormat> format) {
  const DataFormat f = format.value_or(format_for_path(path));
  write_file(path, f == DataFormat::json ? predictions_to_json(dataset)
                                         : predictions_to_csv(dataset));
}

}  // namespace ensemble_shapley::io
