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

#include "ensemble_shapley/output.hpp"

#include <cmath>

#include "ensemble_shapley/io.hpp"

namespace ensemble_shapley::output {
namespace {

using nlohmann::json;

json optional_vector(const std::optional<std::vector<double>>& v) {
  return v ? json(*v) : json(nullptr);
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json summary_to_json(const ConditionalSummary& s) {
  return {
      {"avg_positive", optional_vector(s.averages.avg_positive)},
      {"avg_negative", optional_vector(s.averages.avg_negative)},
      {"entropy_positive", optional_number(s.entropy_positive)},
      {"entropy_negative", optional_number(s.entropy_negative)},
  };
}

json header(const char* command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

}  // namespace

json config_to_json(const SolverConfig& config) {
  return {
      {"permutations", config.permutations},
      {"stability", config.stability},
      {"seed", config.seed},
      {"normalize", config.normalize},
      {"enumeration_limit", config.enumeration_limit},
  };
}

json report_to_json(const ValuationReport& report,
                    std::optional<std::span<const PointValuation>> points) {
  json doc = header("value");
  const ConditionalSummary& primary = report.primary();
  doc["model_ids"] = report.model_ids;
  doc["solver"] = std::string(to_string(report.solver));
  doc["cutoff"] = report.cutoff;
  doc["config"] = config_to_json(report.config);
  doc["n_points"] = primary.averages.n_positive + primary.averages.n_negative;
  doc["n_positive"] = primary.averages.n_positive;
  doc["n_negative"] = primary.averages.n_negative;
  doc["avg_positive"] = optional_vector(primary.averages.avg_positive);
  doc["avg_negative"] = optional_vector(primary.averages.avg_negative);
  doc["entropy_positive"] = optional_number(primary.entropy_positive);
  doc["entropy_negative"] = optional_number(primary.entropy_negative);
  doc["variants"] = {{"raw", summary_to_json(report.raw)},
                     {"normalized", summary_to_json(report.normalized)}};
  if (points) {
    json rows = json::array();
    for (const PointValuation& p : *points) {
      ShapleyVector ensemble = p.ensemble_shapley;
      ShapleyVector dual = p.dual_shapley;
      if (report.config.normalize) {
        ensemble = normalize(std::move(ensemble));
        dual = normalize(std::move(dual));
      }
      rows.push_back({{"index", p.index},
                      {"classified", p.classified},
                      {"ensemble_shapley", ensemble.values},
                      {"dual_shapley", dual.values}});
    }
    doc["points"] = std::move(rows);
  }
  return doc;
}

json entropy_to_json(const ValuationReport& report) {
  json doc = header("entropy");
  const ConditionalSummary& primary = report.primary();
  doc["solver"] = std::string(to_string(report.solver));
  doc["cutoff"] = report.cutoff;
  doc["config"] = config_to_json(report.config);
  doc["n_positive"] = primary.averages.n_positive;
  doc["n_negative"] = primary.averages.n_negative;
  doc["entropy_positive"] = optional_number(primary.entropy_positive);
  doc["entropy_negative"] = optional_number(primary.entropy_negative);
  doc["max_entropy"] = std::log(static_cast<double>(report.model_ids.size()));
  doc["variants"] = {
      {"raw",
       {{"entropy_positive", optional_number(report.raw.entropy_positive)},
        {"entropy_negative", optional_number(report.raw.entropy_negative)}}},
      {"normalized",
       {{"entropy_positive", optional_number(report.normalized.entropy_positive)},
        {"entropy_negative", optional_number(report.normalized.entropy_negative)}}},
  };
  return doc;
}

json comparison_to_json(const SimplifiedGame& game, const SolverComparison& comparison,
                        const SolverConfig& config) {
  json doc = header("compare");
  doc["mode"] = "game";
  doc["cutoff"] = game.cutoff();
  doc["weights"] = game.weights();
  doc["won"] = game.outcome().won;
  doc["config"] = config_to_json(config);
  doc["exact"] = comparison.exact.values;
  bool all_zero = true;
  for (double v : comparison.exact.values) all_zero = all_zero && v == 0.0;
  doc["exact_all_zero"] = all_zero;
  json rows = json::array();
  for (const SolverErrorRow& row : comparison.rows) {
    bool any_floored = false;
    for (bool f : row.floored) any_floored = any_floored || f;
    rows.push_back({
        {"solver", std::string(to_string(row.solver))},
        {"values", row.values},
        {"absolute_error", row.absolute_error},
        {"percentage_error", row.percentage_error},
        {"floored", row.floored},
        {"any_floored", any_floored},
        {"mean_percentage_error", optional_number(row.mean_percentage_error)},
        {"mean_absolute_error", row.mean_absolute_error},
    });
  }
  doc["solvers"] = std::move(rows);
  return doc;
}

json dataset_comparison_to_json(std::size_t n_points, double cutoff, const SolverConfig& config,
                                std::span<const DatasetComparisonRow> rows) {
  json doc = header("compare");
  doc["mode"] = "dataset";
  doc["cutoff"] = cutoff;
  doc["config"] = config_to_json(config);
  doc["n_points"] = n_points;
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({
        {"solver", std::string(to_string(row.solver))},
        {"mean_percentage_error", optional_number(row.mean_percentage_error)},
        {"points_with_percentage_error", row.points_with_percentage_error},
        {"mean_absolute_error", row.mean_absolute_error},
    });
  }
  doc["solvers"] = std::move(out);
  return doc;
}

json selection_to_json(const SelectionTrace& trace, const std::vector<std::string>& model_ids,
                       double cutoff, SolverTag solver, const SolverConfig& config) {
  json doc = header("select");
  doc["solver"] = std::string(to_string(solver));
  doc["cutoff"] = cutoff;
  doc["config"] = config_to_json(config);
  doc["ordering"] = trace.ordering;
  std::vector<std::string> ordered;
  for (std::size_t j : trace.ordering) ordered.push_back(model_ids.at(j));
  doc["ordered_model_ids"] = ordered;
  doc["shapley"] = trace.shapley;
  doc["accuracy"] = trace.scores.accuracy;
  doc["auc"] = trace.scores.auc;
  return doc;
}

std::string selection_to_csv(const SelectionTrace& trace,
                             const std::vector<std::string>& model_ids) {
  std::string out = "k,model_index,model_id,shapley,accuracy,auc\n";
  for (std::size_t k = 0; k < trace.ordering.size(); ++k) {
    const std::size_t j = trace.ordering[k];
    out += std::to_string(k + 1) + "," + std::to_string(j) + "," + model_ids.at(j) + "," +
           io::format_double(trace.shapley[j]) + "," +
           io::format_double(trace.scores.accuracy[k]) + "," +
           io::format_double(trace.scores.auc[k]) + "\n";
  }
  return out;
}

json adversarial_to_json(std::span<const AdversarialRow> rows,
                         std::span<const std::size_t> adversarial_models, double cutoff,
                         SolverTag solver, const SolverConfig& config) {
  json doc = header("adversarial");
  doc["solver"] = std::string(to_string(solver));
  doc["cutoff"] = cutoff;
  doc["config"] = config_to_json(config);
  doc["adversarial_models"] =
      std::vector<std::size_t>(adversarial_models.begin(), adversarial_models.end());
  json out = json::array();
  for (const AdversarialRow& r : rows) {
    out.push_back({
        {"noise_ratio", r.noise_ratio},
        {"adversarial_mean", r.adversarial_mean},
        {"adversarial_standard_error", r.adversarial_standard_error},
        {"honest_mean", r.honest_mean},
        {"honest_standard_error", r.honest_standard_error},
        {"pooled_standard_error", r.pooled_standard_error()},
        {"separation", r.separation()},
        {"n_positive", r.n_positive},
    });
  }
  doc["rows"] = std::move(out);
  return doc;
}

std::string adversarial_to_csv(std::span<const AdversarialRow> rows) {
  std::string out =
      "noise_ratio,adversarial_mean,adversarial_standard_error,honest_mean,"
      "honest_standard_error,pooled_standard_error,separation,n_positive\n";
  for (const AdversarialRow& r : rows) {
    out += io::format_double(r.noise_ratio) + "," + io::format_double(r.adversarial_mean) + "," +
           io::format_double(r.adversarial_standard_error) + "," +
           io::format_double(r.honest_mean) + "," + io::format_double(r.honest_standard_error) +
           "," + io::format_double(r.pooled_standard_error()) + "," +
           io::format_double(r.separation()) + "," + std::to_string(r.n_positive) + "\n";
  }
  return out;
}

json timing_to_json(std::span<const TimingRow> rows, const SolverConfig& config) {
  json doc = header("bench");
  doc["config"] = config_to_json(config);
  json out = json::array();
  for (const TimingRow& r : rows) {
    out.push_back({
        {"n", r.n},
        {"m", r.m},
        {"solver", std::string(to_string(r.solver))},
        {"runs", r.runs},
        {"mean_seconds", r.mean_seconds},
        {"per_point_seconds", r.per_point_seconds},
    });
  }
  doc["rows"] = std::move(out);
  return doc;
}

std::string timing_to_csv(std::span<const TimingRow> rows) {
  std::string out = "n,m,solver,runs,mean_seconds,per_point_seconds\n";
  for (const TimingRow& r : rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           std::string(to_string(r.solver)) + "," + std::to_string(r.runs) + "," +
           io::format_double(r.mean_seconds) + "," + io::format_double(r.per_point_seconds) + "\n";
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace ensemble_shapley::output
