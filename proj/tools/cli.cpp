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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ensemble_shapley/errors.hpp"
#include "ensemble_shapley/experiments.hpp"
#include "ensemble_shapley/io.hpp"
#include "ensemble_shapley/output.hpp"
#include "ensemble_shapley/solvers.hpp"
#include "ensemble_shapley/valuation.hpp"

namespace ensemble_shapley::cli {
namespace {

struct RunConfig {
  double gamma = 0.5;
  double delta = 1e-9;
  std::string solver = "emc";
  std::uint64_t permutations = 1000;
  std::uint64_t seed = 42;
  bool no_normalize = false;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
  std::size_t threads = 1;
  std::string input;
  std::string input_format;
  std::string out;
  std::string format = "json";

  SolverConfig solver_config() const {
    SolverConfig c;
    c.permutations = permutations;
    c.stability = delta;
    c.seed = seed;
    c.normalize = !no_normalize;
    c.enumeration_limit = enumeration_limit;
    c.validate();
    return c;
  }

  SolverTag solver_tag() const { return parse_solver_tag(solver); }

  PredictionDataset load(const std::string& path) const {
    std::optional<io::DataFormat> f;
    if (!input_format.empty()) f = io::parse_format(input_format);
    return io::load_predictions(path, f);
  }

  io::DataFormat output_format() const { return io::parse_format(format); }
};

void add_run_options(CLI::App* cmd, RunConfig& rc) {
  cmd->add_option("--gamma", rc.gamma, "Decision cutoff in [0,1]")->capture_default_str();
  cmd->add_option("--delta", rc.delta, "Variance floor for the Gaussian solvers")
      ->capture_default_str();
  cmd->add_option("--solver", rc.solver, "exact, mc, mle or emc")->capture_default_str();
  cmd->add_option("--permutations", rc.permutations, "Monte Carlo permutations")
      ->capture_default_str();
  cmd->add_option("--seed", rc.seed, "Seed for every random draw")->capture_default_str();
  cmd->add_flag("--no-normalize", rc.no_normalize, "Report raw solver values as primary");
  cmd->add_option("--enumeration-limit", rc.enumeration_limit,
                  "Largest ensemble the exact solver will enumerate")
      ->capture_default_str();
  cmd->add_option("--threads", rc.threads, "Worker threads for per-point solving")
      ->capture_default_str();
  cmd->add_option("--out", rc.out, "Output path (default: standard output)");
  cmd->add_option("--format", rc.format, "Output format: json or csv")->capture_default_str();
}

void emit(const RunConfig& rc, const std::string& text, std::ostream& out) {
  if (rc.out.empty()) {
    out << text;
  } else {
    io::write_file(rc.out, text);
  }
}

std::vector<std::size_t> default_adversarial(std::size_t m) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m / 2; ++j) idx.push_back(j);
  return idx;
}

std::vector<SolverTag> parse_solvers(const std::vector<std::string>& names) {
  std::vector<SolverTag> tags;
  for (const auto& n : names) tags.push_back(parse_solver_tag(n));
  return tags;
}

std::vector<SweepSize> parse_sizes(const std::vector<std::string>& specs) {
  std::vector<SweepSize> sizes;
  for (const auto& s : specs) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw ValidationError("size '" + s + "' is not of the form NxM");
    try {
      sizes.push_back({std::stoul(s.substr(0, x)), std::stoul(s.substr(x + 1))});
    } catch (const std::exception&) {
      throw ValidationError("size '" + s + "' is not of the form NxM");
    }
    if (sizes.back().n == 0 || sizes.back().m == 0) {
      throw ValidationError("size '" + s + "' must have n, m >= 1");
    }
  }
  return sizes;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shapley values of classifiers in voting ensembles", "ensemble-shapley"};
  app.require_subcommand(1);

  RunConfig rc;
  bool per_point = false;
  std::string valuation_path;
  std::string test_path;
  std::vector<double> weights;
  std::vector<std::string> solver_names{"mc", "mle", "emc"};
  std::uint64_t bound_m = 0;
  double epsilon = 0.0;
  double alpha = 0.05;
  std::uint64_t bound_n = 0;
  std::string sim_format = "csv";
  std::size_t sim_n = 500;
  std::size_t sim_m = 20;
  std::vector<double> noise;
  double noise_value = 0.5;
  double signal = 0.9;
  std::vector<std::size_t> adversarial_models;
  std::vector<double> ratios{0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::string> size_specs{"256x16", "256x32", "512x32"};
  std::vector<std::string> bench_solvers{"emc", "mle"};
  std::size_t runs = 10;

  auto* value = app.add_subcommand("value", "Run Troupe and write the valuation report");
  add_run_options(value, rc);
  value->add_option("--input", rc.input, "Predictions file (CSV or JSON)")->required();
  value->add_option("--input-format", rc.input_format, "csv or json (default: by extension)");
  value->add_flag("--points", per_point, "Include per-point Shapley vectors");

  auto* entropy = app.add_subcommand("entropy", "Report the Shapley entropies H+ and H-");
  add_run_options(entropy, rc);
  entropy->add_option("--input", rc.input, "Predictions file")->required();
  entropy->add_option("--input-format", rc.input_format, "csv or json");

  auto* select = app.add_subcommand("select", "Forward ensemble selection by Shapley ordering");
  add_run_options(select, rc);
  select->add_option("--valuation", valuation_path, "Predictions used for valuation")->required();
  select->add_option("--test", test_path, "Predictions used for scoring sub-ensembles")
      ->required();
  select->add_option("--input-format", rc.input_format, "csv or json");

  auto* compare = app.add_subcommand("compare", "Approximation error against the exact solver");
  add_run_options(compare, rc);
  auto* compare_input =
      compare->add_option("--input", rc.input, "Predictions file (dataset-level comparison)");
  auto* compare_weights =
      compare->add_option("--weights", weights, "Game weights (single-game comparison)")
          ->delimiter(',');
  compare_input->excludes(compare_weights);
  compare->add_option("--input-format", rc.input_format, "csv or json");
  compare->add_option("--solvers", solver_names, "Approximate solvers to compare")
      ->delimiter(',')
      ->capture_default_str();

  auto* bound = app.add_subcommand("bound", "Sample-size and error-bound calculators");
  bound->add_option("--m", bound_m, "Ensemble size")->required();
  bound->add_option("--epsilon", epsilon, "Precision")->required();
  bound->add_option("--alpha", alpha, "Significance level")->capture_default_str();
  auto* bound_n_option =
      bound->add_option("--n", bound_n, "Also evaluate the error bound at this dataset size");
  bound->add_option("--out", rc.out, "Output path");

  auto* simulate = app.add_subcommand("simulate", "Generate a synthetic prediction dataset");
  simulate->add_option("--n", sim_n, "Data points")->capture_default_str();
  simulate->add_option("--m", sim_m, "Models")->capture_default_str();
  simulate->add_option("--noise", noise, "Noise ratio per model")->delimiter(',');
  simulate->add_option("--noise-value", noise_value, "Noise ratio for every model")
      ->capture_default_str();
  simulate->add_option("--signal", signal, "Base signal in (0.5, 1]")->capture_default_str();
  simulate->add_option("--seed", rc.seed, "Seed")->capture_default_str();
  simulate->add_option("--out", rc.out, "Output path");
  simulate->add_option("--format", sim_format, "csv or json")->capture_default_str();

  auto* adversarial = app.add_subcommand("adversarial", "Adversarial noise study");
  add_run_options(adversarial, rc);
  adversarial->add_option("--input", rc.input, "Predictions file (default: synthetic)");
  adversarial->add_option("--input-format", rc.input_format, "csv or json");
  adversarial->add_option("--n", sim_n, "Synthetic data points")->capture_default_str();
  adversarial->add_option("--m", sim_m, "Synthetic models")->capture_default_str();
  adversarial->add_option("--noise-value", noise_value, "Synthetic base noise ratio")
      ->capture_default_str();
  adversarial->add_option("--signal", signal, "Synthetic base signal")->capture_default_str();
  adversarial->add_option("--adversarial", adversarial_models,
                          "0-based adversarial model indices (default: first half)")
      ->delimiter(',');
  adversarial->add_option("--ratios", ratios, "Noise ratios")->delimiter(',')->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Runtime sweep of the pipeline");
  add_run_options(bench, rc);
  bench->add_option("--sizes", size_specs, "Sizes as NxM")->delimiter(',')->capture_default_str();
  bench->add_option("--solvers", bench_solvers, "Solvers to time")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--runs", runs, "Repetitions per configuration")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
    std::reverse(reversed.begin(), reversed.end());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return 2;
  }

  const bool csv_requested = rc.format == "csv";
  try {
    rc.output_format();  // reject unknown --format before doing any work
    if (csv_requested && (*value || *entropy || *compare || *bound)) {
      throw ValidationError("this subcommand writes JSON only");
    }
    if (*value) {
      const auto data = rc.load(rc.input);
      const auto result = troupe(data, rc.gamma, rc.solver_config(), rc.solver_tag(), rc.threads);
      std::optional<std::span<const PointValuation>> points;
      if (per_point) points = std::span<const PointValuation>(result.points);
      emit(rc, output::dump(output::report_to_json(result.report, points)), out);
    } else if (*entropy) {
      const auto data = rc.load(rc.input);
      const auto result = troupe(data, rc.gamma, rc.solver_config(), rc.solver_tag(), rc.threads);
      emit(rc, output::dump(output::entropy_to_json(result.report)), out);
    } else if (*select) {
      const auto valuation = rc.load(valuation_path);
      const auto test = rc.load(test_path);
      const auto config = rc.solver_config();
      const auto trace = forward_selection(valuation, test, rc.gamma, config, rc.solver_tag());
      emit(rc,
           csv_requested ? output::selection_to_csv(trace, test.model_ids())
                         : output::dump(output::selection_to_json(
                               trace, test.model_ids(), rc.gamma, rc.solver_tag(), config)),
           out);
    } else if (*compare) {
      const auto config = rc.solver_config();
      const auto tags = parse_solvers(solver_names);
      if (!weights.empty()) {
        const auto game = build_game(weights, rc.gamma);
        const auto cmp = compare_solvers(game, config, tags);
        emit(rc, output::dump(output::comparison_to_json(game, cmp, config)), out);
      } else if (!rc.input.empty()) {
        const auto data = rc.load(rc.input);
        const auto rows = compare_on_dataset(data, rc.gamma, config, tags);
        emit(rc,
             output::dump(output::dataset_comparison_to_json(data.n_points(), rc.gamma, config,
                                                             rows)),
             out);
      } else {
        throw ValidationError("compare needs --weights or --input");
      }
    } else if (*bound) {
      const std::uint64_t n = required_sample_size(bound_m, epsilon, alpha);
      const ErrorBound at_n = error_bound({n, bound_m, epsilon, alpha});
      nlohmann::json doc = {{"schema", output::kSchemaVersion},
                            {"command", "bound"},
                            {"m", bound_m},
                            {"epsilon", epsilon},
                            {"alpha", alpha},
                            {"required_n", n},
                            {"error_bound_at_required_n",
                             {{"n", n}, {"probability", at_n.probability}, {"vacuous", at_n.vacuous}}},
                            {"lemma_bound", lemma_bound(bound_m)}};
      if (bound_n_option->count() > 0) {
        const ErrorBound b = error_bound({bound_n, bound_m, epsilon, alpha});
        doc["error_bound"] = {{"n", bound_n}, {"probability", b.probability}, {"vacuous", b.vacuous}};
      }
      emit(rc, output::dump(doc), out);
    } else if (*simulate) {
      SyntheticSpec spec;
      spec.n_points = sim_n;
      spec.m_models = sim_m;
      spec.quality_mix = noise.empty() ? std::vector<double>(sim_m, noise_value) : noise;
      spec.base_signal = signal;
      spec.seed = rc.seed;
      const auto data = generate_synthetic(spec);
      emit(rc,
           io::parse_format(sim_format) == io::DataFormat::csv ? io::predictions_to_csv(data)
                                                      : io::predictions_to_json(data),
           out);
    } else if (*adversarial) {
      std::optional<PredictionDataset> data;
      if (!rc.input.empty()) {
        data = rc.load(rc.input);
      } else {
        SyntheticSpec spec;
        spec.n_points = sim_n;
        spec.m_models = sim_m;
        spec.quality_mix.assign(sim_m, noise_value);
        spec.base_signal = signal;
        spec.seed = rc.seed;
        data = generate_synthetic(spec);
      }
      if (adversarial_models.empty()) adversarial_models = default_adversarial(data->n_models());
      const auto config = rc.solver_config();
      const auto rows =
          adversarial_study(*data, adversarial_models, ratios, rc.gamma, config, rc.solver_tag());
      emit(rc,
           csv_requested ? output::adversarial_to_csv(rows)
                         : output::dump(output::adversarial_to_json(
                               rows, adversarial_models, rc.gamma, rc.solver_tag(), config)),
           out);
    } else if (*bench) {
      const auto config = rc.solver_config();
      const auto sizes = parse_sizes(size_specs);
      const auto tags = parse_solvers(bench_solvers);
      const auto rows = runtime_sweep(sizes, tags, config, runs);
      emit(rc,
           csv_requested ? output::timing_to_csv(rows)
                         : output::dump(output::timing_to_json(rows, config)),
           out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace ensemble_shapley::cli
