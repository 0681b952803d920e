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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <limits>
#include <nlohmann/json.hpp>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "ensemble_shapley/experiments.hpp"
#include "ensemble_shapley/game.hpp"
#include "ensemble_shapley/io.hpp"
#include "ensemble_shapley/rng.hpp"
#include "ensemble_shapley/solvers.hpp"
#include "ensemble_shapley/valuation.hpp"
#include "test_util.hpp"

#ifndef ENSEMBLE_SHAPLEY_CLI_PATH
#error "ENSEMBLE_SHAPLEY_CLI_PATH must name the CLI binary"
#endif

namespace es = ensemble_shapley;
using es::SolverConfig;
using es::SolverTag;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

double mean_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d / static_cast<double>(a.size());
}

SolverConfig raw_config() {
  SolverConfig c;
  c.normalize = false;
  return c;
}

es::PredictionDataset random_dataset(es::rng::Stream& stream, std::size_t n, std::size_t m) {
  std::vector<double> p(n * m);
  std::vector<int> y(n);
  for (double& x : p) x = stream.uniform();
  for (int& l : y) l = static_cast<int>(stream.below(2));
  return es::PredictionDataset(n, m, std::move(p), std::move(y));
}

es::SyntheticSpec synthetic(std::size_t n, std::vector<double> mix, double signal,
                            std::uint64_t seed) {
  es::SyntheticSpec spec;
  spec.n_points = n;
  spec.m_models = mix.size();
  spec.quality_mix = std::move(mix);
  spec.base_signal = signal;
  spec.seed = seed;
  return spec;
}

// 1. Exact solver axioms on random games.
void exact_axioms(Verdict& v) {
  es::rng::Stream stream(1001);
  double worst_eff = 0.0, worst_sym = 0.0, worst_null = 0.0;
  const auto t0 = Clock::now();
  for (int g = 0; g < 200; ++g) {
    const std::size_t m = 2 + stream.below(9);
    std::vector<double> w(m);
    for (double& x : w) x = stream.uniform() / static_cast<double>(m);
    // Plant an equal-weight pair and (for m > 2) a zero-weight player.
    w[1] = w[0];
    if (m > 2) w[m - 1] = 0.0;
    const double gamma = stream.uniform();
    const auto game = es::build_game(w, gamma);
    const auto phi = es::exact_shapley(game).values;
    double total = 0.0;
    for (double x : phi) total += x;
    // v(M) - v(empty); v(empty) is 1 only at gamma = 0.
    const double v_full = game.outcome().won ? 1.0 : 0.0;
    const double v_empty = game.wins(0.0) ? 1.0 : 0.0;
    worst_eff = std::max(worst_eff, std::abs(total - (v_full - v_empty)));
    worst_sym = std::max(worst_sym, std::abs(phi[0] - phi[1]));
    if (m > 2) worst_null = std::max(worst_null, std::abs(phi[m - 1]));
  }
  const double elapsed = seconds_since(t0);
  v.detail << "200 games: max efficiency gap " << worst_eff << ", symmetry gap " << worst_sym
           << ", null |phi| " << worst_null << ", " << elapsed << " s";
  v.require(worst_eff <= 1e-12, "efficiency");
  v.require(worst_sym <= 1e-12, "symmetry");
  v.require(worst_null <= 1e-12, "null classifier");
  v.require(elapsed <= 10.0, "runtime");
}

// 2. Dual-game worked example and zero-vector placement.
void dual_exactness(Verdict& v) {
  const es::PredictionDataset example(1, 2, {0.1, 0.2}, {1});
  const auto r = es::troupe(example, 0.5, raw_config(), SolverTag::exact);
  const auto& dual = r.points[0].dual_shapley.values;
  v.require(!r.points[0].classified, "worked example misclassified");
  v.require(dual == std::vector<double>{0.5, 0.5}, "dual Shapley [0.5, 0.5]");
  v.require(r.points[0].ensemble_shapley.values == std::vector<double>{0.0, 0.0},
            "ensemble Shapley zero");

  es::rng::Stream stream(1002);
  const auto data = random_dataset(stream, 100, 8);
  std::size_t violations = 0, classified = 0;
  for (SolverTag solver : {SolverTag::exact, SolverTag::mc, SolverTag::mle, SolverTag::emc}) {
    const auto result = es::troupe(data, 0.5, SolverConfig{}, solver);
    for (const auto& p : result.points) {
      const auto game =
          es::build_game(es::score_point(data.row(p.index), data.label(p.index)), 0.5);
      const bool won = game.outcome().won;
      const auto& zero = won ? p.dual_shapley.values : p.ensemble_shapley.values;
      const bool all_zero = std::all_of(zero.begin(), zero.end(), [](double x) { return x == 0.0; });
      if (p.classified != won || !all_zero) ++violations;
      if (solver == SolverTag::exact) classified += won;
    }
  }
  v.detail << "dual [" << dual[0] << ", " << dual[1] << "]; 100 points x 4 solvers ("
           << classified << " classified): " << violations << " placement violations";
  v.require(violations == 0, "zero-vector placement");
}

// 3. EMC raw error within sqrt(8/(m pi)) on every game.
void lemma_bound(Verdict& v) {
  es::rng::Stream stream(1003);
  int violations = 0;
  double worst_ratio = 0.0;
  for (int g = 0; g < 100; ++g) {
    const std::size_t m = 5 + stream.below(8);
    const auto game = es::testing_util::random_game(stream, m, stream.uniform());
    const auto approx = es::emc_shapley(game, raw_config()).values;
    const auto exact = es::exact_shapley(game).values;
    const double err = max_abs_diff(approx, exact);
    const double bound = es::lemma_bound(m);
    worst_ratio = std::max(worst_ratio, err / bound);
    violations += err > bound;
  }
  v.detail << "100 games, m in 5..12: " << violations
           << " violations, worst error/bound " << worst_ratio;
  v.require(violations == 0, "bound violated");
}

// 4. MC convergence and exact efficiency of pivot counts.
void mc_convergence(Verdict& v) {
  es::rng::Stream stream(1004);
  int improved = 0, efficiency_failures = 0;
  const int games = 50;
  for (int g = 0; g < games; ++g) {
    const auto game = es::testing_util::random_won_game(stream, 8);
    const auto exact = es::exact_shapley(game).values;
    SolverConfig config = raw_config();
    config.seed = 5000 + static_cast<std::uint64_t>(g);
    double err[2];
    const std::uint64_t ps[2] = {100, 10000};
    for (int k = 0; k < 2; ++k) {
      config.permutations = ps[k];
      const auto counts = es::mc_pivot_counts(game, ps[k], config.seed);
      const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
      efficiency_failures += total != ps[k];
      const auto phi = es::mc_shapley(game, config).values;
      double sum = 0.0;
      for (double x : phi) sum += x;
      efficiency_failures += std::abs(sum - 1.0) > 8 * std::numeric_limits<double>::epsilon();
      err[k] = mean_abs_diff(phi, exact);
    }
    improved += err[1] < err[0];
  }
  v.detail << "50 won games (m=8): error smaller at p=1e4 than at p=1e2 in " << improved
           << "/50; pivot-count efficiency failures " << efficiency_failures;
  v.require(improved >= 45, "convergence in >= 90% of games");
  v.require(efficiency_failures == 0, "sum of pivot counts equals p");
}

// 5. Sample-size calculator against a 50-digit evaluation.
void sample_size(Verdict& v) {
  using Big = boost::multiprecision::cpp_bin_float_50;
  const auto continuous = [](double m, double eps, double alpha) {
    const Big l = log(Big(alpha) / 2);
    return sqrt(8 * l * l / (pow(Big(eps), 4) * Big(m) * boost::math::constants::pi<Big>()));
  };
  const Big x = continuous(100, 0.1, 0.05);
  const auto oracle_n = static_cast<std::uint64_t>(ceil(x));
  const std::uint64_t n = es::required_sample_size(100, 0.1, 0.05);
  v.detail << "n(m=100, eps=0.1, alpha=0.05) = " << n << " (oracle " << oracle_n << ", continuous "
           << x.convert_to<double>() << ")";
  v.require(n == 59 && oracle_n == 59, "n = 59");
  v.require(es::error_bound({n, 100, 0.1, 0.05}).probability <= 0.05, "bound at n <= alpha");

  // Scaling: n(eps/k) ~ k^2 n(eps) and n(k^2 m) ~ n(m)/k, compared with the
  // unrounded base value so each comparison carries one ceiling.
  int scaling_failures = 0;
  const double base_x = x.convert_to<double>();
  for (double k : {2.0, 3.0, 4.0}) {
    const double n_eps = static_cast<double>(es::required_sample_size(100, 0.1 / k, 0.05));
    const double n_m =
        static_cast<double>(es::required_sample_size(static_cast<std::uint64_t>(100 * k * k), 0.1, 0.05));
    scaling_failures += std::abs(n_eps - k * k * base_x) > 1.0;
    scaling_failures += std::abs(n_m - base_x / k) > 1.0;
  }
  v.detail << "; scaling-law deviations beyond +-1: " << scaling_failures;
  v.require(scaling_failures == 0, "scaling laws");
}

// 6. Entropy values and range on random reports.
void entropy(Verdict& v) {
  double worst = 0.0;
  for (std::size_t m : {2u, 5u, 10u, 31u}) {
    worst = std::max(worst, std::abs(es::shapley_entropy(std::vector<double>(m, 1.0 / m)) -
                                     std::log(static_cast<double>(m))));
  }
  const double one_hot = es::shapley_entropy(std::vector<double>{0.0, 1.0, 0.0, 0.0});
  const double worked = es::shapley_entropy(std::vector<double>{0.5, 0.25, 0.25});
  const double worked_err = std::abs(worked - 1.5 * std::numbers::ln2);
  v.require(worst <= 1e-12, "uniform -> ln m");
  v.require(one_hot == 0.0, "one-hot -> 0");
  v.require(worked_err <= 1e-12, "[0.5,0.25,0.25] -> 1.5 ln 2");

  es::rng::Stream stream(1006);
  int out_of_range = 0, checked = 0;
  for (int r = 0; r < 40; ++r) {
    const std::size_t m = 2 + stream.below(11);
    const auto data = random_dataset(stream, 30, m);
    const SolverTag solver = static_cast<SolverTag>(r % 4);
    const auto result = es::troupe(data, stream.uniform(), SolverConfig{}, solver);
    const double ln_m = std::log(static_cast<double>(m));
    for (const auto* s : {&result.report.raw, &result.report.normalized}) {
      for (const auto& h : {s->entropy_positive, s->entropy_negative}) {
        if (!h) continue;
        ++checked;
        out_of_range += *h < 0.0 || *h > ln_m + 1e-12;
      }
    }
  }
  v.detail << "uniform gap " << worst << ", one-hot " << one_hot << ", worked gap " << worked_err
           << "; " << checked << " report entropies, " << out_of_range << " outside [0, ln m]";
  v.require(out_of_range == 0, "0 <= H <= ln m");
}

// 7. Aggregate error ordering on random won games.
void solver_ordering(Verdict& v) {
  es::rng::Stream stream(1007);
  const int games = 5000;
  const std::size_t m = 10;
  double ape_mle = 0, ape_emc = 0, ape_zero = 0, ape_uniform = 0;
  double mae_mle = 0, mae_emc = 0, mae_zero = 0, mae_uniform = 0;
  bool finite = true;
  const SolverConfig config;  // normalized, the default report variant
  for (int g = 0; g < games; ++g) {
    const auto game = es::testing_util::random_won_game(stream, m);
    const auto exact = es::exact_shapley(game).values;
    const auto mle = es::score_against_exact(SolverTag::mle, es::solve(game, SolverTag::mle, config).values, exact);
    const auto emc = es::score_against_exact(SolverTag::emc, es::solve(game, SolverTag::emc, config).values, exact);
    const auto zero = es::score_against_exact(SolverTag::exact, std::vector<double>(m, 0.0), exact);
    const auto uniform = es::score_against_exact(SolverTag::exact, std::vector<double>(m, 1.0 / m), exact);
    for (const auto* row : {&emc, &mle}) {
      finite = finite && row->mean_percentage_error && std::isfinite(*row->mean_percentage_error) &&
               std::isfinite(row->mean_absolute_error);
    }
    ape_mle += *mle.mean_percentage_error;
    ape_emc += *emc.mean_percentage_error;
    ape_zero += *zero.mean_percentage_error;
    ape_uniform += *uniform.mean_percentage_error;
    mae_mle += mle.mean_absolute_error;
    mae_emc += emc.mean_absolute_error;
    mae_zero += zero.mean_absolute_error;
    mae_uniform += uniform.mean_absolute_error;
  }
  for (double* x : {&ape_mle, &ape_emc, &ape_zero, &ape_uniform, &mae_mle, &mae_emc, &mae_zero,
                    &mae_uniform}) {
    *x /= games;
  }
  v.detail << games << " won games (m=10), mean APE %: EMC " << ape_emc << ", MLE " << ape_mle
           << ", all-zero " << ape_zero << ", uniform " << ape_uniform << "; MAE: EMC " << mae_emc
           << ", MLE " << mae_mle << ", all-zero " << mae_zero << ", uniform " << mae_uniform;
  v.require(finite, "finite EMC/MLE errors");
  v.require(ape_emc <= ape_mle, "EMC <= MLE");
  v.require(ape_emc < ape_zero && ape_emc < ape_uniform, "EMC beats baselines");
  v.require(ape_mle < ape_zero && ape_mle < ape_uniform, "MLE beats baselines");
}

// 8. Adversarial identification.
void adversarial(Verdict& v) {
  const auto t0 = Clock::now();
  const auto data = es::generate_synthetic(synthetic(500, std::vector<double>(20, 0.5), 0.9, 42));
  std::vector<std::size_t> adv(10);
  std::iota(adv.begin(), adv.end(), 0);
  const std::vector<double> ratios{0.0, 0.25, 0.5, 0.75, 1.0};
  const auto rows = es::adversarial_study(data, adv, ratios, 0.5, SolverConfig{});
  const double elapsed = seconds_since(t0);
  int inversions = 0;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    inversions += rows[k].adversarial_mean > rows[k - 1].adversarial_mean;
  }
  v.detail << "adversarial mean by r:";
  for (const auto& r : rows) v.detail << " " << r.adversarial_mean;
  v.detail << "; separation at r=0.5: " << rows[2].separation() << " pooled SE; inversions "
           << inversions << "; " << elapsed << " s";
  v.require(rows[2].adversarial_mean < rows[2].honest_mean && rows[2].separation() >= 2.0,
            "separation >= 2 SE at r=0.5");
  v.require(inversions <= 1, "monotone trend");
  v.require(elapsed <= 60.0, "runtime");
}

// 9. Forward selection on a clean-versus-noise ensemble.
void forward_selection(Verdict& v) {
  std::vector<double> mix(10, 0.0);
  mix.resize(20, 1.0);
  int recovered = 0;
  double shapley_auc = 0.0, random_auc = 0.0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    const std::uint64_t seed = 100 + static_cast<std::uint64_t>(s);
    const auto valuation = es::generate_synthetic(synthetic(500, mix, 0.9, es::rng::derive(seed, {0})));
    const auto test = es::generate_synthetic(synthetic(500, mix, 0.9, es::rng::derive(seed, {1})));
    SolverConfig config;
    config.seed = seed;
    const auto trace = es::forward_selection(valuation, test, 0.5, config);
    recovered += std::all_of(trace.ordering.begin(), trace.ordering.begin() + 10,
                             [](std::size_t j) { return j < 10; });
    shapley_auc += std::accumulate(trace.scores.auc.begin(), trace.scores.auc.end(), 0.0) / 20.0;

    es::rng::Stream stream(es::rng::derive(seed, {2}));
    for (int r = 0; r < 20; ++r) {
      std::vector<std::size_t> ordering(20);
      std::iota(ordering.begin(), ordering.end(), 0);
      for (std::size_t i = ordering.size() - 1; i > 0; --i) {
        std::swap(ordering[i], ordering[stream.below(i + 1)]);
      }
      const auto scores = es::prefix_scores(test, ordering, 0.5);
      random_auc += std::accumulate(scores.auc.begin(), scores.auc.end(), 0.0) / 20.0 / 20.0;
    }
  }
  shapley_auc /= seeds;
  random_auc /= seeds;
  v.detail << "clean models in top 10 for " << recovered << "/20 seeds; mean prefix AUC "
           << shapley_auc << " (Shapley order) vs " << random_auc << " (random orders)";
  v.require(recovered >= 18, "recovery in >= 90% of seeds");
  v.require(shapley_auc > random_auc, "prefix AUC above random");
}

// 10. Runtime trends.
void scalability(Verdict& v, Clock::time_point suite_start) {
  const std::vector<es::SweepSize> sizes{{1024, 16}, {1024, 32}, {1024, 64}, {2048, 32}};
  const std::vector<SolverTag> solvers{SolverTag::emc, SolverTag::mle};
  const auto rows = es::runtime_sweep(sizes, solvers, SolverConfig{}, 10);
  const auto at = [&](std::size_t n, std::size_t m, SolverTag s) {
    for (const auto& r : rows) {
      if (r.n == n && r.m == m && r.solver == s) return r;
    }
    throw std::logic_error("missing sweep row");
  };
  const double emc_m1 = at(1024, 32, SolverTag::emc).per_point_seconds /
                        at(1024, 16, SolverTag::emc).per_point_seconds;
  const double emc_m2 = at(1024, 64, SolverTag::emc).per_point_seconds /
                        at(1024, 32, SolverTag::emc).per_point_seconds;
  const double emc_n = at(2048, 32, SolverTag::emc).mean_seconds / at(1024, 32, SolverTag::emc).mean_seconds;
  const double mle_m1 = at(1024, 32, SolverTag::mle).per_point_seconds /
                        at(1024, 16, SolverTag::mle).per_point_seconds;
  const double mle_m2 = at(1024, 64, SolverTag::mle).per_point_seconds /
                        at(1024, 32, SolverTag::mle).per_point_seconds;
  v.detail << "EMC doubling m: " << emc_m1 << ", " << emc_m2 << "; EMC doubling n: " << emc_n
           << "; MLE doubling m: " << mle_m1 << ", " << mle_m2;
  v.require(emc_m1 >= 2.5 && emc_m1 <= 6 && emc_m2 >= 2.5 && emc_m2 <= 6, "EMC quadratic in m");
  v.require(emc_n >= 1.5 && emc_n <= 3, "EMC linear in n");
  v.require(mle_m1 <= 3 && mle_m2 <= 3, "MLE sub-quadratic in m");
  const double total = seconds_since(suite_start);
  v.detail << "; suite elapsed " << total << " s";
  v.require(total <= 600.0, "suite within 10 minutes");
}

// 11. Byte-identical CLI output across repeated invocations.
void determinism(Verdict& v) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "ensemble_shapley_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const std::string cli = ENSEMBLE_SHAPLEY_CLI_PATH;
  const auto q = [](const fs::path& p) { return "'" + p.string() + "'"; };

  const fs::path valuation = dir / "valuation.csv", test = dir / "test.json", small = dir / "small.csv";
  const auto setup = [&](const std::string& args) {
    return std::system((cli + " " + args + " > /dev/null 2>&1").c_str()) == 0;
  };
  bool ok = setup("simulate --n 200 --m 12 --noise-value 0.4 --seed 5 --out " + q(valuation)) &&
            setup("simulate --n 200 --m 12 --noise-value 0.4 --seed 6 --format json --out " + q(test)) &&
            setup("simulate --n 40 --m 6 --seed 7 --out " + q(small));
  v.require(ok, "fixture generation");

  const std::vector<std::string> commands{
      "simulate --n 50 --m 5 --seed 3",
      "simulate --n 50 --m 5 --seed 3 --format json",
      "value --points --input " + q(valuation),
      "value --points --solver mc --permutations 200 --seed 11 --threads 3 --input " + q(valuation),
      "value --solver mle --no-normalize --input " + q(test),
      "entropy --input " + q(valuation),
      "select --valuation " + q(valuation) + " --test " + q(test),
      "select --format csv --valuation " + q(valuation) + " --test " + q(test),
      "compare --weights 0.2,0.15,0.1,0.25 --gamma 0.5 --solvers mc,mle,emc",
      "compare --input " + q(small) + " --solvers exact,mc,mle,emc",
      "bound --m 100 --epsilon 0.1 --alpha 0.05 --n 80",
      "adversarial --n 100 --m 8 --solver mc --permutations 100 --seed 4",
      "adversarial --format csv --n 100 --m 8",
      "bench --sizes 16x4,32x4 --runs 2",
  };
  int mismatches = 0, failures = 0;
  for (std::size_t c = 0; c < commands.size(); ++c) {
    std::string outputs[2];
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("out_" + std::to_string(c) + "_" + std::to_string(rep));
      if (std::system((cli + " " + commands[c] + " --out " + q(out) + " 2>/dev/null").c_str()) != 0) {
        ++failures;
        v.detail << " [command failed: " << commands[c] << "]";
        break;
      }
      outputs[rep] = es::io::read_file(out);
    }
    if (commands[c].rfind("bench", 0) == 0) {
      // Wall-clock measurements are the one nondeterministic field.
      for (auto& text : outputs) {
        if (text.empty()) continue;
        auto doc = nlohmann::json::parse(text);
        for (auto& row : doc["rows"]) {
          row.erase("mean_seconds");
          row.erase("per_point_seconds");
        }
        text = doc.dump();
      }
    }
    if (outputs[0] != outputs[1]) {
      ++mismatches;
      v.detail << " [differs: " << commands[c] << "]";
    }
  }
  fs::remove_all(dir);
  v.detail << commands.size() << " invocations run twice: " << mismatches
           << " byte mismatches, " << failures << " failures (bench compared without timings)";
  v.require(mismatches == 0 && failures == 0, "byte-identical outputs");
}

}  // namespace

int main() {
  const auto suite_start = Clock::now();
  struct Criterion {
    int id;
    const char* name;
    std::function<void(Verdict&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "exact-oracle axioms", exact_axioms},
      {2, "dual-game exactness", dual_exactness},
      {3, "per-game EMC error bound", lemma_bound},
      {4, "Monte Carlo convergence", mc_convergence},
      {5, "sample-size calculator", sample_size},
      {6, "Shapley entropy", entropy},
      {7, "aggregate solver error ordering", solver_ordering},
      {8, "adversarial identification", adversarial},
      {9, "forward selection", forward_selection},
      {10, "scalability trends", [&](Verdict& v) { scalability(v, suite_start); }},
      {11, "CLI determinism", determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v;
    try {
      c.run(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << " [exception: " << e.what() << "]";
    }
    failed += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name
              << "): " << v.detail.str() << std::endl;
  }
  std::cout << (failed == 0 ? "all 11 acceptance criteria passed"
                            : std::to_string(failed) + " acceptance criteria failed")
            << " in " << seconds_since(suite_start) << " s" << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
