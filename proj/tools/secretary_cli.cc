// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Batch front-end: runs experiments from a config (JSON file and/or flags,
// flags win), emits JSON/CSV reports, generates instance files, and drives
// the acceptance suite.
//
//   secretary run --instance inst.json --algo combine-opt --trials 10000
//   secretary verify
//   secretary gen --family random-graph --size 8 --seed 3 -o g.json
//
// Exit codes: 0 success, 1 failed verification or internal error,
// 2 malformed config, 3 resource limit exceeded.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "secretary/acceptance.h"
#include "secretary/errors.h"
#include "secretary/harness.h"
#include "secretary/instance_io.h"
#include "secretary/rational.h"

namespace {

using secretary::AlgorithmKind;
using secretary::AlgorithmParams;
using secretary::CriterionResult;
using secretary::MonteCarloOptions;
using secretary::Rational;
using secretary::SecretaryInstance;
using secretary::SimulationReport;

struct RunConfig {
  std::string config_path;
  std::string instance;  // Inline JSON (leading '{') or a file path.
  std::string algo;
  std::optional<int> trials;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> order;
  std::optional<int> threads;
  std::string out_json;
  std::string out_csv;
  std::optional<std::string> p;
  std::optional<int> sparsity;
  std::optional<std::string> alpha;
};

// Fills unset fields from the JSON config file; flags keep priority.
void MergeConfigFile(RunConfig& config) {
  if (config.config_path.empty()) return;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(secretary::ReadTextFile(config.config_path));
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument(std::string("config file: ") + error.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("config file: expected a JSON object");
  auto take_string = [&](const char* key, std::string& slot) {
    if (slot.empty() && doc.contains(key)) slot = doc.at(key).get<std::string>();
  };
  try {
    take_string("instance", config.instance);
    take_string("algo", config.algo);
    take_string("out_json", config.out_json);
    take_string("out_csv", config.out_csv);
    if (!config.trials && doc.contains("trials")) config.trials = doc.at("trials").get<int>();
    if (!config.seed && doc.contains("seed")) {
      config.seed = doc.at("seed").get<std::uint64_t>();
    }
    if (!config.order && doc.contains("order")) {
      config.order = doc.at("order").get<std::string>();
    }
    if (!config.threads && doc.contains("threads")) {
      config.threads = doc.at("threads").get<int>();
    }
    if (!config.p && doc.contains("p")) config.p = doc.at("p").get<std::string>();
    if (!config.sparsity && doc.contains("sparsity")) {
      config.sparsity = doc.at("sparsity").get<int>();
    }
    if (!config.alpha && doc.contains("alpha")) {
      config.alpha = doc.at("alpha").get<std::string>();
    }
  } catch (const nlohmann::json::exception& error) {
    throw std::invalid_argument(std::string("config file: ") + error.what());
  }
}

int RunExperiment(RunConfig config) {
  MergeConfigFile(config);
  if (config.instance.empty()) throw std::invalid_argument("missing --instance");
  if (config.algo.empty()) throw std::invalid_argument("missing --algo");

  SecretaryInstance instance = config.instance.front() == '{'
                                   ? secretary::InstanceFromJson(config.instance)
                                   : secretary::LoadInstanceFile(config.instance);
  const AlgorithmKind kind = secretary::ParseAlgorithmKind(config.algo);
  AlgorithmParams params;
  if (config.p) params.p = secretary::ParseRational(*config.p);
  if (config.sparsity) params.sparsity = *config.sparsity;
  if (config.alpha) params.alpha = secretary::ParseRational(*config.alpha);

  MonteCarloOptions options;
  options.trials = config.trials.value_or(1000);
  options.seed = config.seed.value_or(1);
  if (config.order) options.order = secretary::ParseOrderKind(*config.order);
  options.threads = config.threads.value_or(0);

  SimulationReport report =
      secretary::MonteCarlo(instance, secretary::MakeTrialAlgorithm(instance, kind, params),
                            options);
  report.algorithm_name = secretary::AlgorithmKindName(kind);

  const Rational bound = secretary::TheoreticalBound(instance, kind, params);
  const double bound_value = secretary::ToDouble(bound);
  const double margin = report.mean_ratio - bound_value;

  if (!config.out_json.empty()) {
    secretary::WriteTextFile(config.out_json, secretary::ReportToJson(report));
  }
  if (!config.out_csv.empty()) {
    secretary::WriteTextFile(config.out_csv, secretary::ReportToCsv(report));
  }

  std::cout << "instance    " << report.instance_name << "\n"
            << "algorithm   " << report.algorithm_name << "\n"
            << "trials      " << report.trials << "\n"
            << "seed        " << report.seed << "\n"
            << "optimum     " << secretary::RationalToString(report.opt_value) << "\n"
            << "mean ratio  " << report.mean_ratio << "\n"
            << "std error   " << report.std_error << "\n"
            << "bound       " << secretary::RationalToString(bound) << " ("
            << bound_value << ")\n"
            << "margin      " << margin << "  " << (margin >= 0 ? "PASS" : "FAIL") << "\n"
            << "wall time   " << report.wall_seconds << "s\n";
  return 0;
}

int RunVerify(int criterion) {
  bool all_passed = true;
  if (criterion > 0) {
    const CriterionResult result = secretary::RunAcceptanceCriterion(criterion);
    std::cout << secretary::FormatCriterionLine(result) << "\n";
    all_passed = result.passed;
  } else {
    for (int i = 1; i <= secretary::AcceptanceCriterionCount(); ++i) {
      const CriterionResult result = secretary::RunAcceptanceCriterion(i);
      std::cout << secretary::FormatCriterionLine(result) << "\n" << std::flush;
      all_passed = all_passed && result.passed;
    }
  }
  std::cout << (all_passed ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return all_passed ? 0 : 1;
}

int RunGenerate(const std::string& family, int size, std::uint64_t seed,
                const std::string& out) {
  const SecretaryInstance instance =
      secretary::GenerateInstance(secretary::ParseInstanceFamily(family), size, seed);
  const std::string text = secretary::InstanceToJson(instance);
  if (out.empty()) {
    std::cout << text;
  } else {
    secretary::WriteTextFile(out, text);
    std::cout << "wrote " << out << " (" << instance.name << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matroid-intersection secretary experiment harness"};
  app.require_subcommand(1);

  RunConfig run_config;
  CLI::App* run = app.add_subcommand("run", "Run one experiment and report the ratio");
  run->add_option("--config", run_config.config_path, "JSON config file; flags override it");
  run->add_option("--instance", run_config.instance, "Instance file path or inline JSON");
  run->add_option("--algo", run_config.algo,
                  "Algorithm: greedy-online, simple-partition, generalized-partition, "
                  "graphic-rns, sparse-linear-rns, transversal-rns, combine-opt, "
                  "combine-rns, submodular-online");
  run->add_option("--trials", run_config.trials, "Number of Monte Carlo trials");
  run->add_option("--seed", run_config.seed, "Master random seed");
  run->add_option("--order", run_config.order,
                  "Arrival order: uniform-random, weight-decreasing, weight-increasing, "
                  "opt-last, opt-first");
  run->add_option("--threads", run_config.threads, "Worker threads; 0 = hardware");
  run->add_option("--out-json", run_config.out_json, "Write the JSON report here");
  run->add_option("--out-csv", run_config.out_csv, "Write the CSV report here");
  run->add_option("-p", run_config.p, "Sampling probability override, e.g. 1/2 or 0.75");
  run->add_option("--sparsity", run_config.sparsity, "Column sparsity bound (sparse-linear-rns)");
  run->add_option("--alpha", run_config.alpha, "Competitiveness parameter (submodular-online)");

  int criterion = 0;
  CLI::App* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--criterion", criterion, "Run a single criterion (1-based)");

  std::string family;
  int size = 8;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a deterministic instance file");
  gen->add_option("--family", family,
                  "Family: random-partition, random-laminar, random-graph, random-bipartite, "
                  "random-sparse-matrix, bipartite-matching-intersection, partition-transversal")
      ->required();
  gen->add_option("--size", size, "Ground set size");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("-o,--out", gen_out, "Output file; stdout when omitted");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;
  }

  try {
    if (run->parsed()) return RunExperiment(run_config);
    if (verify->parsed()) return RunVerify(criterion);
    return RunGenerate(family, size, gen_seed, gen_out);
  } catch (const secretary::ResourceLimitError& error) {
    std::cerr << "resource limit: " << error.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& error) {
    std::cerr << "config error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
}
