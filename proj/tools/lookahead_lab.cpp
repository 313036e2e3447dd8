// Copyright 2026 The Lookahead Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lookahead/error.hpp"
#include "lookahead/fixtures.hpp"
#include "lookahead/instance.hpp"
#include "lookahead/kernels.hpp"
#include "lookahead/verify.hpp"
#include "lookahead/workflows.hpp"

namespace {

using namespace lookahead;

int emit(RunResult run, bool csv, bool timing, double elapsed_ms, const std::string& out_path) {
  if (timing) run.report["timing"] = {{"elapsed_ms", elapsed_ms}};
  if (!run.artifact.empty()) {
    if (out_path.empty()) {
      std::cout << run.artifact;
      return run.exit_code;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << run.artifact)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    run.report["results"]["path"] = out_path;
  }
  if (csv && !run.csv.empty()) {
    std::cout << run.csv;
  } else {
    std::cout << run.report.dump(2) << "\n";
  }
  return run.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lookahead and subgame-perfect outcomes of sequential congestion games"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  bool csv = false;
  bool timing = false;
  std::int64_t node_budget = 0;
  std::int64_t profile_budget = 0;
  app.add_flag("--csv", csv, "Print the flat CSV table instead of the JSON report");
  app.add_flag("--timing", timing, "Add wall-clock timing to the report");
  app.add_option("--node-budget", node_budget, "Game-tree nodes per solve");
  app.add_option("--profile-budget", profile_budget, "Complete profiles per scan");

  AnalyzeOptions analyze;
  std::string k_list;
  auto* analyze_cmd = app.add_subcommand("analyze", "Solve one instance file");
  analyze_cmd->add_option("instance", analyze.instance_path, "Instance JSON file")->required();
  analyze_cmd->add_option("--order", analyze.order, "Comma-separated player numbers, e.g. 2,1,3");
  analyze_cmd->add_option("--k", k_list, "Comma-separated lookahead depths (default 1..n)");
  analyze_cmd->add_option("--tiebreak", analyze.tiebreak, "'lex', one ranking 'a>b>c', or per-player rankings split by '/'");

  VerifyOptions verify;
  std::uint64_t replay = 0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem property over seeded random instances");
  verify_cmd->add_option("id", verify.id, "Theorem id")->required();
  verify_cmd->add_option("--trials", verify.trials, "Number of trials")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--seed", verify.seed, "Base seed");
  verify_cmd->add_option("--players", verify.params.players, "Maximum players (0 = suite default)");
  verify_cmd->add_option("--term-size", verify.params.term_size, "Maximum arcs (0 = suite default)");
  verify_cmd->add_option("--max-delay", verify.params.max_delay, "Largest delay value (0 = suite default)");
  verify_cmd->add_option("--attempts", verify.params.attempts, "Draws per trial before skipping");
  verify_cmd->add_option("--max-paths", verify.params.max_paths, "Redraw networks with more paths");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads (default: all processors)");
  auto* replay_opt = verify_cmd->add_option("--replay", replay, "Re-run a single trial by its trial seed");
  bool list_ids = false;
  auto* list_cmd = app.add_subcommand("list", "List theorem and example ids");
  list_cmd->add_flag("--claims", list_ids, "Include each theorem's claim");

  std::string example;
  auto* reproduce_cmd = app.add_subcommand("reproduce", "Check the documented facts of a bundled example");
  reproduce_cmd->add_option("id", example, "Example id")->required();

  GenerateOptions generate;
  std::string out_path;
  auto* generate_cmd = app.add_subcommand("generate", "Write a seeded random instance");
  generate_cmd->add_option("kind", generate.family, "Instance family: sncg-term | cost-sharing | consensus")->required();
  generate_cmd->add_option("--seed", generate.seed, "Seed");
  generate_cmd->add_option("--players", generate.players, "Players");
  generate_cmd->add_option("--size", generate.size, "Arcs (sncg-term) or resources (cost-sharing)");
  generate_cmd->add_option("--max-value", generate.max_value, "Largest delay, cost or edge weight");
  generate_cmd->add_flag("--ep", generate.ep, "Extension-parallel networks only");
  generate_cmd->add_flag("--generic", generate.generic, "Resample until the game is generic");
  generate_cmd->add_option("--family", generate.cost_family, "Cost-sharing delays: table | axb");
  generate_cmd->add_flag("--singleton", generate.singleton, "Singleton actions (cost-sharing)");
  generate_cmd->add_flag("--asymmetric", generate.asymmetric, "Per-player action sets (cost-sharing)");
  generate_cmd->add_flag("--tree", generate.tree, "Tree graphs (consensus)");
  generate_cmd->add_option("--attempts", generate.attempts, "Resampling attempts for --generic");
  generate_cmd->add_option("--out", out_path, "Output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Limits limits = Limits::from_env();
  if (node_budget > 0) limits.node_budget = node_budget;
  if (profile_budget > 0) limits.profile_budget = profile_budget;

  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  };
  try {
    if (*list_cmd) {
      for (const std::string& id : theorem_ids()) {
        std::cout << "verify " << id;
        if (list_ids) std::cout << "\t" << theorem_claim(id);
        std::cout << "\n";
      }
      for (const std::string& id : fixture_ids()) std::cout << "reproduce " << id << "\n";
      return kExitOk;
    }
    if (*analyze_cmd) {
      if (!k_list.empty()) {
        std::stringstream ss(k_list);
        for (std::string item; std::getline(ss, item, ',');) {
          try {
            analyze.ks.push_back(std::stoi(item));
          } catch (const std::exception&) {
            throw ParseError("bad lookahead depth '" + item + "'");
          }
        }
      }
      const Instance instance = load_instance(analyze.instance_path);
      RunResult run = cmd_analyze(instance, analyze, limits);
      return emit(std::move(run), csv, timing, elapsed(), "");
    }
    if (*verify_cmd) {
      if (*replay_opt) verify.replay = replay;
      return emit(cmd_verify(verify, limits), csv, timing, elapsed(), "");
    }
    if (*reproduce_cmd) return emit(cmd_reproduce(example, limits), csv, timing, elapsed(), "");
    if (*generate_cmd) return emit(cmd_generate(generate, limits), csv, timing, elapsed(), out_path);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
