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


// The four command-line workflows as library calls. Each returns the JSON
// report the CLI prints plus the exit code it should use.
//
// Exit codes: 0 success, 1 assertion or property failure, 2 usage or parse
// error, 3 budget exceeded.

#ifndef LOOKAHEAD_WORKFLOWS_HPP_
#define LOOKAHEAD_WORKFLOWS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lookahead/error.hpp"
#include "lookahead/instance.hpp"
#include "lookahead/verify.hpp"

namespace lookahead {

inline constexpr const char* kToolName = "lookahead_lab";
inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitBudget = 3 };

struct RunResult {
  nlohmann::json report;
  int exit_code = kExitOk;
  std::string csv;       // flat table, when the command has one
  std::string artifact;  // generated instance text (generate only)
};

struct AnalyzeOptions {
  std::string instance_path;  // echoed only
  std::optional<std::string> order;
  std::vector<int> ks;  // empty means 1..n
  std::optional<std::string> tiebreak;
};

// Tie-breaking rules from text: "lex", one ranking for every player
// ("m>b+s>b+l"), or one ranking per player separated by '/'.
TieBreakRule parse_tiebreak(const LookaheadStructure& structure, const std::string& text);

nlohmann::json limits_to_json(const Limits& limits);

RunResult cmd_analyze(const Instance& instance, const AnalyzeOptions& options, const Limits& limits);

struct VerifyOptions {
  std::string id;
  VerifyParams params;
  int trials = 200;
  std::uint64_t seed = 1;
  int jobs = 0;
  std::optional<std::uint64_t> replay;  // re-run one trial by its trial seed
};

nlohmann::json verdict_to_json(const TheoremVerdict& verdict);
RunResult cmd_verify(const VerifyOptions& options, const Limits& limits);

RunResult cmd_reproduce(const std::string& id, const Limits& limits);

// Checks one documented fact of a bundled or user instance.
struct FactResult {
  bool ok = false;
  std::string detail;
};
FactResult check_fact(const Instance& instance, const nlohmann::json& fact, const Limits& limits);

struct GenerateOptions {
  std::string family;  // sncg-term | cost-sharing | consensus
  std::uint64_t seed = 1;
  int players = 3;
  int size = 0;       // arcs (sncg-term) or resources (cost-sharing); 0 picks a default
  int max_value = 0;  // largest delay, cost or edge weight; 0 picks a default
  bool ep = false;
  bool generic = false;
  std::string cost_family = "table";  // table | axb
  bool singleton = false;
  bool asymmetric = false;
  bool tree = false;
  int attempts = 64;
};

RunResult cmd_generate(const GenerateOptions& options, const Limits& limits);

}  // namespace lookahead

#endif  // LOOKAHEAD_WORKFLOWS_HPP_
