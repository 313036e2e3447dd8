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


// JSON instance files.
//
// {
//   "format_version": 1,
//   "family": "congestion" | "sncg-term" | "cost-sharing" | "consensus",
//   "name": "...", "source": "...",            (optional)
//   "players": n,
//   "resources": ["r", "s", ...],               (all but consensus)
//   "delays": {"r": [d(1), d(2), ...], ...},    (congestion, sncg-term)
//   "costs": {"r": {"a": .., "b": ..} | {"table": [..]}},   (cost-sharing)
//   "actions": [[["r"], ["s"]], ...]  or  "symmetric_actions": [["r"], ...],
//   "term": ["P", "m", ["S", "b", ["P", "l", "s"]]],         (sncg-term)
//   "edges": [[1, 2, w], ...],                  (consensus, 1-based)
//   "expect": [...]                             (optional, kept verbatim)
// }
//
// Numbers are integers or [num, den] pairs; decimal literals are rejected.
// Tables of length n are padded to n + 1 by repeating the last value.

#ifndef LOOKAHEAD_INSTANCE_HPP_
#define LOOKAHEAD_INSTANCE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lookahead/game.hpp"
#include "lookahead/games.hpp"
#include "lookahead/network.hpp"
#include "lookahead/structure.hpp"

namespace lookahead {

inline constexpr int kFormatVersion = 1;

struct Instance {
  std::string family;
  std::string name;
  std::string source;
  std::optional<CongestionGame> game;  // every family except consensus
  std::optional<SPTerm> term;
  std::optional<CostSharingSpec> costs;
  std::optional<ConsensusGame> consensus;
  std::vector<std::string> extended_tables;
  nlohmann::json expect;  // null when absent

  int num_players() const;
  std::shared_ptr<const LookaheadStructure> structure() const;
};

// Throws ParseError("line L, column C: ...") for syntax errors and
// decimal literals, and ParseError("<json pointer>: ...") for schema errors.
Instance parse_instance(std::string_view text);
Instance load_instance(const std::string& path);

nlohmann::json instance_to_json(const Instance& instance);
std::string serialize_instance(const Instance& instance);

Instance congestion_instance(CongestionGame game, std::string name = {});
Instance sncg_instance(SPTerm term, CongestionGame game, std::string name = {});
Instance cost_sharing_instance(CostSharingSpec spec, CongestionGame game, std::string name = {});
Instance consensus_instance(ConsensusGame game, std::string name = {});

nlohmann::json rational_to_json(const Rational& value);
Rational rational_from_json(const nlohmann::json& value, const std::string& where);

// Profiles as arrays of action labels.
nlohmann::json profile_to_json(const LookaheadStructure& structure, const ActionProfile& profile);
ActionProfile profile_from_json(const LookaheadStructure& structure, const nlohmann::json& value,
                                const std::string& where);
nlohmann::json outcome_set_to_json(const LookaheadStructure& structure, const OutcomeSet& outcomes);

// "1,3,2" (1-based) to an order; Error on malformed input.
PlayerOrder parse_order(std::string_view text, int players);
std::string order_to_string(const PlayerOrder& order);

}  // namespace lookahead

#endif  // LOOKAHEAD_INSTANCE_HPP_
