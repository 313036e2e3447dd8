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


// Game families: symmetric network games, cost-sharing games, consensus
// games, and seeded random instances of each.

#ifndef LOOKAHEAD_GAMES_HPP_
#define LOOKAHEAD_GAMES_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lookahead/game.hpp"
#include "lookahead/network.hpp"
#include "lookahead/structure.hpp"

namespace lookahead {

// Deterministic 64-bit mix of a seed and a salt (splitmix64 based).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// "a".."z", then "r26", "r27", ...
std::string default_resource_name(int index);
std::vector<std::string> default_resource_names(int count);

CongestionGame sncg_from_term(const SPTerm& term, std::vector<std::string> names, std::vector<DelayTable> delays,
                              int players, const Limits& limits = {});

struct CostSharingSpec {
  struct Resource {
    std::string name;
    std::optional<DelayTable> table;  // when absent, d(x) = a/x + b
    Rational a;
    Rational b;
  };
  std::vector<Resource> resources;

  // Table of resource r over loads 1..length.
  DelayTable table(int r, int length) const;
};

// Formula resources are tabulated over loads 1..n+1. Throws
// Error("not cost-sharing") when some table increases.
CongestionGame cost_sharing_game(const CostSharingSpec& spec, std::vector<std::vector<Action>> action_sets);

struct ConsensusEdge {
  PlayerId u = 0;
  PlayerId v = 0;
  Rational weight;
  friend bool operator==(const ConsensusEdge&, const ConsensusEdge&) = default;
};

class ConsensusGame {
 public:
  static constexpr int kLeft = 0;
  static constexpr int kRight = 1;

  ConsensusGame(int players, std::vector<ConsensusEdge> edges);

  int num_players() const { return players_; }
  const std::vector<ConsensusEdge>& edges() const { return edges_; }
  // Weight of disagreeing edges to assigned neighbours.
  Rational cost(const ActionProfile& profile, PlayerId player) const;
  bool neighbours(PlayerId a, PlayerId b) const;

  friend bool operator==(const ConsensusGame&, const ConsensusGame&) = default;

 private:
  int players_ = 0;
  std::vector<ConsensusEdge> edges_;
};

class ConsensusCosts final : public LookaheadStructure {
 public:
  explicit ConsensusCosts(ConsensusGame game) : game_(std::move(game)) {}
  const ConsensusGame& game() const { return game_; }
  int num_players() const override { return game_.num_players(); }
  int num_actions(PlayerId) const override { return 2; }
  std::string action_label(PlayerId, int action) const override { return action == 0 ? "L" : "R"; }
  Rational cost(const ActionProfile& profile, PlayerId player) const override { return game_.cost(profile, player); }

 private:
  ConsensusGame game_;
};

SequentialGameView consensus_view(const ConsensusGame& game, const PlayerOrder& order);
// Every player after the first has a neighbour earlier in the order.
bool is_tree_respecting(const ConsensusGame& game, const PlayerOrder& order);
// Same rule for every player: prefer R (or L).
TieBreakRule common_tiebreak(int players, bool prefer_right);

struct SingletonStructure {
  std::vector<std::vector<PlayerId>> users;  // N_r
  std::vector<ResourceId> best;              // argmin over used r of d_r(|N_r|)
};
// Throws Error when some action is not a singleton.
SingletonStructure singleton_structure(const CongestionGame& game);

// Arbitrary partial costs drawn from a hash of (seed, assigned entries,
// player) into 0..max_cost. Used to cross-check the solvers on views that
// are not congestion games.
class TabularCosts final : public LookaheadStructure {
 public:
  TabularCosts(std::vector<int> action_counts, std::uint64_t seed, int max_cost);
  int num_players() const override { return static_cast<int>(counts_.size()); }
  int num_actions(PlayerId p) const override { return counts_[p]; }
  std::string action_label(PlayerId p, int action) const override;
  Rational cost(const ActionProfile& profile, PlayerId player) const override;

 private:
  std::vector<int> counts_;
  std::uint64_t seed_;
  int max_cost_;
};

// ---------------------------------------------------------------------------
// Seeded generators. Equal arguments give equal instances.

struct SncgParams {
  int players = 3;
  int term_size = 5;
  int max_delay = 100;
  bool ep_only = true;
};

struct SncgInstance {
  SPTerm term;
  CongestionGame game;
};

// Non-decreasing integer tables in 1..max_delay over loads 1..players+1.
SncgInstance random_sncg(std::uint64_t seed, const SncgParams& params, const Limits& limits = {});
// Resamples (seed, attempt) until the game is generic; throws Error when
// `attempts` samples all have ties.
SncgInstance random_generic_sncg(std::uint64_t seed, const SncgParams& params, int attempts = 64,
                                 const Limits& limits = {});

struct CostSharingParams {
  int players = 3;
  int resources = 3;
  int max_value = 20;
  bool symmetric = true;
  bool singleton = false;
  bool affine = false;  // d(x) = a/x + b with integer a, b
  int max_actions = 4;
};

struct CostSharingInstance {
  CostSharingSpec spec;
  CongestionGame game;
};

CostSharingInstance random_cost_sharing(std::uint64_t seed, const CostSharingParams& params);

struct ConsensusParams {
  int players = 4;
  int max_weight = 5;
  bool tree = false;
};

ConsensusGame random_consensus(std::uint64_t seed, const ConsensusParams& params);

}  // namespace lookahead

#endif  // LOOKAHEAD_GAMES_HPP_
