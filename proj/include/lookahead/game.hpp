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

// Congestion-game model: delay tables, profiles, orders, tie-breaking rules
// and the game value itself, plus the cost/induction/genericity operations.
//
// Players and resources are 0-based indices. An action is identified by its
// index in the owning player's (canonically sorted) action set, so in a
// symmetric game equal indices denote equal resource sets for every player.

#ifndef LOOKAHEAD_GAME_HPP_
#define LOOKAHEAD_GAME_HPP_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lookahead/error.hpp"
#include "lookahead/rational.hpp"

namespace lookahead {

using PlayerId = int;
using ResourceId = int;
using Action = std::vector<ResourceId>;  // sorted, duplicate-free
inline constexpr int kUnassigned = -1;

enum class Monotonicity { kNonDecreasing, kNonIncreasing, kUnrestricted };

// d_r(x) for congestion levels x = 1..size().
class DelayTable {
 public:
  DelayTable() = default;
  // Infers the strongest monotonicity the values satisfy (constant tables are
  // reported as non-decreasing). Negative values are rejected.
  explicit DelayTable(std::vector<Rational> values);
  // Validates the claimed monotonicity against the values.
  DelayTable(std::vector<Rational> values, Monotonicity claimed);

  int size() const { return static_cast<int>(values_.size()); }
  // Throws Error("table too short") when load exceeds size().
  const Rational& at(int load) const;
  std::span<const Rational> values() const { return values_; }
  Monotonicity monotonicity() const { return monotonicity_; }
  bool non_decreasing() const;
  bool non_increasing() const;

  // d'(y) = d(y + base); the result covers 1..size()-base.
  DelayTable shifted(int base) const;
  // Pads to `length` entries by repeating the last value.
  DelayTable extended(int length) const;

  friend bool operator==(const DelayTable&, const DelayTable&) = default;

 private:
  std::vector<Rational> values_;
  Monotonicity monotonicity_ = Monotonicity::kUnrestricted;
};

// Full or partial assignment of actions to players. Unassigned entries hold
// kUnassigned; the index is the action's position in the player's action set.
class ActionProfile {
 public:
  ActionProfile() = default;
  explicit ActionProfile(int num_players) : choice_(num_players, kUnassigned) {}
  explicit ActionProfile(std::vector<int> choices) : choice_(std::move(choices)) {}

  int size() const { return static_cast<int>(choice_.size()); }
  int at(PlayerId p) const { return choice_[p]; }
  bool assigned(PlayerId p) const { return choice_[p] != kUnassigned; }
  void assign(PlayerId p, int action) { choice_[p] = action; }
  void unassign(PlayerId p) { choice_[p] = kUnassigned; }
  int assigned_count() const;
  bool complete() const { return assigned_count() == size(); }
  const std::vector<int>& choices() const { return choice_; }

  friend auto operator<=>(const ActionProfile&, const ActionProfile&) = default;

 private:
  std::vector<int> choice_;
};

using OutcomeSet = std::set<ActionProfile>;

struct CongestionVector {
  std::vector<int> load;
  friend auto operator<=>(const CongestionVector&, const CongestionVector&) = default;
};

// Move order: sequence()[t] is the player moving at step t.
class PlayerOrder {
 public:
  PlayerOrder() = default;
  explicit PlayerOrder(std::vector<PlayerId> sequence);
  static PlayerOrder identity(int num_players);
  // All n! orders in lexicographic order of their sequences.
  static std::vector<PlayerOrder> all(int num_players);

  int size() const { return static_cast<int>(sequence_.size()); }
  std::span<const PlayerId> sequence() const { return sequence_; }
  PlayerId at(int step) const { return sequence_[step]; }
  int position(PlayerId p) const { return position_[p]; }

  friend bool operator==(const PlayerOrder& a, const PlayerOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<PlayerId> sequence_;
  std::vector<int> position_;
};

// Per-player strict total order over action indices; lower rank is
// preferred among equally cheap actions.
class TieBreakRule {
 public:
  TieBreakRule() = default;
  // rankings[p] lists player p's action indices from most to least preferred.
  explicit TieBreakRule(std::vector<std::vector<int>> rankings);
  // Prefers lower action indices for every player.
  static TieBreakRule lexicographic(std::span<const int> action_counts);

  int num_players() const { return static_cast<int>(rank_.size()); }
  int num_actions(PlayerId p) const { return static_cast<int>(rank_[p].size()); }
  int rank(PlayerId p, int action) const { return rank_[p][action]; }
  bool prefers(PlayerId p, int a, int b) const { return rank_[p][a] < rank_[p][b]; }
  // Every rule over the given action counts (product of factorials).
  static std::vector<TieBreakRule> all(std::span<const int> action_counts);

 private:
  std::vector<std::vector<int>> rank_;
};

class CongestionGame {
 public:
  // `labels` names each player by its id in some enclosing game (defaults to
  // 0..n-1); induced and truncated games keep the labels of their players.
  // Action sets are canonicalized: each action sorted, each set sorted.
  CongestionGame(std::vector<std::string> resource_names, std::vector<DelayTable> delays,
                 std::vector<std::vector<Action>> action_sets, std::vector<int> labels = {});

  int num_players() const { return static_cast<int>(action_sets_.size()); }
  int num_resources() const { return static_cast<int>(delays_.size()); }
  const std::vector<Action>& actions(PlayerId p) const { return action_sets_[p]; }
  const Action& action(PlayerId p, int a) const { return action_sets_[p][a]; }
  int num_actions(PlayerId p) const { return static_cast<int>(action_sets_[p].size()); }
  const DelayTable& delay(ResourceId r) const { return delays_[r]; }
  const std::vector<DelayTable>& delays() const { return delays_; }
  const std::string& resource_name(ResourceId r) const { return names_[r]; }
  const std::vector<std::string>& resource_names() const { return names_; }
  int label(PlayerId p) const { return labels_[p]; }
  const std::vector<int>& labels() const { return labels_; }
  // Players with identical action sets share a class id (smallest member).
  int action_class(PlayerId p) const { return class_[p]; }
  bool symmetric() const { return symmetric_; }
  // All tables non-increasing.
  bool cost_sharing() const;
  // Shortest delay table.
  int table_length() const;
  std::string action_label(PlayerId p, int a) const;
  // Index of `action` in p's set, or nullopt.
  std::optional<int> find_action(PlayerId p, const Action& action) const;
  std::vector<int> action_counts() const;

  // Same game with different delay tables.
  CongestionGame with_delays(std::vector<DelayTable> delays) const;

  friend bool operator==(const CongestionGame&, const CongestionGame&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<DelayTable> delays_;
  std::vector<std::vector<Action>> action_sets_;
  std::vector<int> labels_;
  std::vector<int> class_;
  bool symmetric_ = false;
};

// c_i(A) under current-cost semantics: loads count assigned players only.
Rational player_cost(const CongestionGame& game, const ActionProfile& profile, PlayerId player);
CongestionVector congestion_vector(const CongestionGame& game, const ActionProfile& profile);

// Game of the unassigned players with delays shifted by the fixed loads.
CongestionGame induced_subgame(const CongestionGame& game, const ActionProfile& partial);
// Game restricted to the first min(k, n) players of `order`, delays unchanged.
CongestionGame truncate_game(const CongestionGame& game, const PlayerOrder& order, int k);

struct GenericityWitness {
  std::vector<PlayerId> players;  // the subset N
  ActionProfile first;
  ActionProfile second;
  PlayerId player = 0;  // j with first_j != second_j and equal costs
  Rational cost;
};

struct GenericityResult {
  bool generic = true;
  std::optional<GenericityWitness> witness;
  explicit operator bool() const { return generic; }
};

// Exhaustive check over every player subset and every pair of partial
// profiles on it. Throws BudgetExceeded("instance too large for exact
// genericity check") above limits.genericity_budget evaluations.
GenericityResult is_generic(const CongestionGame& game, const Limits& limits = {});

// Returns a generic game with the same players, resources and actions.
//
// With `preserve`, the game must be symmetric with a path-private resource in
// every action (true for extension-parallel networks) and `preserve` one of
// its Nash equilibria. Each path's private resource is raised by distinct
// amounts below half the smallest nonzero gap between achievable path costs,
// which keeps every strict comparison strict and keeps `preserve` stable.
// Without `preserve` the same construction is used when possible; otherwise
// every resource is perturbed by seeded distinct amounts (best effort).
CongestionGame perturb_to_generic(const CongestionGame& game, const std::optional<ActionProfile>& preserve,
                                  std::uint64_t seed, const Limits& limits = {});

// argmin over the player's actions of its cost against the other assigned
// players (the player's own assignment, if any, is ignored).
std::vector<int> best_responses(const CongestionGame& game, const ActionProfile& profile, PlayerId player);
bool is_nash(const CongestionGame& game, const ActionProfile& profile);
OutcomeSet enumerate_nash(const CongestionGame& game, const Limits& limits = {});

// Number of complete profiles, saturating at INT64_MAX.
std::int64_t profile_count(std::span<const int> action_counts);

}  // namespace lookahead

#endif  // LOOKAHEAD_GAME_HPP_
