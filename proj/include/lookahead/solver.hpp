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

// Backward induction over sequential-move views.
//
// Outcome sets are sets of profiles: the view's fixed actions plus one action
// per mover. All searches walk actions in increasing index order, so results
// and budget accounting are reproducible.
//
// Subgame-perfect outcome sets are propagated bottom-up. At a node of player
// i, an outcome o reached through action a stays on the equilibrium path iff
// every sibling b has some subgame-perfect outcome o' with c_i(o') >= c_i(o):
// off-path subtrees may independently be assigned any of their equilibria,
// so player i can be made indifferent-or-worse everywhere else.
// spo_set_naive enumerates strategy profiles directly and is the oracle
// this rule is tested against.

#ifndef LOOKAHEAD_SOLVER_HPP_
#define LOOKAHEAD_SOLVER_HPP_

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "lookahead/game.hpp"
#include "lookahead/structure.hpp"

namespace lookahead {

struct SolverOptions {
  Limits limits;
  // Reuse results for states with equal subtree keys (see
  // LookaheadStructure::subtree_key). Results are identical either way.
  bool memoize = true;
};

// Strategies of the movers of a view: rules[t] maps the actions of movers
// 0..t-1 (the history) to mover t's action.
struct StrategyProfile {
  std::vector<PlayerId> movers;
  std::vector<std::map<std::vector<int>, int>> rules;

  // Actions on the equilibrium path, in move order.
  std::vector<int> path() const;
};

// Unique SPO when every mover breaks ties by `tiebreak`.
ActionProfile spo_unique(const SequentialGameView& view, const TieBreakRule& tiebreak,
                         const SolverOptions& options = {});

// All subgame-perfect outcomes for the view's fixed order.
OutcomeSet spo_set(const SequentialGameView& view, const SolverOptions& options = {});

// Reference implementation: enumerates strategy profiles, keeps those that
// induce a Nash equilibrium in every subgame and collects their paths.
// Bounded by options.limits.strategy_budget; meant for tiny views only.
OutcomeSet spo_set_naive(const SequentialGameView& view, const SolverOptions& options = {});

// Calls `visit` for every subgame-perfect equilibrium (same enumeration as
// spo_set_naive); stops early when `visit` returns false.
void for_each_spe(const SequentialGameView& view, const std::function<bool(const StrategyProfile&)>& visit,
                  const SolverOptions& options = {});

// Every k-lookahead outcome for the view's order: the first mover plays the
// first action of some SPO of the k-mover truncation, then the rest of the
// movers continue in the induced view. k beyond the depth means full depth.
OutcomeSet k_lookahead_set(const SequentialGameView& view, int k, const SolverOptions& options = {});
OutcomeSet k_lookahead_set(const CongestionGame& game, const PlayerOrder& order, int k,
                           const SolverOptions& options = {});

// The k-lookahead outcome when every mover breaks ties by `tiebreak`.
ActionProfile k_lookahead_outcome(const SequentialGameView& view, int k, const TieBreakRule& tiebreak,
                                  const SolverOptions& options = {});

// Union over all n! orders.
OutcomeSet k_lookahead_all_orders(const std::shared_ptr<const LookaheadStructure>& structure, int k,
                                  const SolverOptions& options = {});
OutcomeSet k_lookahead_all_orders(const CongestionGame& game, int k, const SolverOptions& options = {});
OutcomeSet spo_all_orders(const std::shared_ptr<const LookaheadStructure>& structure,
                          const SolverOptions& options = {});
OutcomeSet spo_all_orders(const CongestionGame& game, const SolverOptions& options = {});

// Greedy best response: each mover, in order, plays its tie-broken cheapest
// action given the movers before it.
ActionProfile greedy_sequence(const SequentialGameView& view, const TieBreakRule& tiebreak);
ActionProfile greedy_sequence(const CongestionGame& game, const PlayerOrder& order, const TieBreakRule& tiebreak);

}  // namespace lookahead

#endif  // LOOKAHEAD_SOLVER_HPP_
