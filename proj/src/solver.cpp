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

#include "lookahead/solver.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

namespace lookahead {
namespace {

// Mover action sequences, relative to the movers of the call that made them.
using Sequences = std::vector<std::vector<int>>;
using SequencesPtr = std::shared_ptr<const Sequences>;

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (std::int64_t v : key) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

class Engine {
 public:
  Engine(const LookaheadStructure& structure, const SolverOptions& options)
      : structure_(structure), options_(options) {}

  void reset_budget() { nodes_ = 0; }

  // Subgame-perfect outcome set of the movers after `profile` is fixed.
  SequencesPtr spo(ActionProfile& profile, std::span<const PlayerId> movers) {
    if (movers.empty()) return empty_sequence();
    std::vector<std::int64_t> key;
    const bool keyed = make_key(profile, movers, 'S', 0, key);
    if (keyed) {
      if (auto it = spo_memo_.find(key); it != spo_memo_.end()) return it->second;
    }
    count_node();

    const PlayerId mover = movers.front();
    const int m = structure_.num_actions(mover);
    const auto rest = movers.subspan(1);
    std::vector<SequencesPtr> child(m);
    std::vector<std::vector<Rational>> cost(m);
    std::vector<Rational> worst(m);
    for (int a = 0; a < m; ++a) {
      profile.assign(mover, a);
      child[a] = spo(profile, rest);
      for (const auto& seq : *child[a]) {
        for (std::size_t t = 0; t < rest.size(); ++t) profile.assign(rest[t], seq[t]);
        cost[a].push_back(structure_.cost(profile, mover));
        for (PlayerId q : rest) profile.unassign(q);
      }
      worst[a] = *std::max_element(cost[a].begin(), cost[a].end());
    }
    profile.unassign(mover);

    // Threshold for action a: the smallest worst-case over its siblings.
    int lowest = 0;
    for (int a = 1; a < m; ++a) {
      if (worst[a] < worst[lowest]) lowest = a;
    }
    std::optional<Rational> second;
    for (int a = 0; a < m; ++a) {
      if (a == lowest) continue;
      if (!second || worst[a] < *second) second = worst[a];
    }

    auto out = std::make_shared<Sequences>();
    for (int a = 0; a < m; ++a) {
      std::optional<Rational> threshold = (a == lowest) ? second : std::optional<Rational>(worst[lowest]);
      for (std::size_t i = 0; i < child[a]->size(); ++i) {
        if (threshold && cost[a][i] > *threshold) continue;
        std::vector<int> seq;
        seq.reserve(movers.size());
        seq.push_back(a);
        const auto& tail = (*child[a])[i];
        seq.insert(seq.end(), tail.begin(), tail.end());
        out->push_back(std::move(seq));
      }
    }
    SequencesPtr result = std::move(out);
    if (keyed) spo_memo_.emplace(std::move(key), result);
    return result;
  }

  // All k-lookahead continuations of the movers after `profile` is fixed.
  SequencesPtr klo(ActionProfile& profile, std::span<const PlayerId> movers, int k) {
    if (movers.empty()) return empty_sequence();
    std::vector<std::int64_t> key;
    const bool keyed = make_key(profile, movers, 'K', k, key);
    if (keyed) {
      if (auto it = klo_memo_.find(key); it != klo_memo_.end()) return it->second;
    }
    const std::size_t depth = std::min<std::size_t>(static_cast<std::size_t>(k), movers.size());
    SequencesPtr head = spo(profile, movers.first(depth));
    std::vector<int> candidates;
    for (const auto& seq : *head) candidates.push_back(seq.front());
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    auto out = std::make_shared<Sequences>();
    const PlayerId mover = movers.front();
    for (int a : candidates) {
      profile.assign(mover, a);
      SequencesPtr tails = klo(profile, movers.subspan(1), k);
      profile.unassign(mover);
      for (const auto& tail : *tails) {
        std::vector<int> seq;
        seq.reserve(movers.size());
        seq.push_back(a);
        seq.insert(seq.end(), tail.begin(), tail.end());
        out->push_back(std::move(seq));
      }
    }
    SequencesPtr result = std::move(out);
    if (keyed) klo_memo_.emplace(std::move(key), result);
    return result;
  }

  // Tie-broken backward induction (no memo: the rule is player-specific).
  std::vector<int> unique(ActionProfile& profile, std::span<const PlayerId> movers, const TieBreakRule& tiebreak) {
    if (movers.empty()) return {};
    count_node();
    const PlayerId mover = movers.front();
    const auto rest = movers.subspan(1);
    std::vector<int> best;
    Rational best_cost;
    for (int a = 0; a < structure_.num_actions(mover); ++a) {
      profile.assign(mover, a);
      std::vector<int> tail = unique(profile, rest, tiebreak);
      for (std::size_t t = 0; t < rest.size(); ++t) profile.assign(rest[t], tail[t]);
      Rational c = structure_.cost(profile, mover);
      for (PlayerId q : rest) profile.unassign(q);
      const bool better = best.empty() || c < best_cost ||
                          (c == best_cost && tiebreak.prefers(mover, a, best.front()));
      if (better) {
        best_cost = c;
        best.assign(1, a);
        best.insert(best.end(), tail.begin(), tail.end());
      }
    }
    profile.unassign(mover);
    return best;
  }

 private:
  static SequencesPtr empty_sequence() {
    static const SequencesPtr kEmpty = std::make_shared<const Sequences>(Sequences{{}});
    return kEmpty;
  }

  bool make_key(const ActionProfile& profile, std::span<const PlayerId> movers, char tag, int k,
                std::vector<std::int64_t>& key) const {
    if (!options_.memoize) return false;
    if (!structure_.subtree_key(profile, movers, key)) return false;
    key.push_back(tag);
    key.push_back(k);
    return true;
  }

  void count_node() {
    if (++nodes_ > options_.limits.node_budget) {
      throw BudgetExceeded("game tree exceeds node budget of " + std::to_string(options_.limits.node_budget));
    }
  }

  const LookaheadStructure& structure_;
  const SolverOptions& options_;
  std::int64_t nodes_ = 0;
  std::unordered_map<std::vector<std::int64_t>, SequencesPtr, KeyHash> spo_memo_;
  std::unordered_map<std::vector<std::int64_t>, SequencesPtr, KeyHash> klo_memo_;
};

void check_tiebreak(const LookaheadStructure& structure, const TieBreakRule& tiebreak) {
  if (tiebreak.num_players() != structure.num_players()) throw Error("tie-breaking rule does not match player count");
  for (PlayerId p = 0; p < structure.num_players(); ++p) {
    if (tiebreak.num_actions(p) != structure.num_actions(p)) {
      throw Error("tie-breaking rule does not rank every action of player " + std::to_string(p + 1));
    }
  }
}

ActionProfile to_profile(const ActionProfile& fixed, std::span<const PlayerId> movers, const std::vector<int>& seq) {
  ActionProfile out = fixed;
  for (std::size_t t = 0; t < movers.size(); ++t) out.assign(movers[t], seq[t]);
  return out;
}

void collect(OutcomeSet& into, const ActionProfile& fixed, std::span<const PlayerId> movers, const Sequences& seqs) {
  for (const auto& seq : seqs) into.insert(to_profile(fixed, movers, seq));
}

// ---------------------------------------------------------------------------
// Explicit game tree for the strategy-enumeration oracle.

class ExplicitTree {
 public:
  ExplicitTree(const SequentialGameView& view, const Limits& limits) : view_(view) {
    const auto movers = view.movers();
    depth_ = static_cast<int>(movers.size());
    nodes_.push_back({0, -1, 0, {}});
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].depth == depth_) continue;
      const int m = view.structure().num_actions(movers[nodes_[i].depth]);
      nodes_[i].first_child = static_cast<int>(nodes_.size());
      for (int a = 0; a < m; ++a) {
        if (static_cast<std::int64_t>(nodes_.size()) >= limits.node_budget) {
          throw BudgetExceeded("game tree exceeds node budget of " + std::to_string(limits.node_budget));
        }
        std::vector<int> history = nodes_[i].history;
        history.push_back(a);
        nodes_.push_back({nodes_[i].depth + 1, static_cast<int>(i), 0, std::move(history)});
      }
    }
    leaf_cost_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].depth != depth_) {
        internal_.push_back(static_cast<int>(i));
        continue;
      }
      ActionProfile leaf = to_profile(view.fixed(), movers, nodes_[i].history);
      for (PlayerId p : movers) leaf_cost_[i].push_back(view.structure().cost(leaf, p));
    }
    choice_.assign(nodes_.size(), -1);
  }

  int num_actions_at(int node) const { return view_.structure().num_actions(view_.movers()[nodes_[node].depth]); }
  int child(int node, int a) const { return nodes_[node].first_child + a; }
  int depth(int node) const { return nodes_[node].depth; }
  const std::vector<int>& history(int node) const { return nodes_[node].history; }
  const std::vector<int>& internal() const { return internal_; }
  std::vector<int>& choice() { return choice_; }

  // Leaf reached from `node` when everybody follows the current choices.
  int follow(int node) const {
    while (nodes_[node].depth < depth_) node = child(node, choice_[node]);
    return node;
  }

  // Does the current strategy profile induce a Nash equilibrium in the
  // subgame rooted at `root`? Each player in the subgame moves at one depth,
  // so its best deviation is a free choice at the node it reaches there.
  bool subgame_is_nash(int root) const {
    const int outcome = follow(root);
    for (int d = nodes_[root].depth; d < depth_; ++d) {
      int u = root;
      while (nodes_[u].depth < d) u = child(u, choice_[u]);
      const Rational& current = leaf_cost_[outcome][d];
      for (int a = 0; a < num_actions_at(u); ++a) {
        if (leaf_cost_[follow(child(u, a))][d] < current) return false;
      }
    }
    return true;
  }

 private:
  struct Node {
    int depth;
    int parent;
    int first_child;
    std::vector<int> history;
  };

  const SequentialGameView& view_;
  int depth_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> internal_;
  std::vector<std::vector<Rational>> leaf_cost_;
  std::vector<int> choice_;
};

// Assigns internal nodes deepest-first so each subgame is complete when its
// root is assigned; a profile failing any subgame is rejected as soon as
// that subgame is complete. The surviving full assignments are exactly the
// subgame-perfect equilibria.
void enumerate_spe(const SequentialGameView& view, const Limits& limits,
                   const std::function<bool(ExplicitTree&)>& visit) {
  ExplicitTree tree(view, limits);
  std::vector<int> order(tree.internal().rbegin(), tree.internal().rend());
  std::int64_t steps = 0;
  bool stop = false;
  std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (stop) return;
    if (t == order.size()) {
      if (!visit(tree)) stop = true;
      return;
    }
    const int node = order[t];
    for (int a = 0; a < tree.num_actions_at(node) && !stop; ++a) {
      if (++steps > limits.strategy_budget) {
        throw BudgetExceeded("strategy enumeration exceeds budget of " + std::to_string(limits.strategy_budget));
      }
      tree.choice()[node] = a;
      if (tree.subgame_is_nash(node)) assign(t + 1);
    }
    tree.choice()[node] = -1;
  };
  if (order.empty()) {
    visit(tree);
    return;
  }
  assign(0);
}

}  // namespace

std::vector<int> StrategyProfile::path() const {
  std::vector<int> history;
  for (const auto& rule : rules) history.push_back(rule.at(history));
  return history;
}

ActionProfile spo_unique(const SequentialGameView& view, const TieBreakRule& tiebreak, const SolverOptions& options) {
  check_tiebreak(view.structure(), tiebreak);
  Engine engine(view.structure(), options);
  ActionProfile work = view.fixed();
  return to_profile(view.fixed(), view.movers(), engine.unique(work, view.movers(), tiebreak));
}

OutcomeSet spo_set(const SequentialGameView& view, const SolverOptions& options) {
  Engine engine(view.structure(), options);
  ActionProfile work = view.fixed();
  OutcomeSet out;
  collect(out, view.fixed(), view.movers(), *engine.spo(work, view.movers()));
  return out;
}

OutcomeSet spo_set_naive(const SequentialGameView& view, const SolverOptions& options) {
  OutcomeSet out;
  enumerate_spe(view, options.limits, [&](ExplicitTree& tree) {
    const int leaf = tree.follow(0);
    out.insert(to_profile(view.fixed(), view.movers(), tree.history(leaf)));
    return true;
  });
  return out;
}

void for_each_spe(const SequentialGameView& view, const std::function<bool(const StrategyProfile&)>& visit,
                  const SolverOptions& options) {
  enumerate_spe(view, options.limits, [&](ExplicitTree& tree) {
    StrategyProfile s;
    s.movers.assign(view.movers().begin(), view.movers().end());
    s.rules.resize(s.movers.size());
    for (int node : tree.internal()) s.rules[tree.depth(node)][tree.history(node)] = tree.choice()[node];
    return visit(s);
  });
}

OutcomeSet k_lookahead_set(const SequentialGameView& view, int k, const SolverOptions& options) {
  if (k < 1) throw Error("lookahead depth must be positive");
  Engine engine(view.structure(), options);
  ActionProfile work = view.fixed();
  OutcomeSet out;
  collect(out, view.fixed(), view.movers(), *engine.klo(work, view.movers(), k));
  return out;
}

OutcomeSet k_lookahead_set(const CongestionGame& game, const PlayerOrder& order, int k, const SolverOptions& options) {
  return k_lookahead_set(sequential_view(game, order), k, options);
}

ActionProfile k_lookahead_outcome(const SequentialGameView& view, int k, const TieBreakRule& tiebreak,
                                  const SolverOptions& options) {
  if (k < 1) throw Error("lookahead depth must be positive");
  check_tiebreak(view.structure(), tiebreak);
  SequentialGameView current = view;
  while (current.depth() > 0) {
    ActionProfile head = spo_unique(current.truncated(k), tiebreak, options);
    current = current.induced(head.at(current.movers().front()));
  }
  return current.fixed();
}

OutcomeSet k_lookahead_all_orders(const std::shared_ptr<const LookaheadStructure>& structure, int k,
                                  const SolverOptions& options) {
  if (k < 1) throw Error("lookahead depth must be positive");
  Engine engine(*structure, options);
  OutcomeSet out;
  for (const PlayerOrder& order : PlayerOrder::all(structure->num_players())) {
    engine.reset_budget();
    ActionProfile work(structure->num_players());
    collect(out, work, order.sequence(), *engine.klo(work, order.sequence(), k));
  }
  return out;
}

OutcomeSet k_lookahead_all_orders(const CongestionGame& game, int k, const SolverOptions& options) {
  return k_lookahead_all_orders(current_costs(game), k, options);
}

OutcomeSet spo_all_orders(const std::shared_ptr<const LookaheadStructure>& structure, const SolverOptions& options) {
  Engine engine(*structure, options);
  OutcomeSet out;
  for (const PlayerOrder& order : PlayerOrder::all(structure->num_players())) {
    engine.reset_budget();
    ActionProfile work(structure->num_players());
    collect(out, work, order.sequence(), *engine.spo(work, order.sequence()));
  }
  return out;
}

OutcomeSet spo_all_orders(const CongestionGame& game, const SolverOptions& options) {
  return spo_all_orders(current_costs(game), options);
}

ActionProfile greedy_sequence(const SequentialGameView& view, const TieBreakRule& tiebreak) {
  check_tiebreak(view.structure(), tiebreak);
  ActionProfile profile = view.fixed();
  for (PlayerId mover : view.movers()) {
    int best = -1;
    Rational best_cost;
    for (int a = 0; a < view.structure().num_actions(mover); ++a) {
      profile.assign(mover, a);
      Rational c = view.structure().cost(profile, mover);
      if (best < 0 || c < best_cost || (c == best_cost && tiebreak.prefers(mover, a, best))) {
        best = a;
        best_cost = c;
      }
    }
    profile.assign(mover, best);
  }
  return profile;
}

ActionProfile greedy_sequence(const CongestionGame& game, const PlayerOrder& order, const TieBreakRule& tiebreak) {
  return greedy_sequence(sequential_view(game, order), tiebreak);
}

}  // namespace lookahead
