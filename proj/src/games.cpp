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


#include "lookahead/games.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace lookahead {
namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive(std::uint64_t seed, std::uint64_t salt) { return splitmix(seed ^ splitmix(salt)); }

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

DelayTable sorted_table(std::mt19937_64& rng, int length, int lo, int hi, bool increasing) {
  std::vector<int> raw(length);
  for (int& v : raw) v = uniform(rng, lo, hi);
  if (increasing) {
    std::sort(raw.begin(), raw.end());
  } else {
    std::sort(raw.begin(), raw.end(), std::greater<>());
  }
  std::vector<Rational> values(raw.begin(), raw.end());
  return DelayTable(std::move(values), increasing ? Monotonicity::kNonDecreasing : Monotonicity::kNonIncreasing);
}

Action mask_to_action(unsigned mask) {
  Action a;
  for (int r = 0; mask != 0; ++r, mask >>= 1) {
    if (mask & 1u) a.push_back(r);
  }
  return a;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) { return derive(seed, salt); }

std::string default_resource_name(int index) {
  if (index >= 0 && index < 26) return std::string(1, static_cast<char>('a' + index));
  return "r" + std::to_string(index);
}

std::vector<std::string> default_resource_names(int count) {
  std::vector<std::string> out;
  for (int i = 0; i < count; ++i) out.push_back(default_resource_name(i));
  return out;
}

CongestionGame sncg_from_term(const SPTerm& term, std::vector<std::string> names, std::vector<DelayTable> delays,
                              int players, const Limits& limits) {
  if (players < 1) throw Error("a congestion game needs at least one player");
  term.validate(static_cast<int>(delays.size()));
  std::vector<Action> paths = enumerate_paths(term, limits);
  return CongestionGame(std::move(names), std::move(delays), std::vector<std::vector<Action>>(players, paths));
}

DelayTable CostSharingSpec::table(int r, int length) const {
  const Resource& res = resources.at(r);
  if (res.table) return *res.table;
  if (res.a.sign() < 0 || res.b.sign() < 0) throw Error("cost-sharing coefficients must be non-negative");
  std::vector<Rational> values;
  for (int x = 1; x <= length; ++x) values.push_back(res.a / Rational(x) + res.b);
  return DelayTable(std::move(values), Monotonicity::kNonIncreasing);
}

CongestionGame cost_sharing_game(const CostSharingSpec& spec, std::vector<std::vector<Action>> action_sets) {
  const int n = static_cast<int>(action_sets.size());
  std::vector<std::string> names;
  std::vector<DelayTable> tables;
  for (int r = 0; r < static_cast<int>(spec.resources.size()); ++r) {
    DelayTable t = spec.table(r, n + 1);
    if (!t.non_increasing()) throw Error("not cost-sharing");
    names.push_back(spec.resources[r].name);
    tables.push_back(std::move(t));
  }
  return CongestionGame(std::move(names), std::move(tables), std::move(action_sets));
}

ConsensusGame::ConsensusGame(int players, std::vector<ConsensusEdge> edges)
    : players_(players), edges_(std::move(edges)) {
  if (players_ < 1) throw Error("a consensus game needs at least one player");
  std::set<std::pair<int, int>> seen;
  for (const ConsensusEdge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= players_ || e.v >= players_) throw Error("edge endpoint out of range");
    if (e.u == e.v) throw Error("self-loop in consensus graph");
    if (e.weight.sign() < 0) throw Error("negative edge weight");
    if (!seen.insert(std::minmax(e.u, e.v)).second) throw Error("duplicate edge in consensus graph");
  }
}

Rational ConsensusGame::cost(const ActionProfile& profile, PlayerId player) const {
  if (!profile.assigned(player)) throw Error("unassigned player");
  Rational total;
  for (const ConsensusEdge& e : edges_) {
    PlayerId other;
    if (e.u == player) {
      other = e.v;
    } else if (e.v == player) {
      other = e.u;
    } else {
      continue;
    }
    if (profile.assigned(other) && profile.at(other) != profile.at(player)) total += e.weight;
  }
  return total;
}

bool ConsensusGame::neighbours(PlayerId a, PlayerId b) const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [&](const ConsensusEdge& e) { return (e.u == a && e.v == b) || (e.u == b && e.v == a); });
}

SequentialGameView consensus_view(const ConsensusGame& game, const PlayerOrder& order) {
  return SequentialGameView(std::make_shared<const ConsensusCosts>(game), order);
}

bool is_tree_respecting(const ConsensusGame& game, const PlayerOrder& order) {
  for (int t = 1; t < order.size(); ++t) {
    bool found = false;
    for (int s = 0; s < t && !found; ++s) found = game.neighbours(order.at(t), order.at(s));
    if (!found) return false;
  }
  return true;
}

TieBreakRule common_tiebreak(int players, bool prefer_right) {
  std::vector<int> ranking = prefer_right ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
  return TieBreakRule(std::vector<std::vector<int>>(players, ranking));
}

SingletonStructure singleton_structure(const CongestionGame& game) {
  SingletonStructure out;
  out.users.resize(game.num_resources());
  for (PlayerId p = 0; p < game.num_players(); ++p) {
    for (const Action& a : game.actions(p)) {
      if (a.size() != 1) throw Error("singleton structure needs singleton actions");
      out.users[a.front()].push_back(p);
    }
  }
  std::optional<Rational> best;
  for (ResourceId r = 0; r < game.num_resources(); ++r) {
    const int count = static_cast<int>(out.users[r].size());
    if (count == 0) continue;
    const Rational& d = game.delay(r).at(count);
    if (!best || d < *best) {
      best = d;
      out.best = {r};
    } else if (d == *best) {
      out.best.push_back(r);
    }
  }
  return out;
}

TabularCosts::TabularCosts(std::vector<int> action_counts, std::uint64_t seed, int max_cost)
    : counts_(std::move(action_counts)), seed_(seed), max_cost_(max_cost) {
  if (counts_.empty()) throw Error("a view needs at least one player");
  for (int c : counts_) {
    if (c < 1) throw Error("every player needs an action");
  }
  if (max_cost_ < 0) throw Error("negative cost range");
}

std::string TabularCosts::action_label(PlayerId, int action) const { return "a" + std::to_string(action + 1); }

Rational TabularCosts::cost(const ActionProfile& profile, PlayerId player) const {
  if (!profile.assigned(player)) throw Error("unassigned player");
  std::uint64_t h = splitmix(seed_ ^ static_cast<std::uint64_t>(player));
  for (int c : profile.choices()) h = splitmix(h ^ static_cast<std::uint64_t>(c + 2));
  return Rational(static_cast<std::int64_t>(h % static_cast<std::uint64_t>(max_cost_ + 1)));
}

SncgInstance random_sncg(std::uint64_t seed, const SncgParams& params, const Limits& limits) {
  if (params.players < 1 || params.term_size < 1 || params.max_delay < 1) throw Error("invalid generator parameters");
  SPTerm term = random_term(derive(seed, 1), params.term_size, params.ep_only);
  std::mt19937_64 rng(derive(seed, 2));
  std::vector<DelayTable> tables;
  for (int r = 0; r < params.term_size; ++r) {
    tables.push_back(sorted_table(rng, params.players + 1, 1, params.max_delay, true));
  }
  CongestionGame game = sncg_from_term(term, default_resource_names(params.term_size), std::move(tables),
                                       params.players, limits);
  return {std::move(term), std::move(game)};
}

SncgInstance random_generic_sncg(std::uint64_t seed, const SncgParams& params, int attempts, const Limits& limits) {
  for (int attempt = 0; attempt < attempts; ++attempt) {
    SncgInstance inst = random_sncg(derive(seed, 1000 + attempt), params, limits);
    if (is_generic(inst.game, limits)) return inst;
  }
  throw Error("no generic instance after " + std::to_string(attempts) + " attempts");
}

CostSharingInstance random_cost_sharing(std::uint64_t seed, const CostSharingParams& params) {
  if (params.players < 1 || params.resources < 1 || params.resources > 16 || params.max_value < 1 ||
      params.max_actions < 1) {
    throw Error("invalid generator parameters");
  }
  std::mt19937_64 rng(derive(seed, 3));
  const int n = params.players;
  const int m = params.resources;
  CostSharingSpec spec;
  for (int r = 0; r < m; ++r) {
    CostSharingSpec::Resource res;
    res.name = default_resource_name(r);
    if (params.affine) {
      do {
        res.a = Rational(uniform(rng, 0, params.max_value));
        res.b = Rational(uniform(rng, 0, params.max_value));
      } while (res.a.sign() == 0 && res.b.sign() == 0);
    } else {
      res.table = sorted_table(rng, n + 1, 1, params.max_value, false);
    }
    spec.resources.push_back(std::move(res));
  }

  std::vector<std::vector<Action>> sets(n);
  if (params.singleton) {
    for (int p = 0; p < n; ++p) {
      const unsigned mask = params.symmetric ? (1u << m) - 1 : static_cast<unsigned>(uniform(rng, 1, (1 << m) - 1));
      for (ResourceId r = 0; r < m; ++r) {
        if (mask & (1u << r)) sets[p].push_back({r});
      }
    }
  } else {
    const int available = (1 << m) - 1;
    const int count_players = params.symmetric ? 1 : n;
    for (int p = 0; p < count_players; ++p) {
      const int want = uniform(rng, 1, std::min(params.max_actions, available));
      std::set<unsigned> masks;
      while (static_cast<int>(masks.size()) < want) masks.insert(static_cast<unsigned>(uniform(rng, 1, available)));
      for (unsigned mask : masks) sets[p].push_back(mask_to_action(mask));
    }
    if (params.symmetric) std::fill(sets.begin() + 1, sets.end(), sets[0]);
  }
  CongestionGame game = cost_sharing_game(spec, sets);
  return {std::move(spec), std::move(game)};
}

ConsensusGame random_consensus(std::uint64_t seed, const ConsensusParams& params) {
  if (params.players < 1 || params.max_weight < 1) throw Error("invalid generator parameters");
  std::mt19937_64 rng(derive(seed, 4));
  const int n = params.players;
  std::vector<ConsensusEdge> edges;
  if (params.tree) {
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    for (int v = 1; v < n; ++v) {
      const int parent = uniform(rng, 0, v - 1);
      edges.push_back({label[parent], label[v], Rational(uniform(rng, 1, params.max_weight))});
    }
  } else {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (uniform(rng, 0, 1) == 1) edges.push_back({u, v, Rational(uniform(rng, 1, params.max_weight))});
      }
    }
  }
  return ConsensusGame(n, std::move(edges));
}

}  // namespace lookahead
