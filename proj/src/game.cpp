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

#include "lookahead/game.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

#include "lookahead/kernels.hpp"
#include "lookahead/structure.hpp"

namespace lookahead {

// ---------------------------------------------------------------------------
// DelayTable

namespace {

bool values_non_decreasing(std::span<const Rational> v) {
  return std::is_sorted(v.begin(), v.end());
}

bool values_non_increasing(std::span<const Rational> v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

void check_non_negative(std::span<const Rational> values) {
  for (const Rational& v : values) {
    if (v.sign() < 0) throw Error("negative delay value " + v.to_string());
  }
}

}  // namespace

DelayTable::DelayTable(std::vector<Rational> values) : values_(std::move(values)) {
  check_non_negative(values_);
  if (values_non_decreasing(values_)) {
    monotonicity_ = Monotonicity::kNonDecreasing;
  } else if (values_non_increasing(values_)) {
    monotonicity_ = Monotonicity::kNonIncreasing;
  } else {
    monotonicity_ = Monotonicity::kUnrestricted;
  }
}

DelayTable::DelayTable(std::vector<Rational> values, Monotonicity claimed)
    : values_(std::move(values)), monotonicity_(claimed) {
  check_non_negative(values_);
  if (claimed == Monotonicity::kNonDecreasing && !values_non_decreasing(values_)) {
    throw Error("delay table is not non-decreasing");
  }
  if (claimed == Monotonicity::kNonIncreasing && !values_non_increasing(values_)) {
    throw Error("delay table is not non-increasing");
  }
}

const Rational& DelayTable::at(int load) const {
  if (load < 1) throw Error("delay queried at load " + std::to_string(load));
  if (load > size()) throw Error("table too short");
  return values_[load - 1];
}

bool DelayTable::non_decreasing() const { return values_non_decreasing(values_); }
bool DelayTable::non_increasing() const { return values_non_increasing(values_); }

DelayTable DelayTable::shifted(int base) const {
  if (base < 0 || base > size()) throw Error("table too short");
  return DelayTable(std::vector<Rational>(values_.begin() + base, values_.end()));
}

DelayTable DelayTable::extended(int length) const {
  if (length <= size()) return *this;
  if (values_.empty()) throw Error("cannot extend an empty delay table");
  std::vector<Rational> v = values_;
  v.resize(length, values_.back());
  return DelayTable(std::move(v));
}

// ---------------------------------------------------------------------------
// Profiles, orders, tie-breaking

int ActionProfile::assigned_count() const {
  return static_cast<int>(std::count_if(choice_.begin(), choice_.end(), [](int a) { return a != kUnassigned; }));
}

PlayerOrder::PlayerOrder(std::vector<PlayerId> sequence) : sequence_(std::move(sequence)) {
  position_.assign(sequence_.size(), -1);
  for (int t = 0; t < size(); ++t) {
    PlayerId p = sequence_[t];
    if (p < 0 || p >= size() || position_[p] != -1) throw Error("player order is not a permutation");
    position_[p] = t;
  }
}

PlayerOrder PlayerOrder::identity(int num_players) {
  std::vector<PlayerId> seq(num_players);
  std::iota(seq.begin(), seq.end(), 0);
  return PlayerOrder(std::move(seq));
}

std::vector<PlayerOrder> PlayerOrder::all(int num_players) {
  std::vector<PlayerId> seq(num_players);
  std::iota(seq.begin(), seq.end(), 0);
  std::vector<PlayerOrder> out;
  do {
    out.emplace_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return out;
}

TieBreakRule::TieBreakRule(std::vector<std::vector<int>> rankings) {
  rank_.resize(rankings.size());
  for (std::size_t p = 0; p < rankings.size(); ++p) {
    const auto& order = rankings[p];
    rank_[p].assign(order.size(), -1);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
      int a = order[pos];
      if (a < 0 || a >= static_cast<int>(order.size()) || rank_[p][a] != -1) {
        throw Error("tie-breaking rule for player " + std::to_string(p + 1) + " is not a strict total order");
      }
      rank_[p][a] = static_cast<int>(pos);
    }
  }
}

TieBreakRule TieBreakRule::lexicographic(std::span<const int> action_counts) {
  std::vector<std::vector<int>> rankings;
  for (int m : action_counts) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    rankings.push_back(std::move(order));
  }
  return TieBreakRule(std::move(rankings));
}

std::vector<TieBreakRule> TieBreakRule::all(std::span<const int> action_counts) {
  std::vector<std::vector<std::vector<int>>> per_player;
  for (int m : action_counts) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> perms;
    do {
      perms.push_back(order);
    } while (std::next_permutation(order.begin(), order.end()));
    per_player.push_back(std::move(perms));
  }
  std::vector<TieBreakRule> out;
  std::vector<std::size_t> idx(per_player.size(), 0);
  while (true) {
    std::vector<std::vector<int>> rankings;
    for (std::size_t p = 0; p < per_player.size(); ++p) rankings.push_back(per_player[p][idx[p]]);
    out.emplace_back(std::move(rankings));
    std::size_t p = per_player.size();
    while (p > 0) {
      --p;
      if (++idx[p] < per_player[p].size()) break;
      idx[p] = 0;
      if (p == 0) return out;
    }
    if (per_player.empty()) return out;
  }
}

// ---------------------------------------------------------------------------
// CongestionGame

CongestionGame::CongestionGame(std::vector<std::string> resource_names, std::vector<DelayTable> delays,
                               std::vector<std::vector<Action>> action_sets, std::vector<int> labels)
    : names_(std::move(resource_names)),
      delays_(std::move(delays)),
      action_sets_(std::move(action_sets)),
      labels_(std::move(labels)) {
  const int n = num_players();
  if (n < 1) throw Error("a congestion game needs at least one player");
  if (names_.size() != delays_.size()) throw Error("resource names and delay tables differ in count");
  if (labels_.empty()) {
    labels_.resize(n);
    std::iota(labels_.begin(), labels_.end(), 0);
  }
  if (static_cast<int>(labels_.size()) != n) throw Error("player labels do not match player count");
  for (ResourceId r = 0; r < num_resources(); ++r) {
    if (delays_[r].size() < n) {
      throw Error("delay table of resource '" + names_[r] + "' covers " + std::to_string(delays_[r].size()) +
                  " congestion levels, need " + std::to_string(n));
    }
  }
  for (PlayerId p = 0; p < n; ++p) {
    auto& set = action_sets_[p];
    if (set.empty()) throw Error("player " + std::to_string(p + 1) + " has no actions");
    for (Action& a : set) {
      if (a.empty()) throw Error("player " + std::to_string(p + 1) + " has an empty action");
      std::sort(a.begin(), a.end());
      if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw Error("action lists a resource twice");
      for (ResourceId r : a) {
        if (r < 0 || r >= num_resources()) throw Error("action uses an unknown resource");
      }
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) {
      throw Error("player " + std::to_string(p + 1) + " lists the same action twice");
    }
  }
  class_.resize(n);
  symmetric_ = true;
  for (PlayerId p = 0; p < n; ++p) {
    class_[p] = p;
    for (PlayerId q = 0; q < p; ++q) {
      if (action_sets_[q] == action_sets_[p]) {
        class_[p] = class_[q];
        break;
      }
    }
    if (class_[p] != 0) symmetric_ = false;
  }
}

bool CongestionGame::cost_sharing() const {
  return std::all_of(delays_.begin(), delays_.end(), [](const DelayTable& t) { return t.non_increasing(); });
}

int CongestionGame::table_length() const {
  int len = std::numeric_limits<int>::max();
  for (const auto& t : delays_) len = std::min(len, t.size());
  return len;
}

std::string CongestionGame::action_label(PlayerId p, int a) const {
  std::string out;
  for (ResourceId r : action_sets_[p][a]) {
    if (!out.empty()) out += '+';
    out += names_[r];
  }
  return out;
}

std::optional<int> CongestionGame::find_action(PlayerId p, const Action& action) const {
  Action sorted = action;
  std::sort(sorted.begin(), sorted.end());
  const auto& set = action_sets_[p];
  auto it = std::lower_bound(set.begin(), set.end(), sorted);
  if (it == set.end() || *it != sorted) return std::nullopt;
  return static_cast<int>(it - set.begin());
}

std::vector<int> CongestionGame::action_counts() const {
  std::vector<int> out;
  for (const auto& s : action_sets_) out.push_back(static_cast<int>(s.size()));
  return out;
}

CongestionGame CongestionGame::with_delays(std::vector<DelayTable> delays) const {
  return CongestionGame(names_, std::move(delays), action_sets_, labels_);
}

// ---------------------------------------------------------------------------
// Costs and loads

namespace {

int load_on(const CongestionGame& game, const ActionProfile& profile, ResourceId r) {
  int load = 0;
  for (PlayerId q = 0; q < profile.size(); ++q) {
    if (!profile.assigned(q)) continue;
    const Action& a = game.action(q, profile.at(q));
    if (std::binary_search(a.begin(), a.end(), r)) ++load;
  }
  return load;
}

void check_profile_shape(const CongestionGame& game, const ActionProfile& profile) {
  if (profile.size() != game.num_players()) throw Error("profile size does not match player count");
  for (PlayerId p = 0; p < profile.size(); ++p) {
    if (profile.assigned(p) && (profile.at(p) < 0 || profile.at(p) >= game.num_actions(p))) {
      throw Error("profile assigns player " + std::to_string(p + 1) + " an action outside its set");
    }
  }
}

}  // namespace

Rational player_cost(const CongestionGame& game, const ActionProfile& profile, PlayerId player) {
  check_profile_shape(game, profile);
  if (!profile.assigned(player)) throw Error("unassigned player");
  Rational total;
  for (ResourceId r : game.action(player, profile.at(player))) {
    total += game.delay(r).at(load_on(game, profile, r));
  }
  return total;
}

CongestionVector congestion_vector(const CongestionGame& game, const ActionProfile& profile) {
  check_profile_shape(game, profile);
  CongestionVector x{std::vector<int>(game.num_resources(), 0)};
  for (PlayerId p = 0; p < profile.size(); ++p) {
    if (!profile.assigned(p)) continue;
    for (ResourceId r : game.action(p, profile.at(p))) ++x.load[r];
  }
  return x;
}

CongestionGame induced_subgame(const CongestionGame& game, const ActionProfile& partial) {
  check_profile_shape(game, partial);
  if (partial.complete()) throw Error("no players remain");
  CongestionVector base = congestion_vector(game, partial);
  std::vector<DelayTable> delays;
  delays.reserve(game.num_resources());
  for (ResourceId r = 0; r < game.num_resources(); ++r) delays.push_back(game.delay(r).shifted(base.load[r]));
  std::vector<std::vector<Action>> sets;
  std::vector<int> labels;
  for (PlayerId p = 0; p < game.num_players(); ++p) {
    if (partial.assigned(p)) continue;
    sets.push_back(game.actions(p));
    labels.push_back(game.label(p));
  }
  return CongestionGame(game.resource_names(), std::move(delays), std::move(sets), std::move(labels));
}

CongestionGame truncate_game(const CongestionGame& game, const PlayerOrder& order, int k) {
  if (k < 1) throw Error("lookahead depth must be positive");
  if (order.size() != game.num_players()) throw Error("order does not match player count");
  const int keep = std::min(k, game.num_players());
  std::vector<PlayerId> kept(order.sequence().begin(), order.sequence().begin() + keep);
  std::sort(kept.begin(), kept.end());
  std::vector<std::vector<Action>> sets;
  std::vector<int> labels;
  for (PlayerId p : kept) {
    sets.push_back(game.actions(p));
    labels.push_back(game.label(p));
  }
  return CongestionGame(game.resource_names(), game.delays(), std::move(sets), std::move(labels));
}

std::int64_t profile_count(std::span<const int> action_counts) {
  std::int64_t total = 1;
  for (int m : action_counts) {
    if (m <= 0) return 0;
    if (total > std::numeric_limits<std::int64_t>::max() / m) return std::numeric_limits<std::int64_t>::max();
    total *= m;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Genericity

GenericityResult is_generic(const CongestionGame& game, const Limits& limits) {
  const int n = game.num_players();
  if (n > 30) throw BudgetExceeded("instance too large for exact genericity check");
  const std::vector<int> counts = game.action_counts();

  // Cost of the whole check, computed up front so the guard is exact.
  std::int64_t work = 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::int64_t profiles = 1;
    int members = 0;
    for (int p = 0; p < n; ++p) {
      if (!(mask >> p & 1u)) continue;
      ++members;
      profiles = profiles > limits.genericity_budget ? profiles : profiles * counts[p];
    }
    work += profiles * members;
    if (work > limits.genericity_budget) throw BudgetExceeded("instance too large for exact genericity check");
  }

  std::vector<int> load(game.num_resources());
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<PlayerId> members;
    for (int p = 0; p < n; ++p) {
      if (mask >> p & 1u) members.push_back(p);
    }
    // seen[j]: cost -> (action of j, odometer index of the profile)
    std::vector<std::unordered_map<Rational, std::pair<int, std::int64_t>>> seen(members.size());
    std::vector<int> digit(members.size(), 0);
    for (std::int64_t index = 0;; ++index) {
      std::fill(load.begin(), load.end(), 0);
      for (std::size_t t = 0; t < members.size(); ++t) {
        for (ResourceId r : game.action(members[t], digit[t])) ++load[r];
      }
      for (std::size_t t = 0; t < members.size(); ++t) {
        Rational c;
        for (ResourceId r : game.action(members[t], digit[t])) c += game.delay(r).at(load[r]);
        auto [it, inserted] = seen[t].try_emplace(c, digit[t], index);
        if (!inserted && it->second.first != digit[t]) {
          GenericityWitness w;
          w.players = members;
          w.player = members[t];
          w.cost = c;
          w.first = ActionProfile(n);
          w.second = ActionProfile(n);
          // Rebuild the earlier profile from its odometer index.
          std::int64_t rest = it->second.second;
          for (std::size_t u = members.size(); u-- > 0;) {
            w.first.assign(members[u], static_cast<int>(rest % counts[members[u]]));
            rest /= counts[members[u]];
          }
          for (std::size_t u = 0; u < members.size(); ++u) w.second.assign(members[u], digit[u]);
          return GenericityResult{false, std::move(w)};
        }
      }
      std::size_t pos = members.size();
      while (pos > 0) {
        --pos;
        if (++digit[pos] < counts[members[pos]]) break;
        digit[pos] = 0;
        if (pos == 0) goto next_mask;
      }
    }
  next_mask:;
  }
  return GenericityResult{true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Perturbation

namespace {

// Smallest nonzero difference between any two values in `values`; 1 if none.
Rational min_gap(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  Rational best = 1;
  bool found = false;
  for (std::size_t i = 1; i < values.size(); ++i) {
    Rational gap = values[i] - values[i - 1];
    if (!found || gap < best) best = gap;
    found = true;
  }
  return best;
}

// Every value sum_{r in a} d_r(m_r) with m_r in 1..levels; a superset of the
// costs the action can take in any profile.
void collect_action_costs(const CongestionGame& game, const Action& action, int levels,
                          std::vector<Rational>& out, std::int64_t& budget) {
  std::vector<int> m(action.size(), 1);
  while (true) {
    if (--budget < 0) throw BudgetExceeded("instance too large for exact genericity check");
    Rational c;
    for (std::size_t i = 0; i < action.size(); ++i) c += game.delay(action[i]).at(m[i]);
    out.push_back(c);
    std::size_t pos = action.size();
    while (pos > 0) {
      --pos;
      if (++m[pos] <= levels) break;
      m[pos] = 1;
      if (pos == 0) return;
    }
  }
}

// For each action of the shared set, a resource no other action uses.
std::optional<std::vector<ResourceId>> private_resources(const CongestionGame& game) {
  if (!game.symmetric()) return std::nullopt;
  const auto& set = game.actions(0);
  std::vector<int> users(game.num_resources(), 0);
  for (const Action& a : set) {
    for (ResourceId r : a) ++users[r];
  }
  std::vector<ResourceId> out;
  for (const Action& a : set) {
    auto it = std::find_if(a.begin(), a.end(), [&](ResourceId r) { return users[r] == 1; });
    if (it == a.end()) return std::nullopt;
    out.push_back(*it);
  }
  return out;
}

std::string describe_witness(const GenericityWitness& w) {
  return "player " + std::to_string(w.player + 1) + " is indifferent at cost " + w.cost.to_string();
}

}  // namespace

CongestionGame perturb_to_generic(const CongestionGame& game, const std::optional<ActionProfile>& preserve,
                                  std::uint64_t seed, const Limits& limits) {
  const int n = game.num_players();
  auto privates = private_resources(game);
  if (preserve) {
    if (!privates) {
      throw Error("equilibrium-preserving perturbation needs a symmetric game with a private resource on every path");
    }
    if (!preserve->complete() || !is_nash(game, *preserve)) throw Error("profile to preserve is not a Nash equilibrium");
  }
  if (is_generic(game, limits)) return game;

  std::mt19937_64 rng(seed);
  std::int64_t budget = limits.genericity_budget;
  std::vector<Rational> costs;
  for (PlayerId p = 0; p < n; ++p) {
    if (p > 0 && game.action_class(p) != p) continue;
    for (const Action& a : game.actions(p)) collect_action_costs(game, a, n, costs, budget);
  }
  const Rational delta = min_gap(std::move(costs));

  std::optional<GenericityWitness> last;
  if (privates) {
    const auto& paths = game.actions(0);
    const int num_paths = static_cast<int>(paths.size());
    std::vector<int> on_path(num_paths, 0);
    if (preserve) {
      for (PlayerId p = 0; p < n; ++p) ++on_path[preserve->at(p)];
    }
    std::vector<int> path_rank(num_paths);
    std::iota(path_rank.begin(), path_rank.end(), 0);
    std::shuffle(path_rank.begin(), path_rank.end(), rng);

    // Ordinal of (path, level): the band {level <= load in `preserve`} comes
    // first, then the rest; inside a band by level, then by shuffled rank.
    // Ordinals therefore grow with the level on each path and every
    // equilibrium path/level sits below every deviation target.
    struct Slot {
      int band, level, rank, path;
    };
    std::vector<Slot> slots;
    for (int path = 0; path < num_paths; ++path) {
      const int levels = game.delay(privates->at(path)).size();
      for (int level = 1; level <= levels; ++level) {
        slots.push_back({level <= on_path[path] ? 0 : 1, level, path_rank[path], path});
      }
    }
    std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) {
      return std::tie(a.band, a.level, a.rank) < std::tie(b.band, b.level, b.rank);
    });
    Rational epsilon = delta / Rational(2 * (static_cast<std::int64_t>(slots.size()) + 1));
    for (int attempt = 0; attempt < 8; ++attempt, epsilon /= 2) {
      std::vector<DelayTable> delays = game.delays();
      std::vector<std::vector<Rational>> values(game.num_resources());
      for (ResourceId r = 0; r < game.num_resources(); ++r) {
        values[r].assign(delays[r].values().begin(), delays[r].values().end());
      }
      for (std::size_t ord = 0; ord < slots.size(); ++ord) {
        const Slot& s = slots[ord];
        values[privates->at(s.path)][s.level - 1] += epsilon * Rational(static_cast<std::int64_t>(ord) + 1);
      }
      for (ResourceId r = 0; r < game.num_resources(); ++r) delays[r] = DelayTable(std::move(values[r]));
      CongestionGame out = game.with_delays(std::move(delays));
      auto check = is_generic(out, limits);
      if (check && (!preserve || is_nash(out, *preserve))) return out;
      if (!check) last = check.witness;
    }
  } else {
    std::int64_t max_action = 1;
    for (PlayerId p = 0; p < n; ++p) {
      for (const Action& a : game.actions(p)) max_action = std::max<std::int64_t>(max_action, a.size());
    }
    constexpr std::int64_t kWeightRange = 1'000'000;
    Rational epsilon = delta / Rational(2 * (kWeightRange * max_action + 1));
    std::uniform_int_distribution<std::int64_t> weight(1, kWeightRange);
    for (int attempt = 0; attempt < 8; ++attempt, epsilon /= 2) {
      std::vector<DelayTable> delays;
      for (ResourceId r = 0; r < game.num_resources(); ++r) {
        const DelayTable& t = game.delay(r);
        std::vector<std::int64_t> w(t.size());
        for (auto& x : w) x = weight(rng);
        if (t.non_increasing() && !t.non_decreasing()) {
          std::sort(w.begin(), w.end(), std::greater<>());
        } else {
          std::sort(w.begin(), w.end());
        }
        std::vector<Rational> v(t.values().begin(), t.values().end());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += epsilon * Rational(w[i]);
        delays.emplace_back(std::move(v));
      }
      CongestionGame out = game.with_delays(std::move(delays));
      auto check = is_generic(out, limits);
      if (check) return out;
      last = check.witness;
    }
  }
  throw Error("could not reach a generic game" + (last ? ": " + describe_witness(*last) : std::string()));
}

// ---------------------------------------------------------------------------
// Best responses and equilibria

std::vector<int> best_responses(const CongestionGame& game, const ActionProfile& profile, PlayerId player) {
  ActionProfile probe = profile;
  std::vector<int> best;
  Rational best_cost;
  for (int b = 0; b < game.num_actions(player); ++b) {
    probe.assign(player, b);
    Rational c = player_cost(game, probe, player);
    if (best.empty() || c < best_cost) {
      best = {b};
      best_cost = c;
    } else if (c == best_cost) {
      best.push_back(b);
    }
  }
  return best;
}

bool is_nash(const CongestionGame& game, const ActionProfile& profile) {
  check_profile_shape(game, profile);
  if (!profile.complete()) throw Error("Nash check needs a complete profile");
  return kernels::is_nash(CongestionCosts(game), profile);
}

OutcomeSet enumerate_nash(const CongestionGame& game, const Limits& limits) {
  return kernels::enumerate_nash(CongestionCosts(game), limits);
}

}  // namespace lookahead
