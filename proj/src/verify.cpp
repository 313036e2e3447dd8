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


#include "lookahead/verify.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "lookahead/analysis.hpp"
#include "lookahead/fixtures.hpp"
#include "lookahead/games.hpp"
#include "lookahead/instance.hpp"
#include "lookahead/kernels.hpp"
#include "lookahead/network.hpp"
#include "lookahead/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lookahead {
namespace {

using nlohmann::json;

enum class Status { kPass, kFail, kSkip, kInconclusive };

struct TrialResult {
  Status status = Status::kPass;
  json instance;
  std::string detail;
};

struct Resolved {
  int players;
  int term_size;
  int max_delay;
  int attempts;
  int max_paths;
};

TrialResult pass() { return {}; }
TrialResult skip(std::string why) { return {Status::kSkip, nullptr, std::move(why)}; }
TrialResult fail(json instance, std::string detail) { return {Status::kFail, std::move(instance), std::move(detail)}; }

std::string show(const LookaheadStructure& s, const ActionProfile& a) {
  std::string out = "(";
  for (PlayerId p = 0; p < a.size(); ++p) {
    if (p) out += ", ";
    out += a.assigned(p) ? s.action_label(p, a.at(p)) : "-";
  }
  return out + ")";
}

std::string show(const LookaheadStructure& s, const OutcomeSet& set) {
  std::string out = "{";
  bool first = true;
  for (const ActionProfile& a : set) {
    if (!first) out += ", ";
    first = false;
    out += show(s, a);
  }
  return out + "}";
}

std::string compare_sets(const LookaheadStructure& s, const std::string& left_name, const OutcomeSet& left,
                         const std::string& right_name, const OutcomeSet& right) {
  return left_name + " = " + show(s, left) + " but " + right_name + " = " + show(s, right);
}

int draw(std::mt19937_64& rng, int lo, int hi) {
  if (hi < lo) hi = lo;
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

SolverOptions solver_options(const Limits& limits) {
  SolverOptions o;
  o.limits = limits;
  return o;
}

// --- instance sources ------------------------------------------------------

struct SncgDraw {
  SncgInstance inst;
  json doc;
};

std::optional<SncgDraw> draw_sncg(std::uint64_t seed, const Resolved& r, bool ep_only, bool generic,
                                  const Limits& limits) {
  for (int attempt = 0; attempt < r.attempts; ++attempt) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(attempt));
    std::mt19937_64 rng(s);
    SncgParams p;
    p.players = draw(rng, std::min(2, r.players), r.players);
    p.term_size = draw(rng, std::min(2, r.term_size), r.term_size);
    p.max_delay = r.max_delay;
    p.ep_only = ep_only;
    SncgInstance inst = random_sncg(mix_seed(s, 77), p, limits);
    if (inst.game.num_actions(0) > r.max_paths) continue;
    if (generic) {
      try {
        if (!is_generic(inst.game, limits)) continue;
      } catch (const BudgetExceeded&) {
        continue;
      }
    }
    json doc = instance_to_json(sncg_instance(inst.term, inst.game));
    return SncgDraw{std::move(inst), std::move(doc)};
  }
  return std::nullopt;
}

struct CostSharingDraw {
  CostSharingInstance inst;
  json doc;
};

std::optional<CostSharingDraw> draw_cost_sharing(std::uint64_t seed, const Resolved& r, CostSharingParams base,
                                                 bool generic, const std::function<bool(const CongestionGame&)>& keep,
                                                 const Limits& limits) {
  for (int attempt = 0; attempt < r.attempts; ++attempt) {
    const std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(attempt));
    std::mt19937_64 rng(s);
    CostSharingParams p = base;
    p.players = draw(rng, std::min(2, r.players), r.players);
    p.resources = draw(rng, 2, 4);
    p.max_value = r.max_delay;
    CostSharingInstance inst = random_cost_sharing(mix_seed(s, 78), p);
    if (generic) {
      try {
        if (!is_generic(inst.game, limits)) continue;
      } catch (const BudgetExceeded&) {
        continue;
      }
    }
    if (keep && !keep(inst.game)) continue;
    json doc = instance_to_json(cost_sharing_instance(inst.spec, inst.game));
    return CostSharingDraw{std::move(inst), std::move(doc)};
  }
  return std::nullopt;
}

// --- shared checks ---------------------------------------------------------

ActionProfile permuted_to(const ActionProfile& identity_outcome, const PlayerOrder& order) {
  ActionProfile out(identity_outcome.size());
  for (int t = 0; t < order.size(); ++t) out.assign(order.at(t), identity_outcome.at(t));
  return out;
}

std::optional<Rational> common_value(const OutcomeSet& set, const std::function<Rational(const ActionProfile&)>& f,
                                     std::string& detail) {
  std::optional<Rational> value;
  for (const ActionProfile& a : set) {
    Rational v = f(a);
    if (!value) {
      value = v;
    } else if (v != *value) {
      detail = "values " + value->to_string() + " and " + v.to_string() + " differ";
      return std::nullopt;
    }
  }
  return value;
}

// Every player who deviates from A is strictly worse off, whatever the others do.
bool strictly_dominant(const CongestionGame& game, const ActionProfile& a, const Limits& limits) {
  const std::vector<int> counts = game.action_counts();
  const std::int64_t total = profile_count(counts);
  if (total > limits.profile_budget) throw BudgetExceeded("profile space exceeds budget");
  ActionProfile b(game.num_players());
  for (std::int64_t i = 0; i < total; ++i) {
    kernels::decode_profile(i, counts, b);
    for (PlayerId p = 0; p < game.num_players(); ++p) {
      if (b.at(p) != a.at(p) && player_cost(game, b, p) <= player_cost(game, a, p)) return false;
    }
  }
  return true;
}

// --- suites ----------------------------------------------------------------

TrialResult suite_thm1(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, false, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const int n = g.num_players();
  std::mt19937_64 rng(mix_seed(seed, 501));
  std::vector<PlayerId> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  std::shuffle(seq.begin(), seq.end(), rng);
  const PlayerOrder sigma(seq);
  SolverOptions opts = solver_options(limits);
  opts.memoize = false;
  auto structure = current_costs(g);
  for (int k = 1; k <= n; ++k) {
    const OutcomeSet base = k_lookahead_set(SequentialGameView(structure, PlayerOrder::identity(n)), k, opts);
    const OutcomeSet target = k_lookahead_set(SequentialGameView(structure, sigma), k, opts);
    OutcomeSet moved;
    for (const ActionProfile& a : base) moved.insert(permuted_to(a, sigma));
    if (moved != target) {
      return fail(d->doc, "k=" + std::to_string(k) + ", order " + order_to_string(sigma) + ": " +
                              compare_sets(*structure, "permuted identity set", moved, "order set", target));
    }
  }
  return pass();
}

TrialResult suite_thm2(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, true, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const OutcomeSet nash = enumerate_nash(g, limits);
  const OutcomeSet greedy = k_lookahead_all_orders(g, 1, solver_options(limits));
  if (nash != greedy) return fail(d->doc, compare_sets(CongestionCosts(g), "NE", nash, "1-LO", greedy));
  return pass();
}

TrialResult suite_thm4(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, true, true, limits);
  if (!d) return skip("no generic instance drawn");
  const CongestionGame& g = d->inst.game;
  const OutcomeSet nash = enumerate_nash(g, limits);
  const OutcomeSet spo = spo_all_orders(g, solver_options(limits));
  if (nash != spo) return fail(d->doc, compare_sets(CongestionCosts(g), "NE", nash, "SPO", spo));
  return pass();
}

TrialResult suite_thm5(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, true, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const OutcomeSet nash = enumerate_nash(g, limits);
  const OutcomeSet spo = spo_all_orders(g, solver_options(limits));
  for (const ActionProfile& a : nash) {
    if (!spo.count(a)) {
      return fail(d->doc, "NE " + show(CongestionCosts(g), a) + " is not subgame-perfect for any order; SPO = " +
                              show(CongestionCosts(g), spo));
    }
  }
  return pass();
}

TrialResult suite_thm6(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, true, true, limits);
  if (!d) return skip("no generic instance drawn");
  const CongestionGame& g = d->inst.game;
  const CongestionCosts costs(g);
  const OutcomeSet nash = enumerate_nash(g, limits);
  const Rational opt = optimum(g, SocialCost::kUtilitarian, limits).value;
  const RatioValue poa = worst_ratio(costs, nash, SocialCost::kUtilitarian, opt);
  for (int k = 1; k <= g.num_players(); ++k) {
    const OutcomeSet lo = k_lookahead_all_orders(g, k, solver_options(limits));
    if (lo != nash) return fail(d->doc, "k=" + std::to_string(k) + ": " + compare_sets(costs, "NE", nash, "k-LO", lo));
    const RatioValue lpoa = worst_ratio(costs, lo, SocialCost::kUtilitarian, opt);
    if (lpoa.ratio != poa.ratio) return fail(d->doc, "k=" + std::to_string(k) + ": k-LPoA differs from PoA");
  }
  return pass();
}

TrialResult suite_thm7(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, true, true, limits);
  if (!d) return skip("no generic instance drawn");
  const CongestionGame& g = d->inst.game;
  const CongestionCosts costs(g);
  const int n = g.num_players();
  const SequentialGameView view = sequential_view(g, PlayerOrder::identity(n));
  const OutcomeSet spo = spo_set(view, solver_options(limits));
  if (spo.size() != 1) return fail(d->doc, "generic game with SPO set " + show(costs, spo));
  const ActionProfile& b = *spo.begin();
  for (PlayerId p = 1; p < n; ++p) {
    if (player_cost(g, b, p - 1) > player_cost(g, b, p)) {
      return fail(d->doc, "SPO " + show(costs, b) + ": player " + std::to_string(p) + " pays more than player " +
                              std::to_string(p + 1));
    }
  }
  const Rational first = player_cost(g, b, 0);
  for (int k = 1; k <= n; ++k) {
    for (const ActionProfile& a : k_lookahead_set(view, k, solver_options(limits))) {
      if (player_cost(g, a, 0) < first) {
        return fail(d->doc, "k=" + std::to_string(k) + ": outcome " + show(costs, a) +
                                " gives the first mover less than the SPO " + show(costs, b));
      }
    }
  }
  return pass();
}

TrialResult suite_ex4(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  std::mt19937_64 rng(mix_seed(seed, 4));
  const int n = draw(rng, 1, r.players);
  const bool swap = draw(rng, 0, 1) == 1;
  std::vector<Rational> lin;
  std::vector<Rational> half;
  for (int x = 1; x <= n + 1; ++x) {
    lin.emplace_back(x);
    half.push_back(Rational(x) + Rational(1, 2));
  }
  const int r_idx = swap ? 1 : 0;
  const int s_idx = 1 - r_idx;
  std::vector<std::string> names(2);
  names[r_idx] = "r";
  names[s_idx] = "s";
  std::vector<DelayTable> tables(2);
  tables[r_idx] = DelayTable(lin);
  tables[s_idx] = DelayTable(half);
  CongestionGame g(names, tables, std::vector<std::vector<Action>>(n, {{0}, {1}}));
  const json doc = instance_to_json(congestion_instance(g));
  // Even n: half on r, then half on s. Odd n: (n-1)/2 on s, then the rest on r.
  ActionProfile expected(n);
  const int r_action = *g.find_action(0, {r_idx});
  const int s_action = *g.find_action(0, {s_idx});
  for (PlayerId p = 0; p < n; ++p) {
    const bool on_r = (n % 2 == 0) ? p < n / 2 : p >= (n - 1) / 2;
    expected.assign(p, on_r ? r_action : s_action);
  }
  const OutcomeSet spo = spo_set(sequential_view(g, PlayerOrder::identity(n)), solver_options(limits));
  if (spo != OutcomeSet{expected}) {
    return fail(doc, compare_sets(CongestionCosts(g), "SPO", spo, "expected", OutcomeSet{expected}));
  }
  return pass();
}

TrialResult suite_cor1(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, false, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const OutcomeSet lo = k_lookahead_all_orders(g, 1, solver_options(limits));
  std::string detail;
  if (!common_value(lo, [&](const ActionProfile& a) { return rosenthal_potential(g, a); }, detail)) {
    return fail(d->doc, "1-LO potentials differ: " + detail);
  }
  return pass();
}

TrialResult suite_prop7(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, false, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const CongestionCosts costs(g);
  const OutcomeSet lo = k_lookahead_all_orders(g, 1, solver_options(limits));
  const kernels::ArgminResult minima = potential_minimizers(g, limits);
  for (const ActionProfile& a : lo) {
    if (!minima.minimizers.count(a)) {
      return fail(d->doc, "1-LO " + show(costs, a) + " has potential " + rosenthal_potential(g, a).to_string() +
                              " above the minimum " + minima.value.to_string());
    }
  }
  std::set<CongestionVector> lo_loads;
  std::set<CongestionVector> min_loads;
  for (const ActionProfile& a : lo) lo_loads.insert(congestion_vector(g, a));
  for (const ActionProfile& a : minima.minimizers) min_loads.insert(congestion_vector(g, a));
  if (lo_loads != min_loads) return fail(d->doc, "congestion vectors of 1-LOs and potential minima differ");
  return pass();
}

TrialResult suite_lem3(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, false, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const int m = g.num_players();
  const OutcomeSet lo = k_lookahead_all_orders(g, 1, solver_options(limits));
  std::optional<Rational> min_o;
  std::optional<Rational> min_w;
  for (const ActionProfile& b : lo) {
    const Rational o = opportunity_cost(g, b);
    const Rational w = worst_cost(g, b);
    if (!min_o || o < *min_o) min_o = o;
    if (!min_w || w < *min_w) min_w = w;
  }
  for (int n = 1; n <= m; ++n) {
    const CongestionGame small = truncate_game(g, PlayerOrder::identity(m), n);
    const std::vector<int> counts = small.action_counts();
    const std::int64_t total = profile_count(counts);
    if (total > limits.profile_budget) throw BudgetExceeded("profile space exceeds budget");
    ActionProfile a(n);
    for (std::int64_t i = 0; i < total; ++i) {
      kernels::decode_profile(i, counts, a);
      const Rational o = opportunity_cost(small, a);
      if (o > *min_o) {
        return fail(d->doc, "n=" + std::to_string(n) + ": opportunity cost " + o.to_string() + " of " +
                                show(CongestionCosts(small), a) + " exceeds " + min_o->to_string());
      }
      if (n < m && o > *min_w) {
        return fail(d->doc, "n=" + std::to_string(n) + ": opportunity cost " + o.to_string() + " of " +
                                show(CongestionCosts(small), a) + " exceeds worst cost " + min_w->to_string());
      }
    }
  }
  return pass();
}

// Common worst cost of the 1-LOs; nullopt (with detail) when they differ.
std::optional<Rational> greedy_worst_cost(const CongestionGame& g, const Limits& limits, std::string& detail) {
  const OutcomeSet lo = k_lookahead_all_orders(g, 1, solver_options(limits));
  return common_value(lo, [&](const ActionProfile& a) { return worst_cost(g, a); }, detail);
}

void multisets(int paths, int size, int first, std::vector<int>& current,
               const std::function<bool(const std::vector<int>&)>& visit, bool& stop) {
  if (stop) return;
  if (static_cast<int>(current.size()) == size) {
    if (!visit(current)) stop = true;
    return;
  }
  for (int p = first; p < paths && !stop; ++p) {
    current.push_back(p);
    multisets(paths, size, p, current, visit, stop);
    current.pop_back();
  }
}

TrialResult suite_lem4(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, false, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const int n = g.num_players();
  std::string detail;
  const auto w = greedy_worst_cost(g, limits, detail);
  if (!w) return fail(d->doc, "1-LO worst costs differ: " + detail);
  TrialResult result = pass();
  for (int m = 1; m < n && result.status == Status::kPass; ++m) {
    std::vector<int> current;
    bool stop = false;
    multisets(g.num_actions(0), m, 0, current, [&](const std::vector<int>& fixed) {
      ActionProfile partial(n);
      for (int i = 0; i < m; ++i) partial.assign(i, fixed[i]);
      const CongestionGame sub = induced_subgame(g, partial);
      std::string sub_detail;
      const auto sub_w = greedy_worst_cost(sub, limits, sub_detail);
      if (!sub_w) {
        result = fail(d->doc, "after fixing " + show(CongestionCosts(g), partial) + ": 1-LO worst costs differ: " +
                                  sub_detail);
        return false;
      }
      if (*sub_w > *w) {
        result = fail(d->doc, "after fixing " + show(CongestionCosts(g), partial) + ": W(G') = " +
                                  sub_w->to_string() + " > W(G) = " + w->to_string());
        return false;
      }
      return true;
    }, stop);
  }
  return result;
}

TrialResult suite_thm9(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, true, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  std::string detail;
  const auto w = greedy_worst_cost(g, limits, detail);
  if (!w) return fail(d->doc, "1-LO worst costs differ: " + detail);
  for (const ActionProfile& a : spo_all_orders(g, solver_options(limits))) {
    const Rational wa = worst_cost(g, a);
    if (wa != *w) {
      return fail(d->doc, "SPO " + show(CongestionCosts(g), a) + " has worst cost " + wa.to_string() +
                              " but W(G) = " + w->to_string());
    }
  }
  return pass();
}

TrialResult suite_cor2(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  auto d = draw_sncg(seed, r, false, false, limits);
  if (!d) return skip("no instance drawn");
  const CongestionGame& g = d->inst.game;
  const Rational rho = rho_of_class(g.delays(), g.num_players());
  const Rational opt = optimum(g, SocialCost::kUtilitarian, limits).value;
  const OutcomeSet lo = k_lookahead_all_orders(g, 1, solver_options(limits));
  const RatioValue lpoa = worst_ratio(CongestionCosts(g), lo, SocialCost::kUtilitarian, opt);
  if (!lpoa.ratio) return fail(d->doc, "no 1-LPoA value: " + lpoa.error);
  if (*lpoa.ratio > rho) {
    return fail(d->doc, "1-LPoA " + lpoa.ratio->to_string() + " exceeds rho " + rho.to_string());
  }
  return pass();
}

TrialResult suite_thm10(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  CostSharingParams base;
  base.symmetric = true;
  auto d = draw_cost_sharing(seed, r, base, true, nullptr, limits);
  if (!d) return skip("no generic instance drawn");
  const CongestionGame& g = d->inst.game;
  const CongestionCosts costs(g);
  const int n = g.num_players();
  const Rational opt = optimum(g, SocialCost::kUtilitarian, limits).value;
  for (int k = 1; k <= n; ++k) {
    std::optional<Rational> best;
    std::set<int> argmin;
    for (int a = 0; a < g.num_actions(0); ++a) {
      Rational c;
      for (ResourceId res : g.action(0, a)) c += g.delay(res).at(k);
      if (!best || c < *best) {
        best = c;
        argmin = {a};
      } else if (c == *best) {
        argmin.insert(a);
      }
    }
    const OutcomeSet lo = k_lookahead_all_orders(g, k, solver_options(limits));
    if (lo.empty()) return fail(d->doc, "k=" + std::to_string(k) + ": no lookahead outcome");
    for (const ActionProfile& a : lo) {
      const std::string where = "k=" + std::to_string(k) + ", outcome " + show(costs, a);
      for (PlayerId p = 0; p < n; ++p) {
        if (a.at(p) != a.at(0) || !argmin.count(a.at(p))) return fail(d->doc, where + " is not (P_k, ..., P_k)");
      }
      if (!is_nash(g, a)) return fail(d->doc, where + " is not a Nash equilibrium");
      if (k == n && social_cost(g, a, SocialCost::kUtilitarian) != opt) return fail(d->doc, where + " is not optimal");
    }
  }
  return pass();
}

TrialResult suite_lem5(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  std::mt19937_64 rng(mix_seed(seed, 5));
  CostSharingParams base;
  base.symmetric = draw(rng, 0, 1) == 1;
  base.singleton = draw(rng, 0, 1) == 1;
  Resolved small = r;
  small.players = std::min(r.players, 3);
  std::optional<ActionProfile> dominant;
  auto keep = [&](const CongestionGame& g) {
    dominant.reset();
    const std::vector<int> counts = g.action_counts();
    ActionProfile a(g.num_players());
    for (std::int64_t i = 0; i < profile_count(counts); ++i) {
      kernels::decode_profile(i, counts, a);
      if (strictly_dominant(g, a, limits)) {
        dominant = a;
        return true;
      }
    }
    return false;
  };
  auto d = draw_cost_sharing(seed, small, base, false, keep, limits);
  if (!d) return skip("no instance with a strictly stable outcome drawn");
  const CongestionGame& g = d->inst.game;
  auto structure = current_costs(g);
  for (const PlayerOrder& order : PlayerOrder::all(g.num_players())) {
    const OutcomeSet spo = spo_set(SequentialGameView(structure, order), solver_options(limits));
    if (spo != OutcomeSet{*dominant}) {
      return fail(d->doc, "order " + order_to_string(order) + ": " +
                              compare_sets(*structure, "SPO", spo, "strictly stable outcome", OutcomeSet{*dominant}));
    }
  }
  return pass();
}

TrialResult suite_cor3(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  CostSharingParams base;
  base.symmetric = true;
  base.affine = true;
  auto d = draw_cost_sharing(seed, r, base, true, nullptr, limits);
  if (!d) return skip("no generic instance drawn");
  const CongestionGame& g = d->inst.game;
  const CongestionCosts costs(g);
  const Rational opt = optimum(g, SocialCost::kUtilitarian, limits).value;
  std::optional<Rational> previous;
  for (int k = 1; k <= g.num_players(); ++k) {
    const OutcomeSet lo = k_lookahead_all_orders(g, k, solver_options(limits));
    const RatioValue v = worst_ratio(costs, lo, SocialCost::kUtilitarian, opt);
    if (!v.ratio) return fail(d->doc, "k=" + std::to_string(k) + ": no k-LPoA value: " + v.error);
    if (previous && *v.ratio > *previous) {
      return fail(d->doc, "k-LPoA rises from " + previous->to_string() + " to " + v.ratio->to_string() + " at k=" +
                              std::to_string(k));
    }
    previous = v.ratio;
  }
  return pass();
}

TrialResult suite_thm11(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  CostSharingParams base;
  base.symmetric = false;
  base.singleton = true;
  auto d = draw_cost_sharing(seed, r, base, true, nullptr, limits);
  if (!d) return skip("no generic instance drawn");
  const CongestionGame& g = d->inst.game;
  for (const ActionProfile& a : spo_all_orders(g, solver_options(limits))) {
    if (!is_nash(g, a)) return fail(d->doc, "SPO " + show(CongestionCosts(g), a) + " is not a Nash equilibrium");
  }
  return pass();
}

TrialResult suite_prop8(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  std::mt19937_64 rng(mix_seed(seed, 8));
  ConsensusParams p;
  p.players = draw(rng, std::min(2, r.players), r.players);
  p.max_weight = std::max(1, std::min(r.max_delay, 5));
  const ConsensusGame game = random_consensus(mix_seed(seed, 9), p);
  const json doc = instance_to_json(consensus_instance(game));
  auto structure = std::make_shared<const ConsensusCosts>(game);
  const int n = game.num_players();
  for (bool right : {false, true}) {
    const TieBreakRule rule = common_tiebreak(n, right);
    for (const PlayerOrder& order : PlayerOrder::all(n)) {
      const SequentialGameView view(structure, order);
      for (int k = 1; k <= n; ++k) {
        const ActionProfile a = k_lookahead_outcome(view, k, rule, solver_options(limits));
        const bool uniform = std::all_of(a.choices().begin(), a.choices().end(), [&](int c) { return c == a.at(0); });
        if (!uniform) {
          return fail(doc, std::string("common preference for ") + (right ? "R" : "L") + ", order " +
                               order_to_string(order) + ", k=" + std::to_string(k) + ": outcome " +
                               show(*structure, a));
        }
      }
    }
  }
  return pass();
}

TrialResult suite_ex5(std::uint64_t seed, const Resolved& r, const Limits& limits) {
  std::mt19937_64 rng(mix_seed(seed, 10));
  ConsensusParams p;
  p.players = draw(rng, std::min(2, r.players), r.players);
  p.max_weight = std::max(1, std::min(r.max_delay, 5));
  p.tree = true;
  const ConsensusGame game = random_consensus(mix_seed(seed, 11), p);
  const json doc = instance_to_json(consensus_instance(game));
  auto structure = std::make_shared<const ConsensusCosts>(game);
  const Optimum opt = optimum(*structure, SocialCost::kUtilitarian, limits);
  for (const PlayerOrder& order : PlayerOrder::all(game.num_players())) {
    if (!is_tree_respecting(game, order)) continue;
    for (const ActionProfile& a : spo_set(SequentialGameView(structure, order), solver_options(limits))) {
      if (!opt.profiles.count(a)) {
        return fail(doc, "tree-respecting order " + order_to_string(order) + ": SPO " + show(*structure, a) +
                             " is not optimal");
      }
    }
  }
  return pass();
}

// --- bundled-instance checks -------------------------------------------------

std::set<ActionProfile> permutations_of(const ActionProfile& a) {
  std::vector<int> c = a.choices();
  std::sort(c.begin(), c.end());
  std::set<ActionProfile> out;
  do {
    out.insert(ActionProfile(c));
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

TrialResult fixture_prop6(const Limits& limits) {
  const Instance inst = load_fixture("prop6");
  const CongestionGame& g = *inst.game;
  auto structure = inst.structure();
  const json doc = instance_to_json(inst);
  const auto rt_su_ru = profile_from_json(*structure, json::array({"r+t", "s+u", "r+u"}), "");
  const auto st_ru_ru = profile_from_json(*structure, json::array({"s+t", "r+u", "r+u"}), "");
  const OutcomeSet lo1 = k_lookahead_all_orders(g, 1, solver_options(limits));
  const OutcomeSet lo3 = k_lookahead_all_orders(g, 3, solver_options(limits));
  if (lo1 != permutations_of(rt_su_ru)) return fail(doc, "1-LO set is " + show(*structure, lo1));
  if (lo3 != permutations_of(st_ru_ru)) return fail(doc, "3-LO set is " + show(*structure, lo3));
  for (const ActionProfile& a : lo1) {
    if (lo3.count(a)) return fail(doc, "1-LO and 3-LO share " + show(*structure, a));
  }
  return pass();
}

TrialResult fixture_thm11(const Limits& limits) {
  const Instance inst = load_fixture("thm11");
  const CongestionGame& g = *inst.game;
  auto structure = inst.structure();
  const json doc = instance_to_json(inst);
  const ActionProfile rs = profile_from_json(*structure, json::array({"r", "s"}), "");
  const OutcomeSet lo = k_lookahead_set(g, PlayerOrder::identity(2), 1, solver_options(limits));
  if (!lo.count(rs)) return fail(doc, "(r, s) is not a 1-LO; 1-LO set is " + show(*structure, lo));
  if (is_nash(g, rs)) return fail(doc, "(r, s) is a Nash equilibrium");
  return pass();
}

TrialResult fixture_ex5(const Limits& limits) {
  const Instance inst = load_fixture("example5");
  auto structure = inst.structure();
  const json doc = instance_to_json(inst);
  const OutcomeSet spo = spo_set(SequentialGameView(structure, PlayerOrder::identity(3)), solver_options(limits));
  const bool unstable = std::any_of(spo.begin(), spo.end(), [&](const ActionProfile& a) {
    return !kernels::is_nash(*structure, a);
  });
  if (!unstable) return fail(doc, "order 1,2,3 has only stable SPOs: " + show(*structure, spo));
  const Optimum opt = optimum(*structure, SocialCost::kUtilitarian, limits);
  for (const PlayerOrder& order : PlayerOrder::all(3)) {
    if (!is_tree_respecting(*inst.consensus, order)) continue;
    for (const ActionProfile& a : spo_set(SequentialGameView(structure, order), solver_options(limits))) {
      if (!opt.profiles.count(a)) {
        return fail(doc, "tree-respecting order " + order_to_string(order) + " has non-optimal SPO " +
                             show(*structure, a));
      }
    }
  }
  return pass();
}

// --- catalog -----------------------------------------------------------------

using SuiteFn = TrialResult (*)(std::uint64_t, const Resolved&, const Limits&);
using FixtureFn = TrialResult (*)(const Limits&);

struct Entry {
  std::string id;
  std::string claim;
  SuiteFn suite = nullptr;      // random trials; null for fixture-only entries
  FixtureFn fixture = nullptr;  // bundled-instance check, run once
  int players = 4;
  int term_size = 8;
  int max_delay = 6;
};

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      {"thm1", "symmetric games: a k-lookahead outcome for the identity order, relabelled by position, is one for any order",
       suite_thm1, nullptr, 4, 8, 6},
      {"thm2", "extension-parallel network games: 1-lookahead outcomes are exactly the Nash equilibria", suite_thm2,
       nullptr, 4, 8, 6},
      {"thm4", "generic extension-parallel network games: subgame-perfect outcomes are exactly the Nash equilibria",
       suite_thm4, nullptr, 4, 8, 100},
      {"thm5", "extension-parallel network games: every Nash equilibrium is subgame-perfect for some order",
       suite_thm5, nullptr, 4, 8, 6},
      {"thm6", "generic extension-parallel network games: k-lookahead outcomes are exactly the Nash equilibria for every k",
       suite_thm6, nullptr, 4, 8, 100},
      {"thm7", "generic extension-parallel network games: identity-order SPO costs rise along the order and the first mover does no better under any k",
       suite_thm7, nullptr, 4, 8, 100},
      {"ex4", "d_r(x)=x, d_s(x)=x+1/2: the identity-order SPO alternates with the parity of n", suite_ex4, nullptr, 7,
       2, 1},
      {"cor1", "series-parallel network games: all 1-lookahead outcomes share one potential value", suite_cor1,
       nullptr, 4, 8, 6},
      {"prop7", "series-parallel network games: 1-lookahead outcomes minimise the potential and match its minima in load vectors",
       suite_prop7, nullptr, 4, 8, 6},
      {"lem3", "series-parallel network games: opportunity cost with fewer players never exceeds that of a 1-lookahead outcome",
       suite_lem3, nullptr, 4, 8, 6},
      {"lem4", "series-parallel network games: fixing fewer than n paths never raises the greedy worst cost", suite_lem4,
       nullptr, 4, 8, 6},
      {"thm9", "extension-parallel network games: every SPO attains the greedy worst cost", suite_thm9, nullptr, 4, 8,
       6},
      {"cor2", "series-parallel network games: 1-LPoA is at most the instance rho", suite_cor2, nullptr, 4, 8, 6},
      {"thm10", "generic symmetric cost-sharing games: k-lookahead outcomes are (P_k,...,P_k), stable, optimal at k=n",
       suite_thm10, nullptr, 4, 8, 20},
      {"lem5", "an outcome no player can leave without being strictly worse off is the unique SPO", suite_lem5,
       nullptr, 3, 8, 6},
      {"cor3", "generic symmetric cost-sharing games with d(x)=a/x+b: k-LPoA does not increase with k", suite_cor3,
       nullptr, 5, 8, 10},
      {"thm11", "generic singleton cost-sharing games: SPOs are stable; the bundled greedy outcome is not",
       suite_thm11, fixture_thm11, 4, 8, 20},
      {"prop8", "consensus games with a common tie-breaking rule: every k-lookahead outcome is all-L or all-R",
       suite_prop8, nullptr, 5, 8, 5},
      {"ex5", "consensus trees: tree-respecting orders give only optimal SPOs; the bundled order 1,2,3 has an unstable one",
       suite_ex5, fixture_ex5, 5, 8, 5},
      {"prop6", "bundled non-extension-parallel game: 1-lookahead and 3-lookahead outcome sets are disjoint", nullptr,
       fixture_prop6, 3, 4, 100},
  };
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const Entry& e : catalog()) {
    if (e.id == id) return e;
  }
  throw Error("unknown theorem id '" + id + "'");
}

Resolved resolve(const Entry& e, const VerifyParams& p) {
  Resolved r{p.players > 0 ? p.players : e.players, p.term_size > 0 ? p.term_size : e.term_size,
             p.max_delay > 0 ? p.max_delay : e.max_delay, std::max(1, p.attempts), std::max(1, p.max_paths)};
  return r;
}

template <typename Fn>
TrialResult guarded(Fn fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    return {Status::kInconclusive, nullptr, e.what()};
  } catch (const std::exception& e) {
    return {Status::kFail, nullptr, std::string("error: ") + e.what()};
  }
}

void tally(TheoremVerdict& v, const TrialResult& t, int trial, std::uint64_t seed) {
  switch (t.status) {
    case Status::kPass:
      ++v.passed;
      break;
    case Status::kSkip:
      ++v.skipped;
      break;
    case Status::kInconclusive:
      ++v.inconclusive;
      break;
    case Status::kFail:
      ++v.failed;
      if (!v.counterexample) v.counterexample = Counterexample{trial, seed, t.instance, t.detail};
      break;
  }
}

void run_fixture(const Entry& e, TheoremVerdict& v, const Limits& limits) {
  if (!e.fixture) return;
  const TrialResult t = guarded([&] { return e.fixture(limits); });
  v.notes.push_back(std::string("bundled instance: ") +
                    (t.status == Status::kPass ? "pass" : t.status == Status::kFail ? "fail" : "inconclusive"));
  if (t.status == Status::kFail) {
    ++v.failed;
    if (!v.counterexample) v.counterexample = Counterexample{-1, 0, t.instance, t.detail};
  } else if (t.status == Status::kInconclusive) {
    ++v.inconclusive;
  }
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const Entry& e : catalog()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

const std::string& theorem_claim(const std::string& id) { return find_entry(id).claim; }

std::uint64_t trial_seed(std::uint64_t seed, int index) { return mix_seed(seed, 0x5eed0000ull + index); }

TheoremVerdict verify_theorem(const std::string& id, const VerifyParams& params, int trials, std::uint64_t seed,
                              int jobs, const Limits& limits) {
  const Entry& e = find_entry(id);
  if (trials < 0) throw Error("trial count must be non-negative");
  const Resolved r = resolve(e, params);
  TheoremVerdict v;
  v.id = e.id;
  v.claim = e.claim;
  run_fixture(e, v, limits);
  if (!e.suite) {
    v.notes.push_back("bound to the bundled instance; the trial count is ignored");
    return v;
  }
  v.trials = trials;
  std::vector<TrialResult> results(trials);
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#else
  (void)jobs;
#endif
  for (int i = 0; i < trials; ++i) {
    const std::uint64_t s = trial_seed(seed, i);
    results[i] = guarded([&] { return e.suite(s, r, limits); });
  }
  for (int i = 0; i < trials; ++i) tally(v, results[i], i, trial_seed(seed, i));
  if (trials == 0) v.notes.push_back("no trials run; the claim holds vacuously");
  if (v.skipped > 0) v.notes.push_back(std::to_string(v.skipped) + " trials drew no qualifying instance");
  if (v.inconclusive > 0) v.notes.push_back(std::to_string(v.inconclusive) + " trials hit a search budget");
  return v;
}

TheoremVerdict replay_trial(const std::string& id, const VerifyParams& params, std::uint64_t seed,
                            const Limits& limits) {
  const Entry& e = find_entry(id);
  TheoremVerdict v;
  v.id = e.id;
  v.claim = e.claim;
  if (!e.suite) {
    run_fixture(e, v, limits);
    return v;
  }
  v.trials = 1;
  const Resolved r = resolve(e, params);
  tally(v, guarded([&] { return e.suite(seed, r, limits); }), 0, seed);
  return v;
}

}  // namespace lookahead
