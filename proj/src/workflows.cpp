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


#include "lookahead/workflows.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lookahead/analysis.hpp"
#include "lookahead/fixtures.hpp"
#include "lookahead/games.hpp"
#include "lookahead/network.hpp"
#include "lookahead/solver.hpp"

namespace lookahead {
namespace {

using nlohmann::json;

json envelope(const std::string& command, json echo) {
  echo["command"] = command;
  return json{{"tool", kToolName}, {"version", kToolVersion}, {"command", std::move(echo)}};
}

json ratio_to_json(const RatioValue& v) {
  json out;
  out["ratio"] = v.ratio ? rational_to_json(*v.ratio) : json(nullptr);
  out["extreme"] = v.extreme ? rational_to_json(*v.extreme) : json(nullptr);
  out["optimal"] = v.optimal;
  if (!v.error.empty()) out["error"] = v.error;
  return out;
}

json kind_to_json(const KindReport& r) {
  json out;
  out["optimum"] = rational_to_json(r.optimum);
  out["poa"] = ratio_to_json(r.poa);
  out["pos"] = ratio_to_json(r.pos);
  out["spoa"] = ratio_to_json(r.spoa);
  json lpoa = json::object();
  for (const auto& [k, v] : r.lpoa) lpoa[std::to_string(k)] = ratio_to_json(v);
  out["lpoa"] = std::move(lpoa);
  return out;
}

// Each profile with its costs and whether it is a Nash equilibrium.
json annotated_set(const LookaheadStructure& s, const OutcomeSet& set) {
  json out = json::array();
  for (const ActionProfile& a : set) {
    json costs = json::array();
    for (PlayerId p = 0; p < s.num_players(); ++p) costs.push_back(rational_to_json(s.cost(a, p)));
    out.push_back({{"profile", profile_to_json(s, a)}, {"costs", std::move(costs)}, {"nash", kernels::is_nash(s, a)}});
  }
  return out;
}

std::vector<int> default_ks(const std::vector<int>& ks, int n) {
  if (!ks.empty()) {
    for (int k : ks) {
      if (k < 1) throw Error("lookahead depth must be positive");
    }
    std::vector<int> out = ks;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  std::vector<int> out(n);
  std::iota(out.begin(), out.end(), 1);
  return out;
}

std::string ratio_csv(const RatioValue& v) {
  if (!v.ratio) return ",";
  return std::to_string(v.ratio->num()) + "," + std::to_string(v.ratio->den());
}

PlayerOrder order_from_json(const json& value, int players) {
  if (!value.is_array()) throw Error("order must be an array of player numbers");
  std::string text;
  for (const json& p : value) {
    if (!text.empty()) text += ",";
    text += std::to_string(p.get<int>());
  }
  return parse_order(text, players);
}

std::vector<PlayerOrder> orders_from_json(const json& value, int players) {
  if (value.is_string() && value.get<std::string>() == "all") return PlayerOrder::all(players);
  return {order_from_json(value, players)};
}

OutcomeSet profiles_from_json(const LookaheadStructure& s, const json& value) {
  OutcomeSet out;
  for (const json& p : value) out.insert(profile_from_json(s, p, "fact"));
  return out;
}

std::string show_set(const LookaheadStructure& s, const OutcomeSet& set) {
  return outcome_set_to_json(s, set).dump();
}

OutcomeSet lookahead_for(const std::shared_ptr<const LookaheadStructure>& s, const std::vector<PlayerOrder>& orders,
                         int k, const SolverOptions& opts) {
  OutcomeSet out;
  for (const PlayerOrder& o : orders) out.merge(k_lookahead_set(SequentialGameView(s, o), k, opts));
  return out;
}

OutcomeSet permutations_of(const ActionProfile& a) {
  std::vector<int> c = a.choices();
  std::sort(c.begin(), c.end());
  OutcomeSet out;
  do {
    out.insert(ActionProfile(c));
  } while (std::next_permutation(c.begin(), c.end()));
  return out;
}

}  // namespace

TieBreakRule parse_tiebreak(const LookaheadStructure& structure, const std::string& text) {
  const std::vector<int> counts = structure.action_counts();
  if (text == "lex") return TieBreakRule::lexicographic(counts);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, '/');) parts.push_back(part);
  const int n = structure.num_players();
  if (parts.size() != 1 && static_cast<int>(parts.size()) != n) {
    throw Error("tiebreak needs one ranking or one per player");
  }
  std::vector<std::vector<int>> rankings(n);
  for (PlayerId p = 0; p < n; ++p) {
    const std::string& spec = parts.size() == 1 ? parts[0] : parts[p];
    std::stringstream items(spec);
    for (std::string label; std::getline(items, label, '>');) {
      int found = -1;
      for (int a = 0; a < counts[p]; ++a) {
        if (structure.action_label(p, a) == label) found = a;
      }
      if (found < 0) throw Error("player " + std::to_string(p + 1) + " has no action '" + label + "'");
      rankings[p].push_back(found);
    }
  }
  return TieBreakRule(std::move(rankings));
}

json limits_to_json(const Limits& limits) {
  return {{"node", limits.node_budget},
          {"profile", limits.profile_budget},
          {"genericity", limits.genericity_budget},
          {"path", limits.path_budget},
          {"strategy", limits.strategy_budget}};
}

RunResult cmd_analyze(const Instance& instance, const AnalyzeOptions& options, const Limits& limits) {
  json echo{{"instance", options.instance_path}, {"budgets", limits_to_json(limits)}};
  if (options.order) echo["order"] = *options.order;
  if (!options.ks.empty()) echo["k"] = options.ks;
  if (options.tiebreak) echo["tiebreak"] = *options.tiebreak;
  RunResult run;
  run.report = envelope("analyze", std::move(echo));

  auto structure = instance.structure();
  const int n = structure->num_players();
  const std::vector<int> ks = default_ks(options.ks, n);
  SolverOptions opts;
  opts.limits = limits;
  bool budget_hit = false;

  json results;
  results["name"] = instance.name;
  results["family"] = instance.family;
  results["players"] = n;
  if (!instance.extended_tables.empty()) results["extended_tables"] = instance.extended_tables;

  // Fixed-order view.
  const PlayerOrder order = options.order ? parse_order(*options.order, n) : PlayerOrder::identity(n);
  const SequentialGameView view(structure, order);
  json ordered;
  ordered["order"] = order_to_string(order);
  try {
    ordered["spo"] = annotated_set(*structure, spo_set(view, opts));
  } catch (const BudgetExceeded& e) {
    ordered["spo"] = {{"error", e.what()}};
    budget_hit = true;
  }
  json per_k = json::object();
  for (int k : ks) {
    try {
      per_k[std::to_string(k)] = annotated_set(*structure, k_lookahead_set(view, k, opts));
    } catch (const BudgetExceeded& e) {
      per_k[std::to_string(k)] = {{"error", e.what()}};
      budget_hit = true;
    }
  }
  ordered["lookahead"] = std::move(per_k);
  if (options.tiebreak) {
    const TieBreakRule rule = parse_tiebreak(*structure, *options.tiebreak);
    json tb;
    try {
      tb["spo"] = profile_to_json(*structure, spo_unique(view, rule, opts));
      json tk = json::object();
      for (int k : ks) tk[std::to_string(k)] = profile_to_json(*structure, k_lookahead_outcome(view, k, rule, opts));
      tb["lookahead"] = std::move(tk);
      tb["greedy"] = profile_to_json(*structure, greedy_sequence(view, rule));
    } catch (const BudgetExceeded& e) {
      tb["error"] = e.what();
      budget_hit = true;
    }
    ordered["tiebreak"] = std::move(tb);
  }
  results["order"] = std::move(ordered);

  // All orders and inefficiency.
  try {
    const InefficiencyReport rep = inefficiency_report(structure, ks, opts);
    json sets;
    if (rep.sets.nash) {
      sets["nash"] = outcome_set_to_json(*structure, *rep.sets.nash);
    } else {
      sets["nash"] = {{"error", rep.sets.nash_error}};
      budget_hit = true;
    }
    if (rep.sets.spo) {
      sets["spo"] = annotated_set(*structure, *rep.sets.spo);
    } else {
      sets["spo"] = {{"error", rep.sets.spo_error}};
      budget_hit = true;
    }
    json lk = json::object();
    for (const auto& [k, set] : rep.sets.lookahead) {
      if (set) {
        lk[std::to_string(k)] = annotated_set(*structure, *set);
      } else {
        lk[std::to_string(k)] = {{"error", rep.sets.lookahead_error.at(k)}};
        budget_hit = true;
      }
    }
    sets["lookahead"] = std::move(lk);
    results["all_orders"] = std::move(sets);
    results["inefficiency"] = {{"utilitarian", kind_to_json(rep.utilitarian)},
                               {"egalitarian", kind_to_json(rep.egalitarian)}};
    std::string csv = "kind,k,lpoa_num,lpoa_den,optimal\n";
    for (const KindReport* kr : {&rep.utilitarian, &rep.egalitarian}) {
      for (const auto& [k, v] : kr->lpoa) {
        csv += std::string(to_string(kr->kind)) + "," + std::to_string(k) + "," + ratio_csv(v) + "," +
               (v.optimal ? "true" : "false") + "\n";
      }
    }
    run.csv = std::move(csv);
  } catch (const BudgetExceeded& e) {
    results["inefficiency"] = {{"error", e.what()}};
    budget_hit = true;
  }

  if (instance.game) {
    const CongestionGame& g = *instance.game;
    try {
      const kernels::ArgminResult m = potential_minimizers(g, limits);
      results["potential_minimizers"] = {{"value", rational_to_json(m.value)},
                                         {"profiles", outcome_set_to_json(*structure, m.minimizers)}};
    } catch (const BudgetExceeded& e) {
      results["potential_minimizers"] = {{"error", e.what()}};
      budget_hit = true;
    }
    try {
      const GenericityResult gr = is_generic(g, limits);
      results["generic"] = gr.generic;
    } catch (const BudgetExceeded& e) {
      results["generic"] = {{"error", e.what()}};
      budget_hit = true;
    }
    try {
      results["rho"] = rational_to_json(rho_of_class(g.delays(), n));
    } catch (const BudgetExceeded&) {
      throw;
    } catch (const Error& e) {
      results["rho"] = {{"error", e.what()}};
    }
  }
  if (instance.term) results["extension_parallel"] = is_extension_parallel(*instance.term);

  run.report["results"] = std::move(results);
  run.exit_code = budget_hit ? kExitBudget : kExitOk;
  return run;
}

json verdict_to_json(const TheoremVerdict& v) {
  json out{{"id", v.id},
           {"claim", v.claim},
           {"trials", v.trials},
           {"passed", v.passed},
           {"failed", v.failed},
           {"skipped", v.skipped},
           {"inconclusive", v.inconclusive},
           {"notes", v.notes},
           {"verdict", !v.ok() ? "fail" : v.inconclusive > 0 ? "inconclusive" : "pass"}};
  if (v.counterexample) {
    const Counterexample& c = *v.counterexample;
    json cx{{"detail", c.detail}, {"instance", c.instance}};
    if (c.trial >= 0) {
      cx["trial"] = c.trial;
      cx["trial_seed"] = c.trial_seed;
    }
    out["counterexample"] = std::move(cx);
  }
  return out;
}

RunResult cmd_verify(const VerifyOptions& options, const Limits& limits) {
  const VerifyParams& p = options.params;
  json echo{{"id", options.id},
            {"trials", options.trials},
            {"seed", options.seed},
            {"players", p.players},
            {"term_size", p.term_size},
            {"max_delay", p.max_delay},
            {"attempts", p.attempts},
            {"max_paths", p.max_paths},
            {"budgets", limits_to_json(limits)}};
  if (options.replay) echo["replay"] = *options.replay;
  RunResult run;
  run.report = envelope("verify", std::move(echo));
  const auto& ids = theorem_ids();
  if (std::find(ids.begin(), ids.end(), options.id) == ids.end()) {
    run.report["error"] = "unknown theorem id '" + options.id + "'";
    run.exit_code = kExitUsage;
    return run;
  }
  const TheoremVerdict v = options.replay ? replay_trial(options.id, p, *options.replay, limits)
                                          : verify_theorem(options.id, p, options.trials, options.seed, options.jobs,
                                                           limits);
  run.report["results"] = verdict_to_json(v);
  run.csv = "id,trials,passed,failed,skipped,inconclusive\n" + v.id + "," + std::to_string(v.trials) + "," +
            std::to_string(v.passed) + "," + std::to_string(v.failed) + "," + std::to_string(v.skipped) + "," +
            std::to_string(v.inconclusive) + "\n";
  run.exit_code = !v.ok() ? kExitFailure : v.inconclusive > 0 ? kExitBudget : kExitOk;
  return run;
}

FactResult check_fact(const Instance& instance, const json& fact, const Limits& limits) {
  auto s = instance.structure();
  const LookaheadStructure& st = *s;
  const int n = st.num_players();
  SolverOptions opts;
  opts.limits = limits;
  const std::string type = fact.at("fact").get<std::string>();
  auto profile = [&](const char* key) { return profile_from_json(st, fact.at(key), type); };
  auto order = [&] { return order_from_json(fact.at("order"), n); };
  auto order_spo = [&] { return spo_set(SequentialGameView(s, order()), opts); };
  auto expect_bool = [&](bool actual, const std::string& what) {
    const bool want = fact.at("value").get<bool>();
    return FactResult{actual == want, what + " is " + (actual ? "true" : "false")};
  };
  auto require_game = [&]() -> const CongestionGame& {
    if (!instance.game) throw Error("fact '" + type + "' needs a congestion game");
    return *instance.game;
  };

  if (type == "nash") {
    const ActionProfile a = profile("profile");
    return expect_bool(kernels::is_nash(st, a), "is_nash " + profile_to_json(st, a).dump());
  }
  if (type == "spo_contains" || type == "spo_excludes") {
    const ActionProfile a = profile("profile");
    const OutcomeSet spo = order_spo();
    const bool in = spo.count(a) > 0;
    return {in == (type == "spo_contains"), "SPO set " + show_set(st, spo)};
  }
  if (type == "spo_equals") {
    const OutcomeSet spo = order_spo();
    const OutcomeSet want = profiles_from_json(st, fact.at("profiles"));
    return {spo == want, "SPO set " + show_set(st, spo) + ", expected " + show_set(st, want)};
  }
  if (type == "spo_matches_oracle") {
    const SequentialGameView view(s, order());
    const OutcomeSet fast = spo_set(view, opts);
    const OutcomeSet naive = spo_set_naive(view, opts);
    return {fast == naive, "propagation " + show_set(st, fast) + ", strategy enumeration " + show_set(st, naive)};
  }
  if (type == "lookahead_contains" || type == "lookahead_equals") {
    const int k = fact.at("k").get<int>();
    const OutcomeSet lo = lookahead_for(s, orders_from_json(fact.at("order"), n), k, opts);
    if (type == "lookahead_contains") {
      return {lo.count(profile("profile")) > 0, std::to_string(k) + "-lookahead set " + show_set(st, lo)};
    }
    const OutcomeSet want = profiles_from_json(st, fact.at("profiles"));
    return {lo == want, std::to_string(k) + "-lookahead set " + show_set(st, lo) + ", expected " + show_set(st, want)};
  }
  if (type == "lookahead_equals_permutations") {
    const int k = fact.at("k").get<int>();
    const OutcomeSet lo = k_lookahead_all_orders(s, k, opts);
    const OutcomeSet want = permutations_of(profile("profile"));
    return {lo == want, std::to_string(k) + "-lookahead set " + show_set(st, lo) + ", expected " + show_set(st, want)};
  }
  if (type == "lookahead_disjoint") {
    const int k = fact.at("k").get<int>();
    const int other = fact.at("other_k").get<int>();
    const OutcomeSet a = k_lookahead_all_orders(s, k, opts);
    const OutcomeSet b = k_lookahead_all_orders(s, other, opts);
    OutcomeSet common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(common, common.end()));
    return {common.empty(), "common outcomes " + show_set(st, common)};
  }
  if (type == "lookahead_optimal") {
    const int k = fact.at("k").get<int>();
    const OutcomeSet lo = k_lookahead_all_orders(s, k, opts);
    const Optimum opt = optimum(st, SocialCost::kUtilitarian, limits);
    const bool all = std::all_of(lo.begin(), lo.end(), [&](const ActionProfile& a) { return opt.profiles.count(a) > 0; });
    return expect_bool(all, "every " + std::to_string(k) + "-lookahead outcome optimal (set " + show_set(st, lo) +
                                ", optimum " + opt.value.to_string() + ")");
  }
  if (type == "generic") {
    return expect_bool(is_generic(require_game(), limits).generic, "generic");
  }
  if (type == "extension_parallel") {
    if (!instance.term) throw Error("fact 'extension_parallel' needs a network term");
    return expect_bool(is_extension_parallel(*instance.term), "extension-parallel");
  }
  if (type == "optimum") {
    const std::string kind = fact.at("kind").get<std::string>();
    if (kind != "utilitarian" && kind != "egalitarian") throw Error("unknown social cost '" + kind + "'");
    const Optimum opt =
        optimum(st, kind == "utilitarian" ? SocialCost::kUtilitarian : SocialCost::kEgalitarian, limits);
    const Rational want = rational_from_json(fact.at("value"), "value");
    return {opt.value == want, "optimum " + opt.value.to_string() + ", expected " + want.to_string()};
  }
  if (type == "best_responses") {
    const CongestionGame& g = require_game();
    const int player = fact.at("player").get<int>() - 1;
    if (player < 0 || player >= n) throw Error("player out of range");
    const std::vector<int> got = best_responses(g, profile("profile"), player);
    std::vector<int> want;
    for (const json& label : fact.at("actions")) {
      int found = -1;
      for (int a = 0; a < g.num_actions(player); ++a) {
        if (st.action_label(player, a) == label.get<std::string>()) found = a;
      }
      if (found < 0) throw Error("unknown action " + label.dump());
      want.push_back(found);
    }
    std::sort(want.begin(), want.end());
    json got_labels = json::array();
    for (int a : got) got_labels.push_back(st.action_label(player, a));
    return {got == want, "best responses " + got_labels.dump()};
  }
  if (type == "spo_has_unstable") {
    const OutcomeSet spo = order_spo();
    const bool any = std::any_of(spo.begin(), spo.end(), [&](const ActionProfile& a) { return !kernels::is_nash(st, a); });
    return {any, "SPO set " + show_set(st, spo)};
  }
  if (type == "tree_respecting_spo_optimal") {
    if (!instance.consensus) throw Error("fact 'tree_respecting_spo_optimal' needs a consensus game");
    const Optimum opt = optimum(st, SocialCost::kUtilitarian, limits);
    for (const PlayerOrder& o : PlayerOrder::all(n)) {
      if (!is_tree_respecting(*instance.consensus, o)) continue;
      for (const ActionProfile& a : spo_set(SequentialGameView(s, o), opts)) {
        if (!opt.profiles.count(a)) {
          return {false, "order " + order_to_string(o) + " has SPO " + profile_to_json(st, a).dump()};
        }
      }
    }
    return {true, "all tree-respecting SPOs optimal"};
  }
  if (type == "costs") {
    const ActionProfile a = profile("profile");
    json got = json::array();
    bool ok = fact.at("value").size() == static_cast<std::size_t>(n);
    for (PlayerId p = 0; p < n; ++p) {
      const Rational c = st.cost(a, p);
      got.push_back(rational_to_json(c));
      if (ok && c != rational_from_json(fact.at("value")[p], "value")) ok = false;
    }
    return {ok, "costs " + got.dump()};
  }
  if (type == "first_mover_worst") {
    const PlayerOrder o = order();
    const PlayerId first = o.at(0);
    for (const ActionProfile& a : spo_set(SequentialGameView(s, o), opts)) {
      Rational worst = st.cost(a, 0);
      for (PlayerId p = 1; p < n; ++p) worst = std::max(worst, st.cost(a, p));
      if (st.cost(a, first) == worst) {
        return {true, "SPO " + profile_to_json(st, a).dump() + " gives the first mover the largest cost"};
      }
    }
    return {false, "no SPO gives the first mover the largest cost"};
  }
  throw Error("unknown fact type '" + type + "'");
}

RunResult cmd_reproduce(const std::string& id, const Limits& limits) {
  RunResult run;
  run.report = envelope("reproduce", {{"id", id}, {"budgets", limits_to_json(limits)}});
  const auto ids = fixture_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    run.report["error"] = "unknown example id '" + id + "'";
    run.exit_code = kExitUsage;
    return run;
  }
  const Instance instance = load_fixture(id);
  json facts = json::array();
  int failed = 0;
  bool budget_hit = false;
  for (const json& fact : instance.expect) {
    json entry = fact;
    try {
      const FactResult r = check_fact(instance, fact, limits);
      entry["ok"] = r.ok;
      entry["detail"] = r.detail;
      if (!r.ok) ++failed;
    } catch (const BudgetExceeded& e) {
      entry["ok"] = false;
      entry["detail"] = e.what();
      budget_hit = true;
    }
    facts.push_back(std::move(entry));
  }
  run.report["results"] = {{"id", id},
                           {"source", instance.source},
                           {"facts", std::move(facts)},
                           {"failed", failed},
                           {"verdict", failed > 0 ? "fail" : budget_hit ? "inconclusive" : "pass"}};
  run.exit_code = failed > 0 ? kExitFailure : budget_hit ? kExitBudget : kExitOk;
  return run;
}

RunResult cmd_generate(const GenerateOptions& o, const Limits& limits) {
  json echo{{"family", o.family},   {"seed", o.seed},           {"players", o.players},   {"size", o.size},
            {"max_value", o.max_value}, {"ep", o.ep},           {"generic", o.generic},   {"cost_family", o.cost_family},
            {"singleton", o.singleton}, {"asymmetric", o.asymmetric}, {"tree", o.tree}, {"attempts", o.attempts}};
  RunResult run;
  run.report = envelope("generate", std::move(echo));
  if (o.players < 1) throw Error("players must be positive");
  json checks;
  Instance instance;
  if (o.family == "sncg-term") {
    SncgParams p;
    p.players = o.players;
    p.term_size = o.size > 0 ? o.size : 5;
    p.max_delay = o.max_value > 0 ? o.max_value : 100;
    p.ep_only = o.ep;
    SncgInstance inst = o.generic ? random_generic_sncg(o.seed, p, o.attempts, limits) : random_sncg(o.seed, p, limits);
    checks["extension_parallel"] = is_extension_parallel(inst.term);
    checks["generic"] = is_generic(inst.game, limits).generic;
    instance = sncg_instance(inst.term, inst.game);
  } else if (o.family == "cost-sharing") {
    if (o.cost_family != "table" && o.cost_family != "axb") throw Error("cost family must be 'table' or 'axb'");
    CostSharingParams p;
    p.players = o.players;
    p.resources = o.size > 0 ? o.size : 3;
    p.max_value = o.max_value > 0 ? o.max_value : 20;
    p.symmetric = !o.asymmetric;
    p.singleton = o.singleton;
    p.affine = o.cost_family == "axb";
    std::optional<CostSharingInstance> found;
    for (int attempt = 0; attempt < (o.generic ? o.attempts : 1) && !found; ++attempt) {
      CostSharingInstance inst = random_cost_sharing(o.generic ? mix_seed(o.seed, attempt) : o.seed, p);
      if (!o.generic || is_generic(inst.game, limits)) found = std::move(inst);
    }
    if (!found) throw Error("no generic instance after " + std::to_string(o.attempts) + " attempts");
    checks["generic"] = is_generic(found->game, limits).generic;
    instance = cost_sharing_instance(found->spec, found->game);
  } else if (o.family == "consensus") {
    ConsensusParams p;
    p.players = o.players;
    p.max_weight = o.max_value > 0 ? o.max_value : 5;
    p.tree = o.tree;
    instance = consensus_instance(random_consensus(o.seed, p));
  } else {
    run.report["error"] = "unknown family '" + o.family + "'";
    run.exit_code = kExitUsage;
    return run;
  }
  instance.name = o.family + "-" + std::to_string(o.seed);
  run.artifact = serialize_instance(instance);
  run.report["results"] = {{"name", instance.name}, {"players", instance.num_players()}, {"checks", checks}};
  return run;
}

}  // namespace lookahead
