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


#include "lookahead/analysis.hpp"

#include <algorithm>

namespace lookahead {
namespace {

RatioValue extreme_ratio(const LookaheadStructure& structure, const OutcomeSet& outcomes, SocialCost kind,
                         const Rational& optimum_value, bool worst) {
  RatioValue out;
  if (outcomes.empty()) {
    out.error = "empty outcome set";
    return out;
  }
  for (const ActionProfile& a : outcomes) {
    Rational v = social_cost(structure, a, kind);
    if (!out.extreme || (worst ? v > *out.extreme : v < *out.extreme)) out.extreme = v;
  }
  out.optimal = *out.extreme == optimum_value;
  if (optimum_value.sign() > 0) out.ratio = *out.extreme / optimum_value;
  return out;
}

KindReport kind_report(const LookaheadStructure& structure, const OutcomeSets& sets, SocialCost kind,
                       const Limits& limits) {
  KindReport r;
  r.kind = kind;
  r.optimum = optimum(structure, kind, limits).value;
  auto fill = [&](const std::optional<OutcomeSet>& set, const std::string& error, bool worst) {
    if (!set) {
      RatioValue v;
      v.error = error;
      return v;
    }
    return extreme_ratio(structure, *set, kind, r.optimum, worst);
  };
  r.poa = fill(sets.nash, sets.nash_error, true);
  r.pos = fill(sets.nash, sets.nash_error, false);
  r.spoa = fill(sets.spo, sets.spo_error, true);
  for (const auto& [k, set] : sets.lookahead) {
    auto it = sets.lookahead_error.find(k);
    r.lpoa[k] = fill(set, it == sets.lookahead_error.end() ? std::string() : it->second, true);
  }
  return r;
}

}  // namespace

const char* to_string(SocialCost kind) { return kind == SocialCost::kUtilitarian ? "utilitarian" : "egalitarian"; }

Rational rosenthal_potential(const CongestionGame& game, const ActionProfile& profile) {
  if (!profile.complete()) throw Error("potential needs a complete profile");
  const CongestionVector x = congestion_vector(game, profile);
  Rational phi;
  for (ResourceId r = 0; r < game.num_resources(); ++r) {
    for (int i = 1; i <= x.load[r]; ++i) phi += game.delay(r).at(i);
  }
  return phi;
}

kernels::ArgminResult potential_minimizers(const CongestionGame& game, const Limits& limits) {
  return kernels::argmin_profiles(
      game.action_counts(), [&](const ActionProfile& a) { return rosenthal_potential(game, a); }, limits);
}

Rational opportunity_cost(const CongestionGame& game, const ActionProfile& profile) {
  if (!game.symmetric()) throw Error("opportunity cost needs a symmetric game");
  const CongestionVector x = congestion_vector(game, profile);
  std::optional<Rational> best;
  for (const Action& path : game.actions(0)) {
    Rational c;
    for (ResourceId r : path) c += game.delay(r).at(x.load[r] + 1);
    if (!best || c < *best) best = c;
  }
  return *best;
}

Rational worst_cost(const CongestionGame& game, const ActionProfile& profile) {
  return social_cost(game, profile, SocialCost::kEgalitarian);
}

Rational social_cost(const LookaheadStructure& structure, const ActionProfile& profile, SocialCost kind) {
  if (!profile.complete()) throw Error("social cost needs a complete profile");
  Rational total;
  for (PlayerId p = 0; p < structure.num_players(); ++p) {
    Rational c = structure.cost(profile, p);
    if (kind == SocialCost::kUtilitarian) {
      total += c;
    } else if (p == 0 || c > total) {
      total = c;
    }
  }
  return total;
}

Rational social_cost(const CongestionGame& game, const ActionProfile& profile, SocialCost kind) {
  return social_cost(CongestionCosts(game), profile, kind);
}

Optimum optimum(const LookaheadStructure& structure, SocialCost kind, const Limits& limits) {
  kernels::ArgminResult r = kernels::argmin_profiles(
      structure.action_counts(), [&](const ActionProfile& a) { return social_cost(structure, a, kind); }, limits);
  return {std::move(r.minimizers), r.value};
}

Optimum optimum(const CongestionGame& game, SocialCost kind, const Limits& limits) {
  return optimum(CongestionCosts(game), kind, limits);
}

RatioValue worst_ratio(const LookaheadStructure& structure, const OutcomeSet& outcomes, SocialCost kind,
                       const Rational& optimum_value) {
  return extreme_ratio(structure, outcomes, kind, optimum_value, true);
}

RatioValue best_ratio(const LookaheadStructure& structure, const OutcomeSet& outcomes, SocialCost kind,
                      const Rational& optimum_value) {
  return extreme_ratio(structure, outcomes, kind, optimum_value, false);
}

OutcomeSets outcome_sets(const std::shared_ptr<const LookaheadStructure>& structure, const std::vector<int>& ks,
                         const SolverOptions& options) {
  OutcomeSets sets;
  try {
    sets.nash = kernels::enumerate_nash(*structure, options.limits);
  } catch (const BudgetExceeded& e) {
    sets.nash_error = e.what();
  }
  try {
    sets.spo = spo_all_orders(structure, options);
  } catch (const BudgetExceeded& e) {
    sets.spo_error = e.what();
  }
  for (int k : ks) {
    try {
      sets.lookahead[k] = k_lookahead_all_orders(structure, k, options);
    } catch (const BudgetExceeded& e) {
      sets.lookahead[k] = std::nullopt;
      sets.lookahead_error[k] = e.what();
    }
  }
  return sets;
}

InefficiencyReport inefficiency_report(const std::shared_ptr<const LookaheadStructure>& structure,
                                       const std::vector<int>& ks, const SolverOptions& options) {
  InefficiencyReport report;
  report.sets = outcome_sets(structure, ks, options);
  report.utilitarian = kind_report(*structure, report.sets, SocialCost::kUtilitarian, options.limits);
  report.egalitarian = kind_report(*structure, report.sets, SocialCost::kEgalitarian, options.limits);
  return report;
}

Rational rho_of_class(const std::vector<DelayTable>& tables, int x_max) {
  if (x_max < 1) throw Error("x_max must be positive");
  Rational sup;
  for (const DelayTable& d : tables) {
    for (int x = 1; x <= x_max; ++x) {
      if (d.at(x).sign() <= 0) throw Error("rho needs positive delays");
    }
    for (int x = 1; x <= x_max; ++x) {
      const Rational& dx = d.at(x);
      for (int y = 1; y <= x_max; ++y) {
        Rational term = Rational(y) * (dx - d.at(y)) / (Rational(x) * dx);
        if (term > sup) sup = term;
      }
    }
  }
  if (sup >= Rational(1)) throw Error("rho undefined/infinite");
  return (Rational(1) - sup).reciprocal();
}

}  // namespace lookahead
