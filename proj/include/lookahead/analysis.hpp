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


// Potential, social costs, inefficiency ratios and the rho bound.

#ifndef LOOKAHEAD_ANALYSIS_HPP_
#define LOOKAHEAD_ANALYSIS_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lookahead/game.hpp"
#include "lookahead/kernels.hpp"
#include "lookahead/solver.hpp"
#include "lookahead/structure.hpp"

namespace lookahead {

enum class SocialCost { kUtilitarian, kEgalitarian };
const char* to_string(SocialCost kind);

Rational rosenthal_potential(const CongestionGame& game, const ActionProfile& profile);
kernels::ArgminResult potential_minimizers(const CongestionGame& game, const Limits& limits = {});

// Cheapest shared action for one more player. Needs a symmetric game whose
// tables cover every load plus one.
Rational opportunity_cost(const CongestionGame& game, const ActionProfile& profile);
// Largest player cost (the egalitarian social cost).
Rational worst_cost(const CongestionGame& game, const ActionProfile& profile);

Rational social_cost(const LookaheadStructure& structure, const ActionProfile& profile, SocialCost kind);
Rational social_cost(const CongestionGame& game, const ActionProfile& profile, SocialCost kind);

struct Optimum {
  OutcomeSet profiles;
  Rational value;
};
Optimum optimum(const LookaheadStructure& structure, SocialCost kind, const Limits& limits = {});
Optimum optimum(const CongestionGame& game, SocialCost kind, const Limits& limits = {});

// max (or min) social cost over a set relative to the optimum.
struct RatioValue {
  std::optional<Rational> ratio;  // absent when the optimum is 0 or no value exists
  std::optional<Rational> extreme;
  bool optimal = false;  // the extreme equals the optimum
  std::string error;     // why no value was computed
};

struct KindReport {
  SocialCost kind = SocialCost::kUtilitarian;
  Rational optimum;
  RatioValue poa;
  RatioValue pos;
  RatioValue spoa;
  std::map<int, RatioValue> lpoa;  // keyed by k
};

struct OutcomeSets {
  std::optional<OutcomeSet> nash;
  std::string nash_error;
  std::optional<OutcomeSet> spo;  // all orders
  std::string spo_error;
  std::map<int, std::optional<OutcomeSet>> lookahead;  // all orders
  std::map<int, std::string> lookahead_error;
};

struct InefficiencyReport {
  OutcomeSets sets;
  KindReport utilitarian;
  KindReport egalitarian;
};

OutcomeSets outcome_sets(const std::shared_ptr<const LookaheadStructure>& structure, const std::vector<int>& ks,
                         const SolverOptions& options = {});
RatioValue worst_ratio(const LookaheadStructure& structure, const OutcomeSet& outcomes, SocialCost kind,
                       const Rational& optimum_value);
RatioValue best_ratio(const LookaheadStructure& structure, const OutcomeSet& outcomes, SocialCost kind,
                      const Rational& optimum_value);

InefficiencyReport inefficiency_report(const std::shared_ptr<const LookaheadStructure>& structure,
                                       const std::vector<int>& ks, const SolverOptions& options = {});

// 1 / (1 - s) where s is the largest y(d(x) - d(y)) / (x d(x)) over the
// tables, 1 <= x <= x_max and 0 <= y <= x_max (the y = 0 term is 0).
Rational rho_of_class(const std::vector<DelayTable>& tables, int x_max);

}  // namespace lookahead

#endif  // LOOKAHEAD_ANALYSIS_HPP_
