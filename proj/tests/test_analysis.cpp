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


#include "doctest.h"
#include "helpers.hpp"
#include "lookahead/analysis.hpp"
#include "lookahead/fixtures.hpp"
#include "lookahead/games.hpp"
#include "oracles.hpp"

using namespace lookahead;
using nlohmann::json;
using testing_util::contains;
using testing_util::message_of;
using testing_util::profile;
using testing_util::profiles;

namespace {

SncgParams small_params(std::uint64_t seed, bool ep) {
  SncgParams p;
  p.players = 2 + static_cast<int>(seed % 3);
  p.term_size = 2 + static_cast<int>(seed % 6);
  p.max_delay = 6;
  p.ep_only = ep;
  return p;
}

}  // namespace

TEST_CASE("potential differences equal unilateral cost differences") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const CongestionGame g = random_sncg(seed, small_params(seed, false)).game;
    oracle::for_each_profile(g.action_counts(), [&](const std::vector<int>& a) {
      const Rational phi = rosenthal_potential(g, ActionProfile(a));
      CHECK(phi == oracle::potential(g, a));
      for (int p = 0; p < g.num_players(); ++p) {
        std::vector<int> b = a;
        b[p] = (a[p] + 1) % g.num_actions(p);
        CHECK(oracle::potential(g, b) - phi == oracle::cost(g, b, p) - oracle::cost(g, a, p));
      }
    });
  }
}

TEST_CASE("potential minimizers are exact and stable") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const CongestionGame g = random_sncg(seed, small_params(seed, false)).game;
    const kernels::ArgminResult m = potential_minimizers(g);
    std::optional<Rational> best;
    OutcomeSet argmin;
    oracle::for_each_profile(g.action_counts(), [&](const std::vector<int>& a) {
      const Rational phi = oracle::potential(g, a);
      if (!best || phi < *best) {
        best = phi;
        argmin = {ActionProfile(a)};
      } else if (phi == *best) {
        argmin.insert(ActionProfile(a));
      }
    });
    CHECK(m.value == *best);
    CHECK(m.minimizers == argmin);
    for (const ActionProfile& a : m.minimizers) CHECK(is_nash(g, a));
  }
}

TEST_CASE("one player: every outcome set is the set of cheapest actions") {
  const CongestionGame g({"a", "b", "c"}, {DelayTable({Rational(2)}), DelayTable({Rational(1)}), DelayTable({Rational(1)})},
                         {{{0}, {1}, {2}}});
  const auto s = current_costs(g);
  const OutcomeSet cheapest{ActionProfile(std::vector<int>{1}), ActionProfile(std::vector<int>{2})};
  CHECK(potential_minimizers(g).minimizers == cheapest);
  CHECK(enumerate_nash(g) == cheapest);
  CHECK(spo_all_orders(g) == cheapest);
  CHECK(k_lookahead_all_orders(g, 1) == cheapest);
  CHECK(optimum(g, SocialCost::kUtilitarian).profiles == cheapest);
  const ActionProfile a(std::vector<int>{0});
  CHECK(social_cost(g, a, SocialCost::kUtilitarian) == social_cost(g, a, SocialCost::kEgalitarian));
}

TEST_CASE("intro social costs and optimum") {
  const Instance inst = load_fixture("intro");
  const CongestionGame& g = *inst.game;
  const auto s = inst.structure();
  const ActionProfile bl_m = profile(*s, {"b+l", "m"});
  const ActionProfile bs_bs = profile(*s, {"b+s", "b+s"});
  CHECK(social_cost(g, bl_m, SocialCost::kEgalitarian) == Rational(6));
  CHECK(social_cost(g, bl_m, SocialCost::kUtilitarian) == Rational(11));
  CHECK(worst_cost(g, bs_bs) == Rational(6));
  CHECK(social_cost(g, bs_bs, SocialCost::kUtilitarian) == Rational(12));
  const Optimum opt = optimum(g, SocialCost::kUtilitarian);
  CHECK(opt.value == Rational(10));
  CHECK(opt.profiles == profiles(*s, json::parse(R"([["b+s","m"],["m","b+s"]])")));
  CHECK_THROWS(social_cost(g, ActionProfile(2), SocialCost::kUtilitarian));
}

TEST_CASE("opportunity cost") {
  const Instance inst = load_fixture("intro");
  const CongestionGame& g = *inst.game;
  ActionProfile a(2);
  CHECK(opportunity_cost(g, a) == Rational(4));
  a.assign(0, g.find_action(0, {0, 2}).value());
  CHECK(opportunity_cost(g, a) == Rational(6));
  const CongestionGame short_tables({"r"}, {DelayTable({Rational(1), Rational(2)})}, {{{0}}, {{0}}});
  CHECK(contains(message_of([&] { (void)opportunity_cost(short_tables, ActionProfile({0, 0})); }), "table too short"));
  const CongestionGame asym({"r", "s"}, {DelayTable({Rational(1), Rational(2)}), DelayTable({Rational(1), Rational(2)})},
                           {{{0}}, {{1}}});
  CHECK_THROWS(opportunity_cost(asym, ActionProfile(2)));
}

TEST_CASE("example2 optimum puts everyone on one resource") {
  const Instance inst = load_fixture("example2");
  const Optimum opt = optimum(*inst.game, SocialCost::kUtilitarian);
  CHECK(opt.value == Rational(3));
  CHECK(opt.profiles == OutcomeSet{ActionProfile({0, 0, 0}), ActionProfile({1, 1, 1})});
}

TEST_CASE("consensus optimum and zero-cost ratios") {
  const Instance inst = load_fixture("example5");
  const auto s = inst.structure();
  const Optimum opt = optimum(*s, SocialCost::kUtilitarian);
  CHECK(opt.value == Rational(0));
  CHECK(opt.profiles == OutcomeSet{ActionProfile({0, 0, 0}), ActionProfile({1, 1, 1})});
  const InefficiencyReport rep = inefficiency_report(s, {1, 3});
  CHECK_FALSE(rep.utilitarian.poa.ratio);
  CHECK(rep.utilitarian.poa.optimal);
  CHECK_FALSE(rep.utilitarian.spoa.ratio);
  CHECK_FALSE(rep.utilitarian.spoa.optimal);
}

TEST_CASE("rho of delay classes") {
  const std::vector<DelayTable> constant{DelayTable(std::vector<Rational>(10, Rational(3)))};
  CHECK(rho_of_class(constant, 10) == Rational(1));
  std::vector<Rational> linear;
  for (int x = 1; x <= 10; ++x) linear.emplace_back(x);
  CHECK(rho_of_class({DelayTable(linear)}, 10) == Rational(4, 3));
  std::vector<Rational> quad;
  for (int x = 1; x <= 6; ++x) quad.emplace_back(x * x);
  Rational sup;
  for (int x = 1; x <= 6; ++x) {
    for (int y = 1; y <= 6; ++y) {
      const Rational t = Rational(y * (x * x - y * y), x * x * x);
      if (t > sup) sup = t;
    }
  }
  CHECK(rho_of_class({DelayTable(quad)}, 6) == (Rational(1) - sup).reciprocal());
  CHECK(contains(message_of([] { (void)rho_of_class({DelayTable({Rational(0), Rational(1)})}, 2); }),
                 "rho needs positive delays"));
  std::vector<Rational> steep{Rational(10), Rational(1), Rational(1)};
  CHECK(contains(message_of([&] { (void)rho_of_class({DelayTable(steep)}, 3); }), "rho undefined/infinite"));
}

TEST_CASE("inefficiency report invariants") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const CongestionGame g = random_sncg(seed, small_params(seed, true)).game;
    const auto s = current_costs(g);
    std::vector<int> ks;
    for (int k = 1; k <= g.num_players(); ++k) ks.push_back(k);
    const InefficiencyReport rep = inefficiency_report(s, ks);
    for (const KindReport* kr : {&rep.utilitarian, &rep.egalitarian}) {
      CHECK(kr->optimum == optimum(*s, kr->kind).value);
      REQUIRE(kr->poa.ratio);
      REQUIRE(kr->pos.ratio);
      CHECK(*kr->pos.ratio <= *kr->poa.ratio);
      CHECK(*kr->pos.ratio >= Rational(1));
      for (const auto& [k, v] : kr->lpoa) {
        REQUIRE(v.ratio);
        CHECK(*v.ratio >= Rational(1));
      }
    }
    REQUIRE(rep.sets.nash);
    CHECK(*rep.sets.nash == oracle::nash(g));
    if (is_generic(g)) {
      for (const auto& [k, v] : rep.utilitarian.lpoa) CHECK(v.ratio == rep.utilitarian.poa.ratio);
      CHECK(rep.utilitarian.spoa.ratio == rep.utilitarian.poa.ratio);
    }
  }
}

TEST_CASE("equilibria at the optimum give ratio one") {
  const CongestionGame g({"r", "s"}, {DelayTable({Rational(1), Rational(5)}), DelayTable({Rational(2), Rational(6)})},
                         {{{0}, {1}}, {{0}, {1}}});
  const InefficiencyReport rep = inefficiency_report(current_costs(g), {1, 2});
  CHECK(rep.sets.nash->size() == 2);
  CHECK(rep.utilitarian.poa.ratio == Rational(1));
  CHECK(rep.utilitarian.pos.ratio == Rational(1));
}

TEST_CASE("budget errors are reported per metric") {
  const Instance inst = load_fixture("prop6");
  SolverOptions tiny;
  tiny.limits.node_budget = 5;
  tiny.memoize = false;
  const OutcomeSets sets = outcome_sets(inst.structure(), {1, 3}, tiny);
  CHECK(sets.nash);
  CHECK_FALSE(sets.spo);
  CHECK_FALSE(sets.spo_error.empty());
  CHECK_FALSE(sets.lookahead.at(3));
}
