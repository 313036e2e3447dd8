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
#include "lookahead/network.hpp"
#include "lookahead/solver.hpp"
#include "oracles.hpp"

using namespace lookahead;
using testing_util::contains;
using testing_util::message_of;

TEST_CASE("consensus costs count disagreeing assigned neighbours") {
  const ConsensusGame g(3, {{1, 2, Rational(2)}, {0, 2, Rational(1)}});
  ActionProfile a(3);
  a.assign(0, ConsensusGame::kLeft);
  a.assign(2, ConsensusGame::kRight);
  CHECK(g.cost(a, 0) == Rational(1));
  CHECK(g.cost(a, 2) == Rational(1));
  a.assign(1, ConsensusGame::kRight);
  CHECK(g.cost(a, 1) == Rational(0));
  a.assign(1, ConsensusGame::kLeft);
  CHECK(g.cost(a, 1) == Rational(2));
  CHECK(g.cost(a, 2) == Rational(3));
}

TEST_CASE("consensus validation") {
  CHECK_THROWS(ConsensusGame(2, {{0, 0, Rational(1)}}));
  CHECK_THROWS(ConsensusGame(2, {{0, 1, Rational(-1)}}));
  CHECK_THROWS(ConsensusGame(2, {{0, 1, Rational(1)}, {1, 0, Rational(2)}}));
  CHECK_THROWS(ConsensusGame(2, {{0, 2, Rational(1)}}));
}

TEST_CASE("tree-respecting orders") {
  const ConsensusGame path(3, {{0, 1, Rational(1)}, {1, 2, Rational(1)}});
  CHECK(is_tree_respecting(path, PlayerOrder({1, 0, 2})));
  CHECK(is_tree_respecting(path, PlayerOrder({0, 1, 2})));
  CHECK_FALSE(is_tree_respecting(path, PlayerOrder({0, 2, 1})));
}

TEST_CASE("common tie-breaking") {
  const TieBreakRule r = common_tiebreak(3, true);
  for (int p = 0; p < 3; ++p) CHECK(r.prefers(p, ConsensusGame::kRight, ConsensusGame::kLeft));
  CHECK(common_tiebreak(2, false).prefers(1, ConsensusGame::kLeft, ConsensusGame::kRight));
}

TEST_CASE("example5 fixture: an unstable SPO, but tree-respecting orders are optimal") {
  const Instance inst = load_fixture("example5");
  const auto s = inst.structure();
  const OutcomeSet spo = spo_set(SequentialGameView(s, PlayerOrder::identity(3)));
  CHECK(std::any_of(spo.begin(), spo.end(), [&](const ActionProfile& a) { return !kernels::is_nash(*s, a); }));
  for (const PlayerOrder& o : PlayerOrder::all(3)) {
    if (!is_tree_respecting(*inst.consensus, o)) continue;
    for (const ActionProfile& a : spo_set(SequentialGameView(s, o))) {
      CHECK(social_cost(*s, a, SocialCost::kUtilitarian) == Rational(0));
    }
  }
}

TEST_CASE("cost-sharing games") {
  CostSharingSpec spec;
  spec.resources.push_back({"r", std::nullopt, Rational(6), Rational(1)});
  spec.resources.push_back({"s", DelayTable({Rational(5), Rational(3), Rational(3), Rational(2)}), 0, 0});
  const CongestionGame g = cost_sharing_game(spec, std::vector<std::vector<Action>>(3, {{0}, {1}}));
  CHECK(g.cost_sharing());
  CHECK(g.delay(0).size() == 4);
  CHECK(g.delay(0).at(3) == Rational(3));
  CHECK(g.delay(0).at(4) == Rational(5, 2));
  CostSharingSpec rising;
  rising.resources.push_back({"r", DelayTable({Rational(1), Rational(2)}), 0, 0});
  CHECK(contains(message_of([&] { (void)cost_sharing_game(rising, {{{0}}}); }), "not cost-sharing"));
}

TEST_CASE("singleton structure") {
  const Instance inst = load_fixture("thm11");
  const SingletonStructure st = singleton_structure(*inst.game);
  CHECK(st.users.size() == 2);
  const Instance net = load_fixture("intro");
  CHECK_THROWS(singleton_structure(*net.game));
}

TEST_CASE("tabular costs are deterministic functions of the assigned entries") {
  const TabularCosts t({2, 3}, 7, 5);
  ActionProfile a(2);
  a.assign(1, 2);
  const Rational c = t.cost(a, 1);
  CHECK(t.cost(a, 1) == c);
  CHECK(TabularCosts({2, 3}, 7, 5).cost(a, 1) == c);
  CHECK(c >= Rational(0));
  CHECK(c <= Rational(5));
}

TEST_CASE("generators are seeded and respect their parameters") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SncgParams p;
    p.players = 3;
    p.term_size = 6;
    p.max_delay = 9;
    const SncgInstance a = random_sncg(seed, p);
    CHECK(a.game == random_sncg(seed, p).game);
    CHECK(is_extension_parallel(a.term));
    for (const DelayTable& d : a.game.delays()) {
      CHECK(d.size() == 4);
      CHECK(d.non_decreasing());
      CHECK(d.at(1) >= Rational(1));
      CHECK(d.at(4) <= Rational(9));
    }

    CostSharingParams cp;
    cp.affine = true;
    const CostSharingInstance c = random_cost_sharing(seed, cp);
    CHECK(c.game.cost_sharing());
    CHECK(c.game.symmetric());
    for (const auto& r : c.spec.resources) {
      CHECK_FALSE(r.table);
      CHECK(r.a + r.b > Rational(0));
    }
    cp.affine = false;
    cp.symmetric = false;
    cp.singleton = true;
    const CostSharingInstance d = random_cost_sharing(seed, cp);
    CHECK(d.game.cost_sharing());
    for (int q = 0; q < d.game.num_players(); ++q) {
      for (const Action& act : d.game.actions(q)) CHECK(act.size() == 1);
    }

    ConsensusParams kp;
    kp.players = 5;
    kp.tree = true;
    const ConsensusGame k = random_consensus(seed, kp);
    CHECK(k.edges().size() == 4u);
    CHECK(k == random_consensus(seed, kp));
  }
}

TEST_CASE("generic network generator") {
  SncgParams p;
  p.players = 3;
  p.term_size = 5;
  const SncgInstance a = random_generic_sncg(7, p);
  CHECK(is_generic(a.game).generic);
  CHECK(oracle::generic(a.game));
  p.max_delay = 1;
  CHECK_THROWS(random_generic_sncg(7, p, 4));
}

TEST_CASE("seed mixing") {
  CHECK(mix_seed(1, 2) == mix_seed(1, 2));
  CHECK(mix_seed(1, 2) != mix_seed(2, 1));
  CHECK(default_resource_name(0) == "a");
  CHECK(default_resource_name(25) == "z");
  CHECK(default_resource_name(26) == "r26");
}
