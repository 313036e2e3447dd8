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


#include <limits>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "lookahead/games.hpp"
#include "lookahead/kernels.hpp"
#include "oracles.hpp"

using namespace lookahead;
using testing_util::contains;
using testing_util::message_of;
using testing_util::table;

TEST_CASE("rational arithmetic stays in lowest terms") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).den() == 2);
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(3, 4) / Rational(3, 2) == Rational(1, 2));
  CHECK(Rational(3, 2) > Rational(4, 3));
  CHECK(Rational(-1, 3) < Rational(0));
  CHECK(Rational(7).is_integer());
  CHECK(Rational(2, 3).reciprocal() == Rational(3, 2));
  CHECK(Rational(-5, 3).to_string() == "-5/3");
  CHECK(Rational(4).to_string() == "4");
  CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
}

TEST_CASE("rational parsing rejects decimals") {
  CHECK(Rational::parse("16/5") == Rational(16, 5));
  CHECK(Rational::parse("-3") == Rational(-3));
  CHECK_THROWS(Rational::parse("1.5"));
  CHECK_THROWS(Rational::parse("1e3"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational overflow is detected") {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2);
  CHECK_THROWS_AS(big * Rational(3), std::overflow_error);
  CHECK_THROWS_AS(Rational(0).reciprocal(), std::exception);
}

TEST_CASE("rational ordering matches cross multiplication on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 30);
  for (int i = 0; i < 500; ++i) {
    const int a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    CHECK((Rational(a, b) < Rational(c, d)) == (a * d < c * b));
    CHECK((Rational(a, b) == Rational(c, d)) == (a * d == c * b));
  }
}

TEST_CASE("delay tables") {
  const DelayTable d = table({1, 3, 3});
  CHECK(d.size() == 3);
  CHECK(d.at(2) == Rational(3));
  CHECK(d.non_decreasing());
  CHECK_FALSE(d.non_increasing());
  CHECK(contains(message_of([&] { (void)d.at(4); }), "table too short"));
  CHECK(d.shifted(1) == table({3, 3}));
  CHECK(d.extended(5) == table({1, 3, 3, 3, 3}));
  CHECK_THROWS(table({1, -1}));
  CHECK_THROWS(DelayTable({Rational(1), Rational(2)}, Monotonicity::kNonIncreasing));
  CHECK(table({4, 2, 2}).non_increasing());
}

TEST_CASE("player orders") {
  const PlayerOrder o({2, 0, 1});
  CHECK(o.at(0) == 2);
  CHECK(o.position(1) == 2);
  CHECK(PlayerOrder::all(3).size() == 6);
  CHECK(PlayerOrder::all(3).front() == PlayerOrder::identity(3));
  CHECK_THROWS(PlayerOrder({0, 0, 1}));
  CHECK_THROWS(PlayerOrder({0, 3, 1}));
}

TEST_CASE("tie-breaking rules are strict total orders") {
  const std::vector<int> counts{2, 3};
  CHECK(TieBreakRule::all(counts).size() == 2 * 6);
  const TieBreakRule lex = TieBreakRule::lexicographic(counts);
  CHECK(lex.prefers(1, 0, 2));
  const TieBreakRule custom({{1, 0}, {2, 0, 1}});
  CHECK(custom.prefers(0, 1, 0));
  CHECK(custom.rank(1, 2) == 0);
  CHECK_THROWS(TieBreakRule({{0, 0}}));
  CHECK_THROWS(TieBreakRule({{0, 2}}));
}

namespace {

// Intro network by hand: paths m and b+l, b+s over resources b, l, s, m.
CongestionGame intro_game() {
  return CongestionGame({"b", "l", "s", "m"}, {table({3, 5}), table({2, 2}), table({1, 1}), table({6, 6})},
                        {{{3}, {0, 1}, {0, 2}}, {{3}, {0, 1}, {0, 2}}});
}

}  // namespace

TEST_CASE("congestion game construction and labels") {
  const CongestionGame g = intro_game();
  CHECK(g.symmetric());
  CHECK(g.num_actions(0) == 3);
  CHECK(g.action_label(0, 0) == "b+l");
  CHECK(g.action_label(0, 2) == "m");
  CHECK(g.find_action(1, {0, 2}) == 1);
  CHECK_FALSE(g.cost_sharing());
  CHECK_THROWS(CongestionGame({"a"}, {table({1})}, {{{1}}}));
  CHECK_THROWS(CongestionGame({"a"}, {table({1})}, {{}}));
}

TEST_CASE("player cost counts assigned players only") {
  const CongestionGame g = intro_game();
  ActionProfile a(2);
  a.assign(0, 1);  // b+s
  CHECK(player_cost(g, a, 0) == Rational(4));
  a.assign(1, 1);
  CHECK(player_cost(g, a, 0) == Rational(6));
  CHECK(player_cost(g, a, 1) == oracle::cost(g, a.choices(), 1));
  CHECK(congestion_vector(g, a).load == std::vector<int>{2, 0, 2, 0});
}

TEST_CASE("induced subgames shift delays by fixed loads") {
  const CongestionGame g = intro_game();
  ActionProfile fixed(2);
  fixed.assign(0, 1);
  const CongestionGame sub = induced_subgame(g, fixed);
  CHECK(sub.num_players() == 1);
  CHECK(sub.label(0) == 1);
  CHECK(sub.delay(0) == table({5}));
  ActionProfile a(1);
  a.assign(0, 1);
  ActionProfile full = fixed;
  full.assign(1, 1);
  CHECK(player_cost(sub, a, 0) == player_cost(g, full, 1));
}

TEST_CASE("truncation keeps the first k players of the order") {
  const CongestionGame g = intro_game();
  const CongestionGame t = truncate_game(g, PlayerOrder({1, 0}), 1);
  CHECK(t.num_players() == 1);
  CHECK(t.label(0) == 1);
  CHECK(truncate_game(g, PlayerOrder::identity(2), 5) == g);
}

TEST_CASE("nash enumeration matches brute force") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    SncgParams p;
    p.players = 2 + seed % 3;
    p.term_size = 2 + seed % 5;
    p.max_delay = 5;
    p.ep_only = seed % 2 == 0;
    const CongestionGame g = random_sncg(seed, p).game;
    CHECK(enumerate_nash(g) == oracle::nash(g));
    for (const ActionProfile& a : oracle::nash(g)) CHECK(is_nash(g, a));
  }
}

TEST_CASE("best responses ignore the player's own assignment") {
  const CongestionGame g = intro_game();
  ActionProfile a(2);
  a.assign(1, 1);
  CHECK(best_responses(g, a, 0) == std::vector<int>{1, 2});
  a.assign(0, 0);
  CHECK(best_responses(g, a, 0) == std::vector<int>{1, 2});
}

TEST_CASE("genericity matches the subset brute force") {
  int generic = 0;
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    SncgParams p;
    p.players = 2 + seed % 2;
    p.term_size = 2 + seed % 4;
    p.max_delay = seed % 3 == 0 ? 100 : 4;
    p.ep_only = false;
    const CongestionGame g = random_sncg(seed, p).game;
    const GenericityResult r = is_generic(g);
    CHECK(r.generic == oracle::generic(g));
    if (r.generic) {
      ++generic;
    } else {
      REQUIRE(r.witness);
      const GenericityWitness& w = *r.witness;
      CHECK(w.first.at(w.player) != w.second.at(w.player));
      CHECK(oracle::cost(g, w.first.choices(), w.player) == w.cost);
      CHECK(oracle::cost(g, w.second.choices(), w.player) == w.cost);
    }
  }
  CHECK(generic > 0);
  CHECK(generic < 80);
}

TEST_CASE("genericity budget") {
  SncgParams p;
  p.players = 4;
  p.term_size = 6;
  const CongestionGame g = random_sncg(3, p).game;
  Limits tiny;
  tiny.genericity_budget = 10;
  CHECK(contains(message_of([&] { (void)is_generic(g, tiny); }), "instance too large for exact genericity check"));
}

TEST_CASE("generic games stay generic under induction and truncation") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SncgParams p;
    p.players = 3;
    p.term_size = 4;
    const CongestionGame g = random_sncg(seed, p).game;
    if (!is_generic(g)) continue;
    ++checked;
    ActionProfile fixed(3);
    fixed.assign(0, static_cast<int>(seed % g.num_actions(0)));
    CHECK(is_generic(induced_subgame(g, fixed)).generic);
    CHECK(is_generic(truncate_game(g, PlayerOrder({2, 0, 1}), 2)).generic);
  }
  CHECK(checked > 10);
}

TEST_CASE("perturbation preserves strict comparisons and the chosen equilibrium") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SncgParams p;
    p.players = 2 + seed % 2;
    p.term_size = 3 + seed % 3;
    p.max_delay = 4;
    const SncgInstance inst = random_sncg(seed, p);
    const CongestionGame& g = inst.game;
    const OutcomeSet ne = enumerate_nash(g);
    REQUIRE_FALSE(ne.empty());
    const ActionProfile keep = *ne.begin();
    const CongestionGame h = perturb_to_generic(g, keep, seed);
    CHECK(is_generic(h).generic);
    CHECK(is_nash(h, keep));
    // Closeness: strict cost comparisons of any two profiles for one player survive.
    std::vector<std::vector<int>> all;
    oracle::for_each_profile(g.action_counts(), [&](const std::vector<int>& a) { all.push_back(a); });
    for (const auto& a : all) {
      for (const auto& b : all) {
        for (int j = 0; j < g.num_players(); ++j) {
          if (oracle::cost(g, a, j) < oracle::cost(g, b, j)) CHECK(oracle::cost(h, a, j) <= oracle::cost(h, b, j));
        }
      }
    }
    ++checked;
  }
  CHECK(checked == 30);
}

TEST_CASE("perturbing a generic game returns it unchanged") {
  SncgParams p;
  const SncgInstance inst = random_generic_sncg(7, p);
  CHECK(perturb_to_generic(inst.game, std::nullopt, 1) == inst.game);
}

TEST_CASE("profile count saturates") {
  CHECK(profile_count(std::vector<int>{2, 3, 4}) == 24);
  CHECK(profile_count(std::vector<int>(80, 4)) == std::numeric_limits<std::int64_t>::max());
}

TEST_CASE("parallel kernels agree with the serial reference") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    SncgParams p;
    p.players = 4;
    p.term_size = 6;
    p.max_delay = 6;
    p.ep_only = false;
    const CongestionGame g = random_sncg(seed, p).game;
    const CongestionCosts costs(g);
    for (int threads : {1, 2, 3}) {
      kernels::set_threads(threads);
      CHECK(kernels::enumerate_nash(costs) == kernels::serial::enumerate_nash(costs));
      auto phi = [&](const ActionProfile& a) { return oracle::potential(g, a.choices()); };
      const auto par = kernels::argmin_profiles(g.action_counts(), phi);
      const auto ser = kernels::serial::argmin_profiles(g.action_counts(), phi);
      CHECK(par.value == ser.value);
      CHECK(par.minimizers == ser.minimizers);
    }
  }
  kernels::set_threads(kernels::max_threads());
}

TEST_CASE("kernel scans respect the profile budget and propagate errors") {
  Limits tiny;
  tiny.profile_budget = 5;
  const std::vector<int> counts{3, 3};
  CHECK_THROWS_AS(kernels::filter_profiles(counts, [](const ActionProfile&) { return true; }, tiny), BudgetExceeded);
  CHECK_THROWS_AS(kernels::filter_profiles(
                      counts, [](const ActionProfile& a) -> bool { throw Error("boom " + std::to_string(a.at(0))); }),
                  Error);
}
