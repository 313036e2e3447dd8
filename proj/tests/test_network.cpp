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


#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "lookahead/games.hpp"
#include "lookahead/network.hpp"
#include "oracles.hpp"

using namespace lookahead;
using testing_util::contains;
using testing_util::message_of;

namespace {

SPTerm leaf(int r) { return SPTerm::single(r); }

Action meet(const Action& a, const Action& b) {
  Action out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool within(const Action& a, const Action& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

// A meets both C \ B and B \ C.
bool bad(const Action& a, const Action& b, const Action& c) {
  auto meets_minus = [&](const Action& x, const Action& y) {
    return std::any_of(a.begin(), a.end(), [&](int r) {
      return std::binary_search(x.begin(), x.end(), r) && !std::binary_search(y.begin(), y.end(), r);
    });
  };
  return meets_minus(c, b) && meets_minus(b, c);
}

std::vector<Action> random_family(std::mt19937_64& rng, int universe, int size) {
  std::set<Action> family;
  std::uniform_int_distribution<int> bit(0, 1);
  while (static_cast<int>(family.size()) < size) {
    Action a;
    for (int r = 0; r < universe; ++r) {
      if (bit(rng)) a.push_back(r);
    }
    if (!a.empty()) family.insert(a);
  }
  return {family.begin(), family.end()};
}

}  // namespace

TEST_CASE("paths of the intro network") {
  const SPTerm t = SPTerm::parallel(leaf(3), SPTerm::series(leaf(0), SPTerm::parallel(leaf(1), leaf(2))));
  CHECK(t.arc_count() == 4);
  CHECK(t.to_string({"b", "l", "s", "m"}) == "P(m,S(b,P(l,s)))");
  CHECK(enumerate_paths(t) == std::vector<Action>{{0, 1}, {0, 2}, {3}});
  CHECK(is_extension_parallel(t));
}

TEST_CASE("two parallel pairs in series are not extension-parallel") {
  const SPTerm t = SPTerm::series(SPTerm::parallel(leaf(0), leaf(1)), SPTerm::parallel(leaf(2), leaf(3)));
  CHECK_FALSE(is_extension_parallel(t));
  const EPCertificate cert = has_bad_configuration(enumerate_paths(t));
  CHECK_FALSE(cert.is_ep);
  REQUIRE(cert.witness);
  const auto& [a, b, c] = *cert.witness;
  CHECK(bad(a, b, c));
}

TEST_CASE("series chains of single arcs around one block are extension-parallel") {
  const SPTerm t = SPTerm::series(SPTerm::series(leaf(0), leaf(1)), SPTerm::parallel(leaf(2), leaf(3)));
  CHECK(is_extension_parallel(t));
  CHECK(has_bad_configuration(enumerate_paths(t)).is_ep);
}

TEST_CASE("term validation") {
  CHECK_NOTHROW(SPTerm::series(leaf(0), leaf(1)).validate(2));
  CHECK_THROWS(SPTerm::series(leaf(0), leaf(0)).validate(2));
  CHECK_THROWS(SPTerm::series(leaf(0), leaf(2)).validate(2));
}

TEST_CASE("path budget") {
  SPTerm t = SPTerm::parallel(leaf(0), leaf(1));
  for (int i = 1; i < 12; ++i) {
    t = SPTerm::series(t, SPTerm::parallel(leaf(2 * i), leaf(2 * i + 1)));
  }
  Limits tiny;
  tiny.path_budget = 1000;
  CHECK_THROWS_AS(enumerate_paths(t, tiny), BudgetExceeded);
  CHECK(enumerate_paths(t).size() == 4096u);
}

TEST_CASE("random terms: path counts, sizes and path shape") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const int size = 1 + static_cast<int>(seed % 9);
    const SPTerm t = random_term(seed, size, seed % 2 == 0);
    CHECK(t.arc_count() == size);
    CHECK_NOTHROW(t.validate(size));
    const std::vector<Action> paths = enumerate_paths(t);
    CHECK(static_cast<std::int64_t>(paths.size()) == oracle::path_count(t));
    CHECK(std::is_sorted(paths.begin(), paths.end()));
    CHECK(std::adjacent_find(paths.begin(), paths.end()) == paths.end());
    // No path contains another in a series-parallel network.
    for (const Action& a : paths) {
      for (const Action& b : paths) {
        if (a != b) CHECK_FALSE(within(a, b));
      }
    }
    if (seed % 2 == 0) CHECK(is_extension_parallel(t));
  }
}

TEST_CASE("structural recognition agrees with the bad-configuration test") {
  int ep = 0;
  int not_ep = 0;
  for (std::uint64_t seed = 1; seed <= 400; ++seed) {
    const SPTerm t = random_term(seed, 2 + static_cast<int>(seed % 8), false);
    const bool structural = is_extension_parallel(t);
    CHECK(structural == has_bad_configuration(enumerate_paths(t)).is_ep);
    (structural ? ep : not_ep)++;
  }
  CHECK(ep > 20);
  CHECK(not_ep > 20);
}

TEST_CASE("the three nested-intersection properties agree on every set family") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const std::vector<Action> family = random_family(rng, 3 + i % 4, 2 + i % 5);
    const NestedIntersectionVerdicts v = nested_intersection_verdicts(family);
    CHECK(nested_intersections_agree(family));
    // Reference evaluation over ordered triples of distinct members.
    bool nested = true;
    bool absorbing = true;
    bool clean = true;
    for (const Action& a : family) {
      for (const Action& b : family) {
        for (const Action& c : family) {
          if (a == b || a == c || b == c) continue;
          const Action ab = meet(a, b), ac = meet(a, c);
          if (!within(ab, ac) && !within(ac, ab)) nested = false;
          if (!within(ab, c) && !(ac == meet(b, c) && ac == meet(ab, c))) absorbing = false;
          if (bad(a, b, c)) clean = false;
        }
      }
    }
    CHECK(v.nested == nested);
    CHECK(v.absorbing == absorbing);
    CHECK(v.no_bad_triple == clean);
    CHECK(has_bad_configuration(family).is_ep == clean);
  }
}

TEST_CASE("network games from terms") {
  const SPTerm t = SPTerm::series(leaf(0), SPTerm::parallel(leaf(1), leaf(2)));
  std::vector<DelayTable> d(3, DelayTable({Rational(1), Rational(2)}));
  const CongestionGame g = sncg_from_term(t, {"a", "b", "c"}, d, 2);
  CHECK(g.symmetric());
  CHECK(g.num_actions(0) == 2);
  CHECK(g.action_label(1, 1) == "a+c");
  CHECK_THROWS(sncg_from_term(t, {"a", "b"}, {d[0], d[1]}, 2));
}
