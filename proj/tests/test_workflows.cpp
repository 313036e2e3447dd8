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
#include "lookahead/fixtures.hpp"
#include "lookahead/instance.hpp"
#include "lookahead/network.hpp"
#include "lookahead/workflows.hpp"

using namespace lookahead;
using nlohmann::json;
using testing_util::contains;

namespace {

bool has_profile(const json& entries, const json& labels) {
  for (const json& e : entries) {
    if (e.at("profile") == labels) return true;
  }
  return false;
}

json entry_for(const json& entries, const json& labels) {
  for (const json& e : entries) {
    if (e.at("profile") == labels) return e;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("analyze intro flags the unstable subgame-perfect outcome") {
  AnalyzeOptions o;
  o.instance_path = "intro";
  const RunResult run = cmd_analyze(load_fixture("intro"), o, Limits{});
  CHECK(run.exit_code == kExitOk);
  const json& r = run.report.at("results");
  const json e = entry_for(r.at("order").at("spo"), {"b+l", "m"});
  REQUIRE_FALSE(e.is_null());
  CHECK(e.at("nash") == false);
  CHECK(r.at("extension_parallel") == true);
  CHECK(run.report.at("tool") == kToolName);
  CHECK_FALSE(run.report.contains("timing"));
}

TEST_CASE("analyze the example1 fixture with k=2") {
  AnalyzeOptions o;
  o.ks = {2};
  const RunResult run = cmd_analyze(load_fixture("example1"), o, Limits{});
  const json& set = run.report.at("results").at("order").at("lookahead").at("2");
  REQUIRE(set.size() == 1);
  CHECK(set[0].at("profile") == json::array({"s", "s", "t"}));
}

TEST_CASE("analyze a one-player instance") {
  const Instance inst = parse_instance(R"({"format_version": 1, "family": "congestion", "players": 1,
    "resources": ["a", "b"], "delays": {"a": [1], "b": [2]}, "symmetric_actions": [["a"], ["b"]]})");
  const RunResult run = cmd_analyze(inst, AnalyzeOptions{}, Limits{});
  const json& r = run.report.at("results");
  const json only_a = json::array({json::array({"a"})});
  CHECK(r.at("all_orders").at("nash") == only_a);
  CHECK(r.at("potential_minimizers").at("profiles") == only_a);
  CHECK(r.at("all_orders").at("spo").size() == 1);
  CHECK(r.at("all_orders").at("lookahead").at("1").size() == 1);
}

TEST_CASE("analyze with tie-breaking and csv") {
  AnalyzeOptions o;
  o.order = "2,1";
  o.tiebreak = "m>b+s>b+l";
  const RunResult run = cmd_analyze(load_fixture("intro"), o, Limits{});
  const json& tb = run.report.at("results").at("order").at("tiebreak");
  CHECK(tb.at("greedy") == json::array({"m", "b+s"}));
  CHECK(contains(run.csv, "kind,k,lpoa_num,lpoa_den,optimal"));
  CHECK(contains(run.csv, "utilitarian,1,"));
}

TEST_CASE("tie-breaking text") {
  const Instance inst = load_fixture("curse-of-ties");
  const auto s = inst.structure();
  const TieBreakRule lex = parse_tiebreak(*s, "lex");
  CHECK(lex.prefers(0, 0, 1));
  const TieBreakRule per = parse_tiebreak(*s, "s>r/t>s");
  CHECK(per.prefers(0, 1, 0));
  CHECK(per.prefers(1, 1, 0));
  CHECK_THROWS(parse_tiebreak(*s, "s"));
  CHECK_THROWS(parse_tiebreak(*s, "s>r/t>s/r>s"));
  CHECK_THROWS(parse_tiebreak(*s, "q>r"));
}

TEST_CASE("analyze reports budget failures per metric") {
  Limits tiny;
  tiny.node_budget = 3;
  const RunResult run = cmd_analyze(load_fixture("prop6"), AnalyzeOptions{}, tiny);
  CHECK(run.exit_code == kExitBudget);
  CHECK(run.report.at("results").at("all_orders").at("spo").contains("error"));
  CHECK(run.report.at("results").at("all_orders").at("nash").is_array());
}

TEST_CASE("verify reports budget exhaustion as inconclusive with exit code 3") {
  Limits tiny;
  tiny.node_budget = 5;
  VerifyOptions v;
  v.id = "thm5";
  v.trials = 3;
  const RunResult run = cmd_verify(v, tiny);
  CHECK(run.exit_code == kExitBudget);
  CHECK(run.report.at("results").at("verdict") == "inconclusive");
  CHECK(run.report.at("results").at("failed") == 0);
}

TEST_CASE("reproduce every bundled example") {
  for (const std::string& id : fixture_ids()) {
    CAPTURE(id);
    const RunResult run = cmd_reproduce(id, Limits{});
    CHECK(run.exit_code == kExitOk);
    CHECK(run.report.at("results").at("verdict") == "pass");
    for (const json& f : run.report.at("results").at("facts")) {
      CHECK(f.contains("provenance"));
      CHECK(f.at("ok") == true);
    }
  }
  CHECK(cmd_reproduce("nope", Limits{}).exit_code == kExitUsage);
}

TEST_CASE("a wrong documented fact fails with a diff") {
  Instance inst = load_fixture("example1");
  const json fact = {{"fact", "lookahead_equals"}, {"k", 2}, {"order", {1, 2, 3}}, {"profiles", {{"r", "s", "t"}}}};
  const FactResult r = check_fact(inst, fact, Limits{});
  CHECK_FALSE(r.ok);
  CHECK(contains(r.detail, "expected"));
  CHECK_THROWS(check_fact(inst, json{{"fact", "mystery"}}, Limits{}));
}

TEST_CASE("verify: vacuous, unknown and fixture-bound ids") {
  VerifyOptions v;
  v.id = "thm2";
  v.trials = 0;
  RunResult run = cmd_verify(v, Limits{});
  CHECK(run.exit_code == kExitOk);
  CHECK(contains(run.report.at("results").at("notes").dump(), "vacuous"));
  v.id = "thm99";
  CHECK(cmd_verify(v, Limits{}).exit_code == kExitUsage);
  v.id = "prop6";
  run = cmd_verify(v, Limits{});
  CHECK(run.exit_code == kExitOk);
  CHECK(run.report.at("results").at("verdict") == "pass");
}

TEST_CASE("verify thm6 with explicit generator parameters") {
  VerifyOptions v;
  v.id = "thm6";
  v.params.players = 3;
  v.params.term_size = 6;
  v.trials = 200;
  v.seed = 42;
  const RunResult run = cmd_verify(v, Limits{});
  CHECK(run.exit_code == kExitOk);
  CHECK(run.report.at("results").at("failed") == 0);
  CHECK(run.report.at("results").at("passed").get<int>() > 150);
}

TEST_CASE("reports are deterministic") {
  VerifyOptions v;
  v.id = "cor3";
  v.trials = 30;
  v.seed = 5;
  v.jobs = 1;
  const std::string a = cmd_verify(v, Limits{}).report.dump();
  v.jobs = 3;
  const std::string b = cmd_verify(v, Limits{}).report.dump();
  json ja = json::parse(a), jb = json::parse(b);
  CHECK(ja.at("results") == jb.at("results"));
  CHECK(cmd_analyze(load_fixture("prop6"), AnalyzeOptions{}, Limits{}).report.dump() ==
        cmd_analyze(load_fixture("prop6"), AnalyzeOptions{}, Limits{}).report.dump());
}

TEST_CASE("generate is seeded") {
  GenerateOptions g;
  g.family = "sncg-term";
  g.seed = 1;
  CHECK(cmd_generate(g, Limits{}).artifact == cmd_generate(g, Limits{}).artifact);
  g.seed = 2;
  CHECK(cmd_generate(g, Limits{}).artifact != cmd_generate(GenerateOptions{"sncg-term"}, Limits{}).artifact);
}

TEST_CASE("generate ep generic networks that reload as such") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    GenerateOptions g;
    g.family = "sncg-term";
    g.seed = seed;
    g.ep = true;
    g.generic = true;
    g.size = 5;
    const RunResult run = cmd_generate(g, Limits{});
    const Instance inst = parse_instance(run.artifact);
    CHECK(is_extension_parallel(*inst.term));
    CHECK(is_generic(*inst.game).generic);
    CHECK(run.report.at("results").at("checks").at("generic") == true);
  }
}

TEST_CASE("generate a/x+b cost sharing has non-increasing tables") {
  GenerateOptions g;
  g.family = "cost-sharing";
  g.cost_family = "axb";
  g.players = 4;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    g.seed = seed;
    const Instance inst = parse_instance(cmd_generate(g, Limits{}).artifact);
    for (const DelayTable& d : inst.game->delays()) CHECK(d.non_increasing());
  }
  g.family = "consensus";
  g.tree = true;
  CHECK(parse_instance(cmd_generate(g, Limits{}).artifact).consensus->edges().size() == 3u);
  g.family = "matrix";
  CHECK(cmd_generate(g, Limits{}).exit_code == kExitUsage);
}
