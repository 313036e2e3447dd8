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


#include "lookahead/instance.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace lookahead {
namespace {

using nlohmann::json;

struct Position {
  int line = 1;
  int column = 1;
};

Position position_of(std::string_view text, std::size_t offset) {
  Position pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& message) {
  const Position pos = position_of(text, offset);
  throw ParseError("line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message);
}

[[noreturn]] void fail(const std::string& where, const std::string& message) {
  throw ParseError((where.empty() ? std::string("/") : where) + ": " + message);
}

// Numbers outside strings may not carry a fraction or exponent.
void reject_decimals(std::string_view text) {
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      if (c == '\\') {
        ++i;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
    } else if (c == '-' || (c >= '0' && c <= '9')) {
      std::size_t j = i;
      bool decimal = false;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '-' ||
                                 text[j] == '+' || text[j] == '.' || text[j] == 'e' || text[j] == 'E')) {
        if (text[j] == '.' || text[j] == 'e' || text[j] == 'E') decimal = true;
        ++j;
      }
      if (decimal) {
        fail_at(text, i, "decimal literal '" + std::string(text.substr(i, j - i)) +
                             "' is not exact; write an integer or [numerator, denominator]");
      }
      i = j - 1;
    }
  }
}

const json& member(const json& object, const std::string& key, const std::string& where) {
  if (!object.is_object()) fail(where, "expected an object");
  auto it = object.find(key);
  if (it == object.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

std::string string_at(const json& value, const std::string& where) {
  if (!value.is_string()) fail(where, "expected a string");
  return value.get<std::string>();
}

int int_at(const json& value, const std::string& where) {
  if (!value.is_number_integer()) fail(where, "expected an integer");
  const auto v = value.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(where, "integer out of range");
  return static_cast<int>(v);
}

const json& array_at(const json& value, const std::string& where) {
  if (!value.is_array()) fail(where, "expected an array");
  return value;
}

std::string path(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string path(const std::string& base, std::size_t index) { return base + "/" + std::to_string(index); }

json compact_rational(const Rational& value) {
  if (value.is_integer()) return value.num();
  return json::array({value.num(), value.den()});
}

std::vector<Rational> values_at(const json& value, const std::string& where) {
  std::vector<Rational> out;
  const json& arr = array_at(value, where);
  if (arr.empty()) fail(where, "empty delay table");
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(rational_from_json(arr[i], path(where, i)));
  return out;
}

DelayTable table_at(const json& value, const std::string& where) {
  try {
    return DelayTable(values_at(value, where));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

struct Resources {
  std::vector<std::string> names;
  std::map<std::string, int> index;
};

Resources resources_at(const json& doc) {
  Resources res;
  const json& arr = array_at(member(doc, "resources", ""), "/resources");
  if (arr.empty()) fail("/resources", "no resources");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string name = string_at(arr[i], path("/resources", i));
    if (name.empty() || name.find('+') != std::string::npos) fail(path("/resources", i), "invalid resource name");
    if (!res.index.emplace(name, static_cast<int>(i)).second) fail(path("/resources", i), "duplicate resource");
    res.names.push_back(std::move(name));
  }
  return res;
}

int resource_at(const Resources& res, const json& value, const std::string& where) {
  const std::string name = string_at(value, where);
  auto it = res.index.find(name);
  if (it == res.index.end()) fail(where, "unknown resource '" + name + "'");
  return it->second;
}

std::vector<Action> action_list_at(const Resources& res, const json& value, const std::string& where) {
  std::vector<Action> out;
  const json& arr = array_at(value, where);
  if (arr.empty()) fail(where, "empty action set");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string at = path(where, i);
    const json& a = array_at(arr[i], at);
    if (a.empty()) fail(at, "empty action");
    Action action;
    for (std::size_t j = 0; j < a.size(); ++j) action.push_back(resource_at(res, a[j], path(at, j)));
    out.push_back(std::move(action));
  }
  return out;
}

std::vector<std::vector<Action>> action_sets_at(const json& doc, const Resources& res, int players) {
  const bool per_player = doc.contains("actions");
  const bool shared = doc.contains("symmetric_actions");
  if (per_player == shared) fail("", "give exactly one of 'actions' and 'symmetric_actions'");
  if (shared) return std::vector<std::vector<Action>>(players, action_list_at(res, doc["symmetric_actions"], "/symmetric_actions"));
  const json& arr = array_at(doc["actions"], "/actions");
  if (static_cast<int>(arr.size()) != players) fail("/actions", "expected one action set per player");
  std::vector<std::vector<Action>> out;
  for (std::size_t p = 0; p < arr.size(); ++p) out.push_back(action_list_at(res, arr[p], path("/actions", p)));
  return out;
}

// Pads tables that cover exactly the player count.
DelayTable fit_table(DelayTable table, int players, const std::string& name, const std::string& where,
                     std::vector<std::string>& extended) {
  if (table.size() < players) {
    fail(where, "table too short: covers " + std::to_string(table.size()) + " of " + std::to_string(players) +
                    " players");
  }
  if (table.size() == players) {
    extended.push_back(name);
    return table.extended(players + 1);
  }
  return table;
}

std::vector<DelayTable> delays_at(const json& doc, const Resources& res, int players,
                                  std::vector<std::string>& extended) {
  const json& obj = member(doc, "delays", "");
  if (!obj.is_object()) fail("/delays", "expected an object");
  std::vector<DelayTable> out;
  for (const std::string& name : res.names) {
    const std::string where = path("/delays", name);
    out.push_back(fit_table(table_at(member(obj, name, "/delays"), where), players, name, where, extended));
  }
  for (const auto& [name, unused] : obj.items()) {
    if (!res.index.count(name)) fail(path("/delays", name), "unknown resource");
  }
  return out;
}

SPTerm term_at(const Resources& res, const json& value, const std::string& where) {
  if (value.is_string()) return SPTerm::single(resource_at(res, value, where));
  const json& arr = array_at(value, where);
  if (arr.size() < 3) fail(where, "expected [\"S\" or \"P\", term, term, ...]");
  const std::string op = string_at(arr[0], path(where, 0));
  if (op != "S" && op != "P") fail(path(where, 0), "expected \"S\" or \"P\"");
  SPTerm acc = term_at(res, arr[1], path(where, 1));
  for (std::size_t i = 2; i < arr.size(); ++i) {
    SPTerm next = term_at(res, arr[i], path(where, i));
    acc = op == "S" ? SPTerm::series(std::move(acc), std::move(next)) : SPTerm::parallel(std::move(acc), std::move(next));
  }
  return acc;
}

json term_to_json(const SPTerm& term, const std::vector<std::string>& names) {
  switch (term.kind()) {
    case SPTerm::Kind::kSingle:
      return names.at(term.resource());
    case SPTerm::Kind::kSeries:
      return json::array({"S", term_to_json(term.left(), names), term_to_json(term.right(), names)});
    case SPTerm::Kind::kParallel:
      return json::array({"P", term_to_json(term.left(), names), term_to_json(term.right(), names)});
  }
  return nullptr;
}

json table_to_json(const DelayTable& table) {
  json out = json::array();
  for (const Rational& v : table.values()) out.push_back(compact_rational(v));
  return out;
}

void write_actions(json& doc, const CongestionGame& game) {
  auto action_json = [&](const Action& a) {
    json out = json::array();
    for (ResourceId r : a) out.push_back(game.resource_name(r));
    return out;
  };
  auto set_json = [&](PlayerId p) {
    json out = json::array();
    for (const Action& a : game.actions(p)) out.push_back(action_json(a));
    return out;
  };
  if (game.symmetric()) {
    doc["symmetric_actions"] = set_json(0);
  } else {
    json all = json::array();
    for (PlayerId p = 0; p < game.num_players(); ++p) all.push_back(set_json(p));
    doc["actions"] = all;
  }
}

template <typename Build>
auto wrap_model_error(const std::string& where, Build build) {
  try {
    return build();
  } catch (const ParseError&) {
    throw;
  } catch (const BudgetExceeded&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

int Instance::num_players() const { return consensus ? consensus->num_players() : game->num_players(); }

std::shared_ptr<const LookaheadStructure> Instance::structure() const {
  if (consensus) return std::make_shared<const ConsensusCosts>(*consensus);
  if (!game) throw Error("instance has no game");
  return current_costs(*game);
}

json rational_to_json(const Rational& value) { return json::array({value.num(), value.den()}); }

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_array() && value.size() == 2 && value[0].is_number_integer() && value[1].is_number_integer()) {
    const auto den = value[1].get<std::int64_t>();
    if (den == 0) fail(where, "zero denominator");
    return Rational(value[0].get<std::int64_t>(), den);
  }
  if (value.is_number()) fail(where, "decimal numbers are not exact; write an integer or [numerator, denominator]");
  fail(where, "expected an integer or [numerator, denominator]");
}

Instance parse_instance(std::string_view text) {
  reject_decimals(text);
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string message = e.what();
    if (auto cut = message.find("syntax error"); cut != std::string::npos) message = message.substr(cut);
    fail_at(text, e.byte > 0 ? e.byte - 1 : 0, message);
  }
  if (!doc.is_object()) fail("", "expected an object");

  const int version = int_at(member(doc, "format_version", ""), "/format_version");
  if (version != kFormatVersion) fail("/format_version", "unsupported version " + std::to_string(version));

  Instance inst;
  inst.family = string_at(member(doc, "family", ""), "/family");
  if (doc.contains("name")) inst.name = string_at(doc["name"], "/name");
  if (doc.contains("source")) inst.source = string_at(doc["source"], "/source");
  if (doc.contains("expect")) inst.expect = array_at(doc["expect"], "/expect");
  const int players = int_at(member(doc, "players", ""), "/players");
  if (players < 1) fail("/players", "need at least one player");

  if (inst.family == "consensus") {
    const json& arr = array_at(member(doc, "edges", ""), "/edges");
    std::vector<ConsensusEdge> edges;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string at = path("/edges", i);
      const json& e = array_at(arr[i], at);
      if (e.size() != 3) fail(at, "expected [u, v, weight]");
      edges.push_back({int_at(e[0], path(at, 0)) - 1, int_at(e[1], path(at, 1)) - 1, rational_from_json(e[2], path(at, 2))});
    }
    inst.consensus = wrap_model_error("/edges", [&] { return ConsensusGame(players, std::move(edges)); });
    return inst;
  }

  const Resources res = resources_at(doc);
  if (inst.family == "congestion") {
    std::vector<DelayTable> delays = delays_at(doc, res, players, inst.extended_tables);
    auto sets = action_sets_at(doc, res, players);
    inst.game = wrap_model_error("", [&] { return CongestionGame(res.names, std::move(delays), std::move(sets)); });
  } else if (inst.family == "sncg-term") {
    std::vector<DelayTable> delays = delays_at(doc, res, players, inst.extended_tables);
    SPTerm term = term_at(res, member(doc, "term", ""), "/term");
    inst.game = wrap_model_error("/term", [&] { return sncg_from_term(term, res.names, std::move(delays), players); });
    inst.term = std::move(term);
  } else if (inst.family == "cost-sharing") {
    const json& obj = member(doc, "costs", "");
    if (!obj.is_object()) fail("/costs", "expected an object");
    CostSharingSpec spec;
    for (const std::string& name : res.names) {
      const std::string where = path("/costs", name);
      const json& entry = member(obj, name, "/costs");
      CostSharingSpec::Resource r;
      r.name = name;
      if (entry.is_object() && entry.contains("table")) {
        DelayTable t = table_at(entry["table"], path(where, "table"));
        r.table = fit_table(std::move(t), players, name, path(where, "table"), inst.extended_tables);
      } else {
        r.a = rational_from_json(member(entry, "a", where), path(where, "a"));
        r.b = rational_from_json(member(entry, "b", where), path(where, "b"));
        if (r.a.sign() < 0 || r.b.sign() < 0) fail(where, "coefficients must be non-negative");
      }
      spec.resources.push_back(std::move(r));
    }
    for (const auto& [name, unused] : obj.items()) {
      if (!res.index.count(name)) fail(path("/costs", name), "unknown resource");
    }
    auto sets = action_sets_at(doc, res, players);
    inst.game = wrap_model_error("/costs", [&] { return cost_sharing_game(spec, std::move(sets)); });
    inst.costs = std::move(spec);
  } else {
    fail("/family", "unknown family '" + inst.family + "'");
  }
  return inst;
}

Instance load_instance(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error("cannot open " + file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

json instance_to_json(const Instance& inst) {
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["family"] = inst.family;
  if (!inst.name.empty()) doc["name"] = inst.name;
  if (!inst.source.empty()) doc["source"] = inst.source;
  doc["players"] = inst.num_players();
  if (inst.consensus) {
    json edges = json::array();
    for (const ConsensusEdge& e : inst.consensus->edges()) {
      edges.push_back(json::array({e.u + 1, e.v + 1, compact_rational(e.weight)}));
    }
    doc["edges"] = edges;
  } else {
    const CongestionGame& g = *inst.game;
    doc["resources"] = g.resource_names();
    if (inst.costs) {
      json costs = json::object();
      for (const CostSharingSpec::Resource& r : inst.costs->resources) {
        if (r.table) {
          costs[r.name] = {{"table", table_to_json(*r.table)}};
        } else {
          costs[r.name] = {{"a", compact_rational(r.a)}, {"b", compact_rational(r.b)}};
        }
      }
      doc["costs"] = costs;
    } else {
      json delays = json::object();
      for (ResourceId r = 0; r < g.num_resources(); ++r) delays[g.resource_name(r)] = table_to_json(g.delay(r));
      doc["delays"] = delays;
    }
    if (inst.term) {
      doc["term"] = term_to_json(*inst.term, g.resource_names());
    } else {
      write_actions(doc, g);
    }
  }
  if (!inst.expect.is_null()) doc["expect"] = inst.expect;
  return doc;
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(2) + "\n"; }

Instance congestion_instance(CongestionGame game, std::string name) {
  Instance inst;
  inst.family = "congestion";
  inst.name = std::move(name);
  inst.game = std::move(game);
  return inst;
}

Instance sncg_instance(SPTerm term, CongestionGame game, std::string name) {
  Instance inst;
  inst.family = "sncg-term";
  inst.name = std::move(name);
  inst.term = std::move(term);
  inst.game = std::move(game);
  return inst;
}

Instance cost_sharing_instance(CostSharingSpec spec, CongestionGame game, std::string name) {
  Instance inst;
  inst.family = "cost-sharing";
  inst.name = std::move(name);
  inst.costs = std::move(spec);
  inst.game = std::move(game);
  return inst;
}

Instance consensus_instance(ConsensusGame game, std::string name) {
  Instance inst;
  inst.family = "consensus";
  inst.name = std::move(name);
  inst.consensus = std::move(game);
  return inst;
}

json profile_to_json(const LookaheadStructure& structure, const ActionProfile& profile) {
  json out = json::array();
  for (PlayerId p = 0; p < profile.size(); ++p) {
    out.push_back(profile.assigned(p) ? json(structure.action_label(p, profile.at(p))) : json(nullptr));
  }
  return out;
}

ActionProfile profile_from_json(const LookaheadStructure& structure, const json& value, const std::string& where) {
  const json& arr = array_at(value, where);
  if (static_cast<int>(arr.size()) != structure.num_players()) fail(where, "expected one action per player");
  ActionProfile out(structure.num_players());
  for (PlayerId p = 0; p < structure.num_players(); ++p) {
    if (arr[p].is_null()) continue;
    const std::string label = string_at(arr[p], path(where, p));
    int found = -1;
    for (int a = 0; a < structure.num_actions(p) && found < 0; ++a) {
      if (structure.action_label(p, a) == label) found = a;
    }
    if (found < 0) fail(path(where, p), "player " + std::to_string(p + 1) + " has no action '" + label + "'");
    out.assign(p, found);
  }
  return out;
}

json outcome_set_to_json(const LookaheadStructure& structure, const OutcomeSet& outcomes) {
  json out = json::array();
  for (const ActionProfile& a : outcomes) out.push_back(profile_to_json(structure, a));
  return out;
}

PlayerOrder parse_order(std::string_view text, int players) {
  std::vector<PlayerId> seq;
  std::string item;
  std::stringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw Error("bad");
      seq.push_back(v - 1);
    } catch (const std::exception&) {
      throw Error("order entry '" + item + "' is not an integer");
    }
  }
  if (static_cast<int>(seq.size()) != players) throw Error("order must list all " + std::to_string(players) + " players");
  return PlayerOrder(std::move(seq));
}

std::string order_to_string(const PlayerOrder& order) {
  std::string out;
  for (int t = 0; t < order.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(order.at(t) + 1);
  }
  return out;
}

}  // namespace lookahead
