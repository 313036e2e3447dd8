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

#include "lookahead/structure.hpp"

#include <algorithm>

namespace lookahead {

bool LookaheadStructure::subtree_key(const ActionProfile&, std::span<const PlayerId>,
                                     std::vector<std::int64_t>&) const {
  return false;
}

std::vector<int> LookaheadStructure::action_counts() const {
  std::vector<int> out(num_players());
  for (PlayerId p = 0; p < num_players(); ++p) out[p] = num_actions(p);
  return out;
}

Rational CongestionCosts::cost(const ActionProfile& profile, PlayerId player) const {
  if (!profile.assigned(player)) throw Error("unassigned player");
  Rational total;
  for (ResourceId r : game_.action(player, profile.at(player))) {
    int load = 0;
    for (PlayerId q = 0; q < profile.size(); ++q) {
      if (!profile.assigned(q)) continue;
      const Action& a = game_.action(q, profile.at(q));
      if (std::binary_search(a.begin(), a.end(), r)) ++load;
    }
    total += game_.delay(r).at(load);
  }
  return total;
}

// Continuations only see the fixed players through their loads, and a mover
// only through its action set.
bool CongestionCosts::subtree_key(const ActionProfile& fixed, std::span<const PlayerId> movers,
                                  std::vector<std::int64_t>& key) const {
  key.assign(game_.num_resources(), 0);
  for (PlayerId q = 0; q < fixed.size(); ++q) {
    if (!fixed.assigned(q)) continue;
    for (ResourceId r : game_.action(q, fixed.at(q))) ++key[r];
  }
  key.push_back(-1);
  for (PlayerId p : movers) key.push_back(game_.action_class(p));
  return true;
}

SequentialGameView::SequentialGameView(std::shared_ptr<const LookaheadStructure> structure,
                                       const PlayerOrder& order)
    : structure_(std::move(structure)) {
  if (!structure_) throw Error("null lookahead structure");
  if (order.size() != structure_->num_players()) throw Error("order does not match player count");
  fixed_ = ActionProfile(structure_->num_players());
  movers_.assign(order.sequence().begin(), order.sequence().end());
}

SequentialGameView::SequentialGameView(std::shared_ptr<const LookaheadStructure> structure, ActionProfile fixed,
                                       std::vector<PlayerId> movers)
    : structure_(std::move(structure)), fixed_(std::move(fixed)), movers_(std::move(movers)) {
  if (!structure_) throw Error("null lookahead structure");
  if (fixed_.size() != structure_->num_players()) throw Error("fixed profile does not match player count");
  for (PlayerId p : movers_) {
    if (p < 0 || p >= fixed_.size() || fixed_.assigned(p)) throw Error("mover is out of range or already fixed");
  }
}

SequentialGameView SequentialGameView::truncated(int k) const {
  if (k < 1) throw Error("lookahead depth must be positive");
  const int keep = std::min(k, depth());
  return SequentialGameView(structure_, fixed_, std::vector<PlayerId>(movers_.begin(), movers_.begin() + keep));
}

SequentialGameView SequentialGameView::induced(int action) const {
  if (movers_.empty()) throw Error("no players remain");
  if (action < 0 || action >= structure_->num_actions(movers_.front())) throw Error("action out of range");
  ActionProfile next = fixed_;
  next.assign(movers_.front(), action);
  return SequentialGameView(structure_, std::move(next), std::vector<PlayerId>(movers_.begin() + 1, movers_.end()));
}

std::shared_ptr<const CongestionCosts> current_costs(const CongestionGame& game) {
  return std::make_shared<const CongestionCosts>(game);
}

SequentialGameView sequential_view(const CongestionGame& game, const PlayerOrder& order) {
  return SequentialGameView(current_costs(game), order);
}

}  // namespace lookahead
