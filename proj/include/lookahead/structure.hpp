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

#ifndef LOOKAHEAD_STRUCTURE_HPP_
#define LOOKAHEAD_STRUCTURE_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lookahead/game.hpp"

namespace lookahead {

// A finite game together with a cost for every player on every partial
// profile (the cost "so far" if play stopped now). On complete profiles this
// is the game's cost function. Implementations must be immutable and pure.
class LookaheadStructure {
 public:
  virtual ~LookaheadStructure() = default;

  virtual int num_players() const = 0;
  virtual int num_actions(PlayerId p) const = 0;
  virtual std::string action_label(PlayerId p, int action) const = 0;

  // Cost of `player` given exactly the assigned entries of `profile`.
  virtual Rational cost(const ActionProfile& profile, PlayerId player) const = 0;

  // Optional cache key: two (fixed, movers) states with equal keys must
  // induce identical subtrees up to the identities of the movers (same
  // action counts and same partial costs for every continuation, indexed by
  // mover position). Returns false when the structure offers no key.
  virtual bool subtree_key(const ActionProfile& fixed, std::span<const PlayerId> movers,
                           std::vector<std::int64_t>& key) const;

  std::vector<int> action_counts() const;
};

// "Current costs" on a congestion game: loads count assigned players only.
class CongestionCosts final : public LookaheadStructure {
 public:
  explicit CongestionCosts(CongestionGame game) : game_(std::move(game)) {}

  const CongestionGame& game() const { return game_; }

  int num_players() const override { return game_.num_players(); }
  int num_actions(PlayerId p) const override { return game_.num_actions(p); }
  std::string action_label(PlayerId p, int action) const override { return game_.action_label(p, action); }
  Rational cost(const ActionProfile& profile, PlayerId player) const override;
  bool subtree_key(const ActionProfile& fixed, std::span<const PlayerId> movers,
                   std::vector<std::int64_t>& key) const override;

 private:
  CongestionGame game_;
};

// Sequential-move game: the players in `movers` choose in that order after
// the actions in `fixed` have been committed. Partial costs come from the
// shared structure, so truncation and induction are just bookkeeping.
class SequentialGameView {
 public:
  SequentialGameView(std::shared_ptr<const LookaheadStructure> structure, const PlayerOrder& order);
  SequentialGameView(std::shared_ptr<const LookaheadStructure> structure, ActionProfile fixed,
                     std::vector<PlayerId> movers);

  const LookaheadStructure& structure() const { return *structure_; }
  const std::shared_ptr<const LookaheadStructure>& structure_ptr() const { return structure_; }
  const ActionProfile& fixed() const { return fixed_; }
  std::span<const PlayerId> movers() const { return movers_; }
  int depth() const { return static_cast<int>(movers_.size()); }

  // Only the first min(k, depth) movers play; leaves are scored by partial costs.
  SequentialGameView truncated(int k) const;
  // The first mover commits `action`.
  SequentialGameView induced(int action) const;

 private:
  std::shared_ptr<const LookaheadStructure> structure_;
  ActionProfile fixed_;
  std::vector<PlayerId> movers_;
};

std::shared_ptr<const CongestionCosts> current_costs(const CongestionGame& game);
SequentialGameView sequential_view(const CongestionGame& game, const PlayerOrder& order);

}  // namespace lookahead

#endif  // LOOKAHEAD_STRUCTURE_HPP_
