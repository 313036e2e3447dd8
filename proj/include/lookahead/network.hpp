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


// Series/parallel composition terms and the action systems they generate.

#ifndef LOOKAHEAD_NETWORK_HPP_
#define LOOKAHEAD_NETWORK_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lookahead/error.hpp"
#include "lookahead/game.hpp"

namespace lookahead {

class SPTerm {
 public:
  enum class Kind { kSingle, kSeries, kParallel };

  static SPTerm single(ResourceId r);
  static SPTerm series(SPTerm left, SPTerm right);
  static SPTerm parallel(SPTerm left, SPTerm right);

  Kind kind() const { return node_->kind; }
  // Only for kSingle.
  ResourceId resource() const { return node_->resource; }
  // Only for kSeries / kParallel.
  const SPTerm& left() const { return node_->children[0]; }
  const SPTerm& right() const { return node_->children[1]; }

  int arc_count() const { return node_->arcs; }
  // Leaves in left-to-right order.
  std::vector<ResourceId> resources() const;
  // Throws Error if some resource appears twice or lies outside [0, count).
  void validate(int resource_count) const;

  // Compact form such as P(m,S(b,P(l,s))) using the given names.
  std::string to_string(const std::vector<std::string>& names) const;

  friend bool operator==(const SPTerm& a, const SPTerm& b);

 private:
  struct Node {
    Kind kind = Kind::kSingle;
    ResourceId resource = -1;
    int arcs = 1;
    std::vector<SPTerm> children;
  };
  explicit SPTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// All o-d paths as sorted resource sets, in lexicographic order.
std::vector<Action> enumerate_paths(const SPTerm& term, const Limits& limits = {});

// Series chains are flattened first: a chain is extension-parallel iff at
// most one of its factors is not a single arc and that factor is
// extension-parallel.
bool is_extension_parallel(const SPTerm& term);

struct EPCertificate {
  bool is_ep = true;
  // A bad configuration: A meets both C\B and B\C.
  std::optional<std::array<Action, 3>> witness;
};

EPCertificate has_bad_configuration(const std::vector<Action>& actions);

// Evaluates the three nested-intersection properties by brute force and
// reports whether they agree.
bool nested_intersections_agree(const std::vector<Action>& actions);

struct NestedIntersectionVerdicts {
  bool nested = true;       // A∩B and A∩C are comparable
  bool absorbing = true;    // A∩B ⊄ C implies A∩C = B∩C = A∩B∩C
  bool no_bad_triple = true;
};
NestedIntersectionVerdicts nested_intersection_verdicts(const std::vector<Action>& actions);

// Random term with `size` arcs labelled 0..size-1 in leaf order.
SPTerm random_term(std::uint64_t seed, int size, bool ep_only);

}  // namespace lookahead

#endif  // LOOKAHEAD_NETWORK_HPP_
