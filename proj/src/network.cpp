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


#include "lookahead/network.hpp"

#include <algorithm>
#include <iterator>
#include <random>

namespace lookahead {
namespace {

bool is_subset(const Action& a, const Action& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

Action intersect(const Action& a, const Action& b) {
  Action out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool meets_difference(const Action& a, const Action& c, const Action& b) {
  for (ResourceId r : a) {
    if (std::binary_search(c.begin(), c.end(), r) && !std::binary_search(b.begin(), b.end(), r)) return true;
  }
  return false;
}

void collect_chain(const SPTerm& t, std::vector<const SPTerm*>& out) {
  if (t.kind() == SPTerm::Kind::kSeries) {
    collect_chain(t.left(), out);
    collect_chain(t.right(), out);
  } else {
    out.push_back(&t);
  }
}

template <typename Visit>
void for_each_triple(const std::vector<Action>& actions, Visit visit) {
  const std::size_t m = actions.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      for (std::size_t k = 0; k < m; ++k) {
        if (k == i || k == j) continue;
        if (!visit(actions[i], actions[j], actions[k])) return;
      }
    }
  }
}

SPTerm build_random(std::mt19937_64& rng, int first, int size, bool ep_only) {
  if (size == 1) return SPTerm::single(first);
  std::uniform_int_distribution<int> coin(0, 1);
  const bool series = coin(rng) == 1;
  int left_size;
  if (series && ep_only) {
    left_size = coin(rng) == 1 ? 1 : size - 1;
  } else {
    left_size = std::uniform_int_distribution<int>(1, size - 1)(rng);
  }
  SPTerm left = build_random(rng, first, left_size, ep_only);
  SPTerm right = build_random(rng, first + left_size, size - left_size, ep_only);
  return series ? SPTerm::series(std::move(left), std::move(right))
                : SPTerm::parallel(std::move(left), std::move(right));
}

}  // namespace

SPTerm SPTerm::single(ResourceId r) {
  if (r < 0) throw Error("negative resource id in term");
  auto node = std::make_shared<Node>();
  node->resource = r;
  return SPTerm(std::move(node));
}

SPTerm SPTerm::series(SPTerm left, SPTerm right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kSeries;
  node->arcs = left.arc_count() + right.arc_count();
  node->children = {std::move(left), std::move(right)};
  return SPTerm(std::move(node));
}

SPTerm SPTerm::parallel(SPTerm left, SPTerm right) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::kParallel;
  node->arcs = left.arc_count() + right.arc_count();
  node->children = {std::move(left), std::move(right)};
  return SPTerm(std::move(node));
}

std::vector<ResourceId> SPTerm::resources() const {
  if (kind() == Kind::kSingle) return {resource()};
  std::vector<ResourceId> out = left().resources();
  std::vector<ResourceId> rest = right().resources();
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

void SPTerm::validate(int resource_count) const {
  std::vector<ResourceId> ids = resources();
  std::vector<bool> seen(resource_count, false);
  for (ResourceId r : ids) {
    if (r >= resource_count) throw Error("term references unknown resource " + std::to_string(r));
    if (seen[r]) throw Error("resource " + std::to_string(r) + " appears twice in term");
    seen[r] = true;
  }
}

std::string SPTerm::to_string(const std::vector<std::string>& names) const {
  switch (kind()) {
    case Kind::kSingle:
      return resource() < static_cast<int>(names.size()) ? names[resource()] : std::to_string(resource());
    case Kind::kSeries:
      return "S(" + left().to_string(names) + "," + right().to_string(names) + ")";
    case Kind::kParallel:
      return "P(" + left().to_string(names) + "," + right().to_string(names) + ")";
  }
  return {};
}

bool operator==(const SPTerm& a, const SPTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == SPTerm::Kind::kSingle) return a.resource() == b.resource();
  return a.left() == b.left() && a.right() == b.right();
}

std::vector<Action> enumerate_paths(const SPTerm& term, const Limits& limits) {
  std::vector<Action> out;
  switch (term.kind()) {
    case SPTerm::Kind::kSingle:
      out.push_back({term.resource()});
      break;
    case SPTerm::Kind::kParallel: {
      out = enumerate_paths(term.left(), limits);
      std::vector<Action> rest = enumerate_paths(term.right(), limits);
      if (static_cast<std::int64_t>(out.size() + rest.size()) > limits.path_budget) {
        throw BudgetExceeded("path count exceeds budget of " + std::to_string(limits.path_budget));
      }
      out.insert(out.end(), rest.begin(), rest.end());
      break;
    }
    case SPTerm::Kind::kSeries: {
      std::vector<Action> head = enumerate_paths(term.left(), limits);
      std::vector<Action> tail = enumerate_paths(term.right(), limits);
      if (static_cast<std::int64_t>(head.size()) * static_cast<std::int64_t>(tail.size()) > limits.path_budget) {
        throw BudgetExceeded("path count exceeds budget of " + std::to_string(limits.path_budget));
      }
      for (const Action& h : head) {
        for (const Action& t : tail) {
          Action joined;
          std::merge(h.begin(), h.end(), t.begin(), t.end(), std::back_inserter(joined));
          out.push_back(std::move(joined));
        }
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_extension_parallel(const SPTerm& term) {
  switch (term.kind()) {
    case SPTerm::Kind::kSingle:
      return true;
    case SPTerm::Kind::kParallel:
      return is_extension_parallel(term.left()) && is_extension_parallel(term.right());
    case SPTerm::Kind::kSeries: {
      std::vector<const SPTerm*> chain;
      collect_chain(term, chain);
      int composite = 0;
      for (const SPTerm* factor : chain) {
        if (factor->kind() == SPTerm::Kind::kSingle) continue;
        if (++composite > 1 || !is_extension_parallel(*factor)) return false;
      }
      return true;
    }
  }
  return false;
}

EPCertificate has_bad_configuration(const std::vector<Action>& actions) {
  EPCertificate cert;
  for_each_triple(actions, [&](const Action& a, const Action& b, const Action& c) {
    if (meets_difference(a, c, b) && meets_difference(a, b, c)) {
      cert.is_ep = false;
      cert.witness = std::array<Action, 3>{a, b, c};
      return false;
    }
    return true;
  });
  return cert;
}

NestedIntersectionVerdicts nested_intersection_verdicts(const std::vector<Action>& actions) {
  NestedIntersectionVerdicts v;
  for_each_triple(actions, [&](const Action& a, const Action& b, const Action& c) {
    const Action ab = intersect(a, b);
    const Action ac = intersect(a, c);
    if (!is_subset(ab, ac) && !is_subset(ac, ab)) v.nested = false;
    if (!is_subset(ab, c)) {
      const Action bc = intersect(b, c);
      const Action abc = intersect(ab, c);
      if (!(ac == bc && bc == abc)) v.absorbing = false;
    }
    if (meets_difference(a, c, b) && meets_difference(a, b, c)) v.no_bad_triple = false;
    return true;
  });
  return v;
}

bool nested_intersections_agree(const std::vector<Action>& actions) {
  const NestedIntersectionVerdicts v = nested_intersection_verdicts(actions);
  return v.nested == v.absorbing && v.absorbing == v.no_bad_triple;
}

SPTerm random_term(std::uint64_t seed, int size, bool ep_only) {
  if (size < 1) throw Error("term size must be positive");
  std::mt19937_64 rng(seed);
  return build_random(rng, 0, size, ep_only);
}

}  // namespace lookahead
