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

#ifndef LOOKAHEAD_ERROR_HPP_
#define LOOKAHEAD_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lookahead {

// Model or precondition violation (bad game, unassigned player, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search exceeded its configured node/profile/strategy budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed instance file or command-line input.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Size guards for the exhaustive searches. All counts are inclusive upper
// bounds on work units actually performed.
struct Limits {
  std::int64_t node_budget = 1'000'000;        // game-tree nodes per solve
  std::int64_t profile_budget = 5'000'000;     // complete profiles per scan
  std::int64_t genericity_budget = 2'000'000;  // partial-profile evaluations
  std::int64_t path_budget = 100'000;          // paths per composition term
  std::int64_t strategy_budget = 20'000'000;   // partial strategy assignments (naive oracle)

  // Defaults, with LOOKAHEAD_LAB_BUDGET (a positive integer) overriding the
  // node and profile budgets when set.
  static Limits from_env();
};

}  // namespace lookahead

#endif  // LOOKAHEAD_ERROR_HPP_
