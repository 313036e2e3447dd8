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

// Exhaustive scans over the complete-profile space prod_i |A_i|.
//
// The profile space is walked by mixed-radix index, which makes each scan a
// data-parallel loop. The OpenMP versions in namespace `kernels` split the
// index range across threads and merge per-thread results into ordered sets,
// so their output does not depend on the thread count. The plain loops in
// `kernels::serial` are the reference implementations the tests compare
// against.

#ifndef LOOKAHEAD_KERNELS_HPP_
#define LOOKAHEAD_KERNELS_HPP_

#include <cstdint>
#include <functional>
#include <span>

#include "lookahead/game.hpp"
#include "lookahead/structure.hpp"

namespace lookahead::kernels {

using ProfilePredicate = std::function<bool(const ActionProfile&)>;
using ProfileObjective = std::function<Rational(const ActionProfile&)>;

struct ArgminResult {
  Rational value;
  OutcomeSet minimizers;
};

// Writes the profile with the given mixed-radix index into `out`.
void decode_profile(std::int64_t index, std::span<const int> action_counts, ActionProfile& out);

// All complete profiles satisfying `keep`. Throws BudgetExceeded when the
// space exceeds limits.profile_budget. Callables must be thread-safe.
OutcomeSet filter_profiles(std::span<const int> action_counts, const ProfilePredicate& keep,
                           const Limits& limits = {});
ArgminResult argmin_profiles(std::span<const int> action_counts, const ProfileObjective& objective,
                             const Limits& limits = {});

// Nash equilibria of the structure's terminal game.
bool is_nash(const LookaheadStructure& structure, const ActionProfile& profile);
OutcomeSet enumerate_nash(const LookaheadStructure& structure, const Limits& limits = {});

namespace serial {
OutcomeSet filter_profiles(std::span<const int> action_counts, const ProfilePredicate& keep,
                           const Limits& limits = {});
ArgminResult argmin_profiles(std::span<const int> action_counts, const ProfileObjective& objective,
                             const Limits& limits = {});
OutcomeSet enumerate_nash(const LookaheadStructure& structure, const Limits& limits = {});
}  // namespace serial

// Number of OpenMP worker threads the parallel scans use (1 without OpenMP).
int max_threads();
void set_threads(int count);

}  // namespace lookahead::kernels

#endif  // LOOKAHEAD_KERNELS_HPP_
