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

#include "lookahead/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lookahead::kernels {
namespace {

std::int64_t checked_space(std::span<const int> action_counts, const Limits& limits) {
  std::int64_t total = profile_count(action_counts);
  if (total > limits.profile_budget) {
    throw BudgetExceeded("profile space of " + std::to_string(total) + " exceeds budget " +
                         std::to_string(limits.profile_budget));
  }
  return total;
}

void merge_min(ArgminResult& into, bool& into_set, ArgminResult&& from, bool from_set) {
  if (!from_set) return;
  if (!into_set || from.value < into.value) {
    into = std::move(from);
    into_set = true;
  } else if (from.value == into.value) {
    into.minimizers.merge(from.minimizers);
  }
}

}  // namespace

void decode_profile(std::int64_t index, std::span<const int> action_counts, ActionProfile& out) {
  for (std::size_t p = action_counts.size(); p-- > 0;) {
    out.assign(static_cast<PlayerId>(p), static_cast<int>(index % action_counts[p]));
    index /= action_counts[p];
  }
}

OutcomeSet filter_profiles(std::span<const int> action_counts, const ProfilePredicate& keep, const Limits& limits) {
  const std::int64_t total = checked_space(action_counts, limits);
  const int n = static_cast<int>(action_counts.size());
  OutcomeSet result;
  std::exception_ptr failure;
#pragma omp parallel
  {
    OutcomeSet local;
    ActionProfile probe(n);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      try {
        decode_profile(i, action_counts, probe);
        if (keep(probe)) local.insert(probe);
      } catch (...) {
#pragma omp critical(lookahead_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(lookahead_kernel_merge)
    result.merge(local);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

ArgminResult argmin_profiles(std::span<const int> action_counts, const ProfileObjective& objective,
                             const Limits& limits) {
  const std::int64_t total = checked_space(action_counts, limits);
  const int n = static_cast<int>(action_counts.size());
  ArgminResult result;
  bool result_set = false;
  std::exception_ptr failure;
#pragma omp parallel
  {
    ArgminResult local;
    bool local_set = false;
    ActionProfile probe(n);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      try {
        decode_profile(i, action_counts, probe);
        Rational v = objective(probe);
        if (!local_set || v < local.value) {
          local.value = v;
          local.minimizers = {probe};
          local_set = true;
        } else if (v == local.value) {
          local.minimizers.insert(probe);
        }
      } catch (...) {
#pragma omp critical(lookahead_kernel_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(lookahead_kernel_merge)
    merge_min(result, result_set, std::move(local), local_set);
  }
  if (failure) std::rethrow_exception(failure);
  return result;
}

bool is_nash(const LookaheadStructure& structure, const ActionProfile& profile) {
  ActionProfile probe = profile;
  for (PlayerId p = 0; p < structure.num_players(); ++p) {
    const Rational current = structure.cost(profile, p);
    for (int b = 0; b < structure.num_actions(p); ++b) {
      if (b == profile.at(p)) continue;
      probe.assign(p, b);
      if (structure.cost(probe, p) < current) return false;
    }
    probe.assign(p, profile.at(p));
  }
  return true;
}

OutcomeSet enumerate_nash(const LookaheadStructure& structure, const Limits& limits) {
  return filter_profiles(
      structure.action_counts(), [&](const ActionProfile& a) { return is_nash(structure, a); }, limits);
}

namespace serial {

OutcomeSet filter_profiles(std::span<const int> action_counts, const ProfilePredicate& keep, const Limits& limits) {
  const std::int64_t total = checked_space(action_counts, limits);
  OutcomeSet result;
  ActionProfile probe(static_cast<int>(action_counts.size()));
  for (std::int64_t i = 0; i < total; ++i) {
    decode_profile(i, action_counts, probe);
    if (keep(probe)) result.insert(probe);
  }
  return result;
}

ArgminResult argmin_profiles(std::span<const int> action_counts, const ProfileObjective& objective,
                             const Limits& limits) {
  const std::int64_t total = checked_space(action_counts, limits);
  ArgminResult result;
  ActionProfile probe(static_cast<int>(action_counts.size()));
  for (std::int64_t i = 0; i < total; ++i) {
    decode_profile(i, action_counts, probe);
    Rational v = objective(probe);
    if (i == 0 || v < result.value) {
      result.value = v;
      result.minimizers = {probe};
    } else if (v == result.value) {
      result.minimizers.insert(probe);
    }
  }
  return result;
}

OutcomeSet enumerate_nash(const LookaheadStructure& structure, const Limits& limits) {
  return filter_profiles(
      structure.action_counts(), [&](const ActionProfile& a) { return kernels::is_nash(structure, a); }, limits);
}

}  // namespace serial

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int count) {
#ifdef _OPENMP
  if (count > 0) omp_set_num_threads(count);
#else
  (void)count;
#endif
}

}  // namespace lookahead::kernels
