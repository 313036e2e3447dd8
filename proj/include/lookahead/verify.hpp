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


// Seeded property suites, one per structural claim about lookahead play.
//
// Each trial draws instances from its own seed until one satisfies the
// suite's hypotheses (network class, genericity, monotonicity), then checks
// the claim exactly. Trials that find no qualifying instance are skipped;
// trials that hit a search budget are inconclusive. Trials are independent
// and run in parallel; results are aggregated in trial order.

#ifndef LOOKAHEAD_VERIFY_HPP_
#define LOOKAHEAD_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lookahead/error.hpp"

namespace lookahead {

struct VerifyParams {
  int players = 0;    // maximum players per instance; 0 picks the suite default
  int term_size = 0;  // maximum arcs per network term; 0 picks the suite default
  int max_delay = 0;  // largest delay value; 0 picks the suite default
  int attempts = 64;  // draws per trial before the trial is skipped
  int max_paths = 8;  // networks with more paths are redrawn
};

struct Counterexample {
  int trial = 0;
  std::uint64_t trial_seed = 0;
  nlohmann::json instance;
  std::string detail;
};

struct TheoremVerdict {
  std::string id;
  std::string claim;
  int trials = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;
  int inconclusive = 0;
  std::vector<std::string> notes;
  std::optional<Counterexample> counterexample;

  bool ok() const { return failed == 0; }
};

const std::vector<std::string>& theorem_ids();
// Throws Error for unknown ids.
const std::string& theorem_claim(const std::string& id);

// Seed of trial `index` under a run seed.
std::uint64_t trial_seed(std::uint64_t seed, int index);

// Runs `trials` trials. jobs <= 0 uses every available thread.
TheoremVerdict verify_theorem(const std::string& id, const VerifyParams& params, int trials, std::uint64_t seed,
                              int jobs = 0, const Limits& limits = {});

// Re-runs one trial from its trial seed.
TheoremVerdict replay_trial(const std::string& id, const VerifyParams& params, std::uint64_t trial_seed,
                            const Limits& limits = {});

}  // namespace lookahead

#endif  // LOOKAHEAD_VERIFY_HPP_
