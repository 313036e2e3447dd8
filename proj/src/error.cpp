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

#include <cstdlib>
#include <string>

#include "lookahead/error.hpp"

namespace lookahead {

Limits Limits::from_env() {
  Limits limits;
  const char* raw = std::getenv("LOOKAHEAD_LAB_BUDGET");
  if (raw == nullptr || *raw == '\0') return limits;
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::string(raw).size() || value <= 0) {
    throw ParseError("LOOKAHEAD_LAB_BUDGET must be a positive integer, got '" + std::string(raw) + "'");
  }
  limits.node_budget = value;
  limits.profile_budget = value;
  return limits;
}

}  // namespace lookahead
