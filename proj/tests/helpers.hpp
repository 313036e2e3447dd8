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


#ifndef LOOKAHEAD_TESTS_HELPERS_HPP_
#define LOOKAHEAD_TESTS_HELPERS_HPP_

#include <functional>
#include <string>

#include "lookahead/game.hpp"
#include "lookahead/instance.hpp"

namespace testing_util {

inline std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "<no exception>";
}

inline bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

inline lookahead::DelayTable table(std::initializer_list<lookahead::Rational> values) {
  return lookahead::DelayTable(std::vector<lookahead::Rational>(values));
}

inline lookahead::ActionProfile profile(const lookahead::LookaheadStructure& s, const nlohmann::json& labels) {
  return lookahead::profile_from_json(s, labels, "test");
}

inline lookahead::OutcomeSet profiles(const lookahead::LookaheadStructure& s, const nlohmann::json& list) {
  lookahead::OutcomeSet out;
  for (const auto& p : list) out.insert(profile(s, p));
  return out;
}

}  // namespace testing_util

#endif  // LOOKAHEAD_TESTS_HELPERS_HPP_
