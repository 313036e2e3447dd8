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


#include "lookahead/fixtures.hpp"

#include <algorithm>
#include <utility>

namespace lookahead {

// Generated at configure time.
extern const std::vector<std::pair<std::string_view, std::string_view>>& embedded_fixtures();

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, text] : embedded_fixtures()) ids.emplace_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string_view fixture_text(const std::string& id) {
  for (const auto& [name, text] : embedded_fixtures()) {
    if (name == id) return text;
  }
  throw Error("unknown fixture '" + id + "'");
}

Instance load_fixture(const std::string& id) { return parse_instance(fixture_text(id)); }

}  // namespace lookahead
