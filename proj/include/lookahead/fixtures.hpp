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


// Bundled example instances, compiled in from fixtures/*.json.

#ifndef LOOKAHEAD_FIXTURES_HPP_
#define LOOKAHEAD_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "lookahead/instance.hpp"

namespace lookahead {

std::vector<std::string> fixture_ids();
// Throws Error for unknown ids.
std::string_view fixture_text(const std::string& id);
Instance load_fixture(const std::string& id);

}  // namespace lookahead

#endif  // LOOKAHEAD_FIXTURES_HPP_
