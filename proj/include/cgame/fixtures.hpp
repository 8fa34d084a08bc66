// Copyright 2026 The cgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "cgame/scenario.hpp"

namespace cgame {

// FIX_EX1, FIX_REPR, FIX_DEVISME, FIX_EPI1, FIX_EPI2, FIX_COPYCAT,
// FIX_DEADLOCK, FIX_ALTSYM.
const std::vector<std::string>& fixture_names();
bool is_fixture(const std::string& name);
// Throws InvalidArgument for unknown names.
const std::string& fixture_text(const std::string& name);
Scenario fixture(const std::string& name);

}  // namespace cgame
