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
#include <utility>
#include <vector>

#include "cgame/collapse.hpp"
#include "cgame/scenario.hpp"

// Acceptance checks shared by the acceptance binary and the unit tests.
namespace criteria {

struct Verdict {
  bool ok = true;
  std::vector<std::string> notes;  // failed sub-checks, or facts worth printing

  void check(bool cond, const std::string& what);
  void note(const std::string& what) { notes.push_back(what); }
  std::string summary() const;
};

struct Pair {
  std::string fixture, sigma, tau;
};
// Every composable strategy pair declared by a fixture.
std::vector<Pair> fixture_pairs();
// Every strategy declared by a fixture, with its fixture name.
std::vector<std::pair<std::string, cgame::StrategyPtr>> fixture_strategies();

struct Atlases {
  cgame::Atlas a, b, c;
};
Atlases automatic_atlases(const cgame::Strategy& sigma, const cgame::Strategy& tau);

Verdict mismatch_atomic();
Verdict mismatch_exponential();
Verdict representative_choice();
Verdict non_representable();
Verdict two_synchronisations();
Verdict counting_identities();
Verdict random_pairs(int want_free = 200);
Verdict structural();

// Pieces of structural(), exposed for unit tests.
Verdict pcov_everywhere();
Verdict representability_preserved(std::uint32_t seed, int rounds);
Verdict multiset_classes();
Verdict atlas_invariance();
Verdict altsym_invariance();

}  // namespace criteria
