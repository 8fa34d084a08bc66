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

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "cgame/collapse.hpp"

namespace gen {

using cgame::StrategyPtr;
using cgame::TcgPtr;

// Small representable games, at most four events, bounds at most 2.
std::vector<std::pair<std::string, TcgPtr>> game_pool();

// Negative forest with at most max_events events and alternating polarity.
cgame::EventStructure random_arena(std::mt19937& rng, int max_events);
// A random game built from single events, bounded exponentials of random
// arenas and one further construction; at most max_events events.
TcgPtr random_game(std::mt19937& rng, int max_events);

// Restriction of A^perp || B to a random receptive down-closed set, with
// extra causal links from negative to positive events and possibly a
// duplicated positive event. Null when the candidate is not a strategy or
// exceeds max_events.
StrategyPtr random_strategy(std::mt19937& rng, const TcgPtr& a, const TcgPtr& b,
                            const std::string& name, int max_events = 8);

struct PairStats {
  int attempts = 0;
  int deadlock_free = 0;
  int deadlocking = 0;
  int theorem_failures = 0;  // among deadlock-free pairs
  int pair_count_failures = 0;
  int pcov_failures = 0;
  std::vector<std::string> failures;
};

// Draws strategy pairs until want_free deadlock-free and want_dead
// deadlocking ones were checked.
PairStats random_pairs(std::uint32_t seed, int want_free, int want_dead, int max_attempts);

}  // namespace gen
