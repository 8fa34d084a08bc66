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

#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"

using namespace cgame;

namespace {

// Random DAG over events ordered by id, with a few conflicts.
EsSpec random_spec(std::mt19937& rng, int n) {
  EsSpec s;
  std::uniform_int_distribution<int> pol(0, 1);
  for (int i = 0; i < n; ++i) {
    s.add(pol(rng) ? Polarity::Positive : Polarity::Negative, "l" + std::to_string(i % 2),
          "e" + std::to_string(i));
  }
  std::bernoulli_distribution edge(0.3), confl(0.15);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (edge(rng)) {
        s.causality.emplace_back(i, j);
      } else if (confl(rng)) {
        s.conflict.emplace_back(i, j);
      }
    }
  return s;
}

}  // namespace

TEST_SUITE("event_structure") {
  TEST_CASE("configurations match brute force") {
    std::mt19937 rng(5);
    for (int round = 0; round < 60; ++round) {
      EsSpec s = random_spec(rng, 1 + round % 9);
      EventStructure es;
      try {
        es = EventStructure::build(s);
      } catch (const Error& e) {
        // a conflict between causally related events becomes a self-conflict
        CHECK(e.code() == ErrorCode::ConflictNotInherited);
        continue;
      }
      auto got = enumerate_configurations(es);
      auto want = oracle::configurations(oracle::raw(es));
      std::sort(got.begin(), got.end());
      CHECK(got == want);
      oracle::Raw r = oracle::raw(es);
      for (EventSet x : want) CHECK(is_plus_covered(es, x) == oracle::plus_covered(r, x));
    }
  }

  TEST_CASE("closure and reduction") {
    EsSpec s;
    EventId a = s.add(Polarity::Negative, "a", "a");
    EventId b = s.add(Polarity::Positive, "b", "b");
    EventId c = s.add(Polarity::Negative, "c", "c");
    EventId d = s.add(Polarity::Positive, "d", "d");
    s.causality = {{a, b}, {b, c}};
    s.conflict = {{a, d}};
    EventStructure es = EventStructure::build(s);
    CHECK(es.lt(a, c));
    CHECK(es.preds(c) == bit(b));
    CHECK(es.in_conflict(c, d));
    CHECK(es.minimal_conflicts() == std::vector<std::pair<EventId, EventId>>{{a, d}});
    CHECK(es.minimal_events() == (bit(a) | bit(d)));
    CHECK(es.topological_order().front() == a);
    CHECK(es.find("c") == c);
    CHECK(es.find("zz") == -1);
    CHECK(format_set(es, bit(a) | bit(b)) == "{a, b}");
  }

  TEST_CASE("validation reports") {
    EsSpec s;
    s.add(Polarity::Negative, "a", "a");
    s.add(Polarity::Negative, "b", "b");
    s.add(Polarity::Positive, "c", "c");
    s.causality = {{0, 1}, {1, 2}, {0, 2}};
    auto rep = validate_es(s);
    REQUIRE(!rep.ok());
    CHECK(rep.issues[0].kind == ErrorCode::NonCoveringEdge);

    s.causality = {{1, 2}};
    s.conflict = {{0, 1}};
    rep = validate_es(s);
    REQUIRE(!rep.ok());
    CHECK(rep.issues[0].kind == ErrorCode::ConflictNotInherited);

    s.causality = {{1, 2}, {2, 1}};
    bool cycle = false;
    for (const auto& i : validate_es(s).issues) cycle = cycle || i.kind == ErrorCode::CycleDetected;
    CHECK(cycle);
    try {
      EventStructure::build(s);
      FAIL("expected a cycle error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CycleDetected);
    }
  }

  TEST_CASE("size limit") {
    EsSpec s;
    for (int i = 0; i <= kMaxEvents; ++i) s.add(Polarity::Negative, "q", "q" + std::to_string(i));
    try {
      EventStructure::build(s);
      FAIL("expected a size error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SizeLimitExceeded);
    }
  }
}
