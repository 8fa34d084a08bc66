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

#include "cgame/fixtures.hpp"
#include "criteria.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cgame;

TEST_SUITE("strategy") {
  TEST_CASE("fixture strategies satisfy the axioms") {
    for (const auto& [who, st] : criteria::fixture_strategies()) {
      CAPTURE(who);
      StrategyReport rep = validate_strategy(*st);
      CHECK_MESSAGE(rep.ok(), (rep.ok() ? "" : rep.issues[0].axiom + ": " + rep.issues[0].message));
    }
  }

  TEST_CASE("copycat is a strategy") {
    for (const auto& [name, g] : gen::game_pool()) {
      CAPTURE(name);
      StrategyPtr cc = copycat(g);
      CHECK(cc->es().size() == 2 * g->es.size());
      CHECK(validate_strategy(*cc).ok());
    }
  }

  TEST_CASE("missing receptive events are reported") {
    TcgPtr o = single_event(Polarity::Negative, "q");
    StrategyPtr bad = make_strategy("bad", EventStructure::build(EsSpec{}), empty_game(), o, {});
    StrategyReport rep = validate_strategy(*bad);
    CHECK(rep.failed("receptivity"));
  }

  TEST_CASE("interaction states match brute force") {
    for (const auto& p : criteria::fixture_pairs()) {
      Scenario sc = fixture(p.fixture);
      StrategyPtr s = sc.strategy(p.sigma), t = sc.strategy(p.tau);
      if (s->es().size() + t->es().size() > 20) continue;
      CAPTURE(p.fixture);
      CAPTURE(p.sigma);
      CAPTURE(p.tau);
      InteractionPtr in = interaction(s, t);
      CHECK(in->states.size() == oracle::interaction_states(*s, *t));
    }
    std::mt19937 rng(23);
    auto pool = gen::game_pool();
    int checked = 0;
    while (checked < 150) {
      const auto& ga = pool[rng() % pool.size()].second;
      const auto& gb = pool[rng() % pool.size()].second;
      const auto& gc = pool[rng() % pool.size()].second;
      StrategyPtr s = gen::random_strategy(rng, ga, gb, "sigma");
      StrategyPtr t = gen::random_strategy(rng, gb, gc, "tau");
      if (!s || !t) continue;
      InteractionPtr in = interaction(s, t);
      CHECK(in->states.size() == oracle::interaction_states(*s, *t));
      ++checked;
    }
  }

  TEST_CASE("+-covered bijection") {
    criteria::Verdict v = criteria::pcov_everywhere();
    CHECK_MESSAGE(v.ok, v.summary());
  }

  TEST_CASE("deadlock detection") {
    Scenario dl = fixture("FIX_DEADLOCK");
    DeadlockReport rep = no_deadlock(*dl.strategy("sigma"), *dl.strategy("tau"));
    CHECK(!rep.ok);
    CHECK(rep.theta_b.has_value());
    Scenario epi = fixture("FIX_EPI1");
    CHECK(no_deadlock(*epi.strategy("sigma"), *epi.strategy("tau")).ok);
  }

  TEST_CASE("middle games must agree") {
    Scenario epi = fixture("FIX_EPI1");
    StrategyPtr s = epi.strategy("sigma");
    try {
      interaction(s, s);
      FAIL("expected a dimension error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
  }

  TEST_CASE("weak bipullback through id and sw") {
    criteria::Verdict v = criteria::two_synchronisations();
    CHECK_MESSAGE(v.ok, v.summary());
  }

  TEST_CASE("negative symmetries act on witnesses") {
    for (const auto& [who, st] : criteria::fixture_strategies()) {
      if (!is_representable(*st->game).representable) continue;
      CAPTURE(who);
      Atlas amb = Atlas::automatic(st->game);
      for (int c = 0; c < amb.classes(); ++c) {
        ActionReport rep = check_group_action(*st, amb.rep(c));
        CHECK_MESSAGE(rep.ok, rep.failure);
      }
    }
  }
}
