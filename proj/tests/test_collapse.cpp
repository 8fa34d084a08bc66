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
#include "oracles.hpp"

using namespace cgame;

TEST_SUITE("collapse") {
  TEST_CASE("extended naturals") {
    ENat zero{false, 0}, two{false, 2}, three{false, 3}, inf = ENat::infinity();
    CHECK(zero * inf == zero);
    CHECK(inf * zero == zero);
    CHECK(two * three == ENat{false, 6});
    CHECK(two + inf == inf);
    CHECK(two * inf == inf);
    CHECK(inf.str() == "inf");
    CHECK(three.str() == "3");
  }

  TEST_CASE("matrix composition") {
    WeightedRelation r{{0, 1}, {0}, {{ENat{false, 1}}, {ENat{false, 2}}}};
    WeightedRelation s{{0}, {0, 1}, {{ENat{false, 3}, ENat::infinity()}}};
    WeightedRelation rs = matrix_compose(r, s);
    CHECK(rs.at(1, 0) == ENat{false, 6});
    CHECK(rs.at(0, 1) == ENat::infinity());
    try {
      matrix_compose(r, r);
      FAIL("expected a dimension error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DimensionMismatch);
    }
  }

  TEST_CASE("wit+ matches brute force") {
    for (const auto& [who, st] : criteria::fixture_strategies()) {
      if (st->es().size() > 16) continue;
      CAPTURE(who);
      Atlas aa = Atlas::automatic(st->a), ab = Atlas::automatic(st->b);
      for (int a = 0; a < aa.classes(); ++a)
        for (int b = 0; b < ab.classes(); ++b)
          CHECK(wit_plus(*st, aa, ab, a, b).size() == oracle::wit_plus(*st, aa.rep(a), ab.rep(b)));
    }
  }

  TEST_CASE("empty strategy and the atomic mismatch composite") {
    TcgPtr one = empty_game();
    Atlas e = Atlas::automatic(one);
    WeightedRelation w = collapse(*copycat(one), e, e);
    REQUIRE(w.rows.size() == 1);
    CHECK(w.at(0, 0) == ENat{false, 1});

    Scenario sc = fixture("FIX_EPI1");
    Composition comp = compose(sc.strategy("sigma"), sc.strategy("tau"));
    Atlas aa = Atlas::automatic(comp.strategy->a), ac = Atlas::automatic(comp.strategy->b);
    int a = aa.class_of(comp.strategy->a->es.all()), c = ac.class_of(comp.strategy->b->es.all());
    CHECK(collapse(*comp.strategy, aa, ac).at(a, c) == ENat{false, 2});
    Limits tight;
    tight.config_cap = 1;
    CHECK(collapse(*comp.strategy, aa, ac, tight).at(a, c) == ENat::infinity());
  }

  TEST_CASE("collapse is functorial on deadlock-free fixture pairs") {
    for (const auto& p : criteria::fixture_pairs()) {
      Scenario sc = fixture(p.fixture);
      StrategyPtr s = sc.strategy(p.sigma), t = sc.strategy(p.tau);
      if (!no_deadlock(*s, *t).ok) continue;
      CAPTURE(p.fixture);
      CAPTURE(p.sigma);
      CAPTURE(p.tau);
      criteria::Atlases at = criteria::automatic_atlases(*s, *t);
      WeightedRelation lhs = collapse(*compose(s, t).strategy, at.a, at.c);
      WeightedRelation rhs = matrix_compose(collapse(*s, at.a, at.b), collapse(*t, at.b, at.c));
      CHECK(lhs.entries == rhs.entries);
    }
  }

  TEST_CASE("upsilon round trips") {
    for (const char* name : {"FIX_EPI1", "FIX_EPI2", "FIX_REPR"}) {
      CAPTURE(name);
      Scenario sc = fixture(name);
      StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
      criteria::Atlases at = criteria::automatic_atlases(*s, *t);
      InteractionPtr in = interaction(s, t);
      for (int a = 0; a < at.a.classes(); ++a)
        for (int b = 0; b < at.b.classes(); ++b)
          for (int c = 0; c < at.c.classes(); ++c) {
            UpsilonReport rep = check_upsilon(*s, *t, *in, at.a, at.b, at.c, a, b, c);
            CHECK(rep.domain == rep.codomain);
          }
    }
  }

  TEST_CASE("theorem trace localizes failures") {
    Scenario repr = fixture("FIX_REPR");
    StrategyPtr s = repr.strategy("sigma"), t = repr.strategy("tau");
    criteria::Atlases at = criteria::automatic_atlases(*s, *t);
    CHECK(check_theorem(s, t, at.a, at.b, at.c).holds);
    TheoremReport bad = check_theorem(s, t, at.a, at.b.with_rep(repr.config("xb")), at.c);
    CHECK(!bad.holds);
    int first = 0;
    for (const auto& e : bad.entries)
      if (e.first_break != 0 && (first == 0 || e.first_break < first)) first = e.first_break;
    CHECK(first == 10);

    Scenario dl = fixture("FIX_DEADLOCK");
    StrategyPtr ds = dl.strategy("sigma"), dt = dl.strategy("tau");
    criteria::Atlases dat = criteria::automatic_atlases(*ds, *dt);
    TheoremReport th = check_theorem(ds, dt, dat.a, dat.b, dat.c);
    CHECK(!th.holds);
    CHECK(!th.deadlock_free);
  }

  TEST_CASE("class witnesses disagree where wit+ agrees") {
    Scenario sc = fixture("FIX_EPI1");
    StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
    criteria::Atlases at = criteria::automatic_atlases(*s, *t);
    WitReport rep = check_wit_vs_witplus(s, t, at.a, at.b, at.c);
    CHECK(rep.classes_mismatch);
    CHECK(rep.plus_agrees);
  }

  TEST_CASE("counting identities") {
    criteria::Verdict v = criteria::counting_identities();
    CHECK_MESSAGE(v.ok, v.summary());
  }

  TEST_CASE("collapse does not depend on the canonical representatives") {
    criteria::Verdict v = criteria::atlas_invariance();
    CHECK_MESSAGE(v.ok, v.summary());
  }

  TEST_CASE("collapse does not depend on the strategy symmetry") {
    criteria::Verdict v = criteria::altsym_invariance();
    CHECK_MESSAGE(v.ok, v.summary());
  }

  TEST_CASE("strict atlases reject non-representable games") {
    Scenario dv = fixture("FIX_DEVISME");
    try {
      Atlas::automatic(dv.game("dv"), true);
      FAIL("expected NotRepresentable");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotRepresentable);
    }
  }
}
