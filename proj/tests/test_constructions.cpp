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

#include "criteria.hpp"

using namespace cgame;

namespace {

TcgPtr qa_game() {
  EsSpec s;
  EventId q = s.add(Polarity::Negative, "q", "q");
  EventId a = s.add(Polarity::Positive, "a", "a");
  s.causality.emplace_back(q, a);
  return make_rigid_tcg(EventStructure::build(s), "qa");
}

template <typename F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("constructions") {
  TEST_CASE("sizes and names") {
    TcgPtr qa = qa_game();
    TcgPtr ho = bang_ho(make_arena(qa->es), CopyBound::uniform(2));
    CHECK(ho->es.size() == 6);
    CHECK(ho->es.find("q(1)") >= 0);
    CHECK(ho->es.find("a(1,0)") >= 0);
    CHECK(bang_ho(make_arena(qa->es), CopyBound{{3, 2}})->es.size() == 9);

    TcgPtr o = single_event(Polarity::Negative, "q");
    TcgPtr bo = bang_ajm(o, CopyBound::uniform(3));
    CHECK(bo->es.size() == 3);
    CHECK(bo->es.find("q[2]") >= 0);
    CHECK(symmetry_classes(*bo).size() == 4);

    TcgPtr d = dual(qa);
    CHECK(d->es.polarity(0) == Polarity::Positive);
    CHECK(parallel(qa, bo)->es.size() == 5);

    TcgPtr ar = linear_arrow(o, o);
    CHECK(ar->es.find("L.q") >= 0);
    CHECK(ar->es.find("R.q") >= 0);
    CHECK(ar->es.lt(ar->es.find("R.q"), ar->es.find("L.q")));
    CHECK(ar->es.polarity(ar->es.find("L.q")) == Polarity::Positive);

    TcgPtr sm = sum({o, single_event(Polarity::Positive, "ok")});
    CHECK(sm->es.in_conflict(0, 1));
    TcgPtr up = shift_up(qa);
    CHECK(up->es.size() == 3);
    CHECK(count(up->es.minimal_events()) == 1);
  }

  TEST_CASE("construction errors") {
    TcgPtr o = single_event(Polarity::Negative, "q");
    TcgPtr ok = single_event(Polarity::Positive, "ok");
    CHECK(code_of([&] { bang_ajm(ok, CopyBound::uniform(2)); }) == ErrorCode::NotNegative);
    CHECK(code_of([&] { linear_arrow(ok, o); }) == ErrorCode::NotNegative);
    CHECK(code_of([&] { linear_arrow(o, parallel(o, o)); }) == ErrorCode::ArityMismatch);
    EsSpec c;
    c.add(Polarity::Negative, "x", "x");
    c.add(Polarity::Negative, "y", "y");
    c.conflict.emplace_back(0, 1);
    CHECK(code_of([&] { make_arena(EventStructure::build(c)); }) == ErrorCode::NotForestial);
    CHECK(code_of([&] { bang_ajm(o, CopyBound::uniform(65)); }) == ErrorCode::SizeLimitExceeded);
  }

  TEST_CASE("copy bounds") {
    CopyBound b{{3, 2}};
    CHECK(b.at(0) == 3);
    CHECK(b.at(1) == 2);
    CHECK(b.at(5) == 2);
    CHECK(CopyBound::uniform(4).at(7) == 4);
  }

  TEST_CASE("representability is preserved") {
    criteria::Verdict v = criteria::representability_preserved(3u, 20);
    CHECK_MESSAGE(v.ok, v.summary());
  }

  TEST_CASE("classes of bounded exponentials are bounded multisets") {
    criteria::Verdict v = criteria::multiset_classes();
    CHECK_MESSAGE(v.ok, v.summary());
  }
}
