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

#include <cstdio>
#include <fstream>

#include "cgame/commands.hpp"
#include "cgame/fixtures.hpp"

using namespace cgame;

TEST_SUITE("scenario") {
  TEST_CASE("print and parse round trip") {
    for (const auto& name : fixture_names()) {
      CAPTURE(name);
      Scenario a = fixture(name);
      std::string text = print_scenario(a);
      Scenario b = parse_scenario(text);
      CHECK(print_scenario(b) == text);
      CHECK(a.game_decls == b.game_decls);
      CHECK(a.strategy_decls == b.strategy_decls);
      CHECK(a.config_decls == b.config_decls);
      CHECK(a.commands == b.commands);
      for (const auto& [g, game] : a.games) CHECK(b.game(g)->es.size() == game->es.size());
      for (const auto& [s, st] : a.strategies) {
        CHECK(b.strategy(s)->label == st->label);
        CHECK(b.strategy(s)->es().edges() == st->es().edges());
      }
    }
  }

  TEST_CASE("parse errors carry positions") {
    const char* text = "GAME G\n  event a - q\n  causal a b\nEND\n";
    try {
      parse_scenario(text);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("line 3, column 12") != std::string::npos);
    }
    try {
      parse_scenario("FROB x\n");
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
      CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
  }

  TEST_CASE("unknown names") {
    Scenario sc = fixture("FIX_EPI1");
    try {
      sc.strategy("nope");
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }

  TEST_CASE("rebinding the copy bound") {
    Scenario sc = fixture("FIX_COPYCAT");
    Scenario three = parse_scenario(rebound_scenario(sc, 3));
    CHECK(three.game("bo")->es.size() == 3);
    CHECK(sc.game("bo")->es.size() == 2);
  }

  TEST_CASE("atlas files") {
    Scenario sc = fixture("FIX_REPR");
    std::string path = "cgame_atlas_test.txt";
    {
      std::ofstream out(path);
      out << "# alternative representative\nB = xb\n";
    }
    auto reps = load_atlas_file(sc, path);
    std::remove(path.c_str());
    REQUIRE(reps.count("B") == 1);
    CHECK(reps.at("B") == sc.config("xb"));
    auto [game, x] = parse_rep_override(sc, "B=xb_prime");
    CHECK(game == "B");
    CHECK(x == sc.config("xb_prime"));
  }

  TEST_CASE("commands are deterministic and report exit codes") {
    CommandOptions opt;
    for (const auto& name : fixture_names()) {
      CAPTURE(name);
      Scenario sc = fixture(name);
      CommandResult r1 = cmd_run(sc, opt), r2 = cmd_run(sc, opt);
      CHECK(r1.text == r2.text);
      CHECK(r1.exit_code == (name == "FIX_REPR" ? kExitCheckFailed : kExitOk));
      CommandResult repro = cmd_repro(name, opt);
      CHECK_MESSAGE(repro.exit_code == kExitOk, repro.text);
    }
  }

  TEST_CASE("validation modes") {
    Scenario dv = fixture("FIX_DEVISME");
    CommandOptions opt;
    CHECK(run_command(dv, {"validate", "dv"}, opt).exit_code == kExitOk);
    opt.strict = true;
    CHECK(run_command(dv, {"validate", "dv"}, opt).exit_code == kExitCheckFailed);
    CHECK(run_command(dv, {"bogus"}, opt).exit_code == kExitUsage);
  }

  TEST_CASE("records") {
    std::vector<Record> recs = {{{"kind", "class"}, {"rep", "{a, b}"}, {"note", ""}}};
    CHECK(format_records(recs) == "kind=class rep=\"{a, b}\" note=\"\"\n");
  }
}
