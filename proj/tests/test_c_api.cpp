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

#include <string>

#include "cgame/cgame.h"

TEST_SUITE("c_api") {
  TEST_CASE("status names and fixtures") {
    CHECK(std::string(cg_status_name(CG_OK)) == "Ok");
    CHECK(std::string(cg_status_name(CG_NOT_NEGATIVE)) == "NotNegative");
    CHECK(cg_fixture_count() == 8);
    CHECK(std::string(cg_fixture_name(0)) == "FIX_EX1");
  }

  TEST_CASE("parse failures") {
    cg_scenario* sc = nullptr;
    CHECK(cg_scenario_parse("GAME G\n  causal a b\nEND\n", &sc) == CG_PARSE_ERROR);
    CHECK(sc == nullptr);
    CHECK(std::string(cg_last_error()).find("line 2") != std::string::npos);
    CHECK(cg_scenario_load("NO_SUCH_FIXTURE", nullptr, &sc) != CG_OK);
  }

  TEST_CASE("running commands") {
    cg_options* opts = cg_options_new();
    cg_scenario* sc = nullptr;
    REQUIRE(cg_scenario_load("FIX_DEVISME", opts, &sc) == CG_OK);
    CHECK(cg_scenario_command_count(sc) == 3);
    CHECK(std::string(cg_scenario_text(sc)).find("GAME dv") != std::string::npos);

    const char* words[] = {"validate", "dv"};
    cg_result* res = nullptr;
    REQUIRE(cg_run(sc, words, 2, opts, &res) == CG_OK);
    CHECK(cg_result_exit_code(res) == 0);
    CHECK(std::string(cg_result_records(res)).find("=") != std::string::npos);
    cg_result_free(res);

    cg_options_set_strict(opts, 1);
    REQUIRE(cg_run(sc, words, 2, opts, &res) == CG_OK);
    CHECK(cg_result_exit_code(res) == 1);
    cg_result_free(res);

    const char* bad[] = {"classes", "nope"};
    REQUIRE(cg_run(sc, bad, 2, opts, &res) == CG_OK);
    CHECK(cg_result_exit_code(res) == 2);
    cg_result_free(res);

    cg_scenario_free(sc);
    cg_options_free(opts);
  }

  TEST_CASE("repro") {
    cg_result* res = nullptr;
    REQUIRE(cg_repro("FIX_EPI1", nullptr, &res) == CG_OK);
    CHECK(cg_result_exit_code(res) == 0);
    CHECK(std::string(cg_result_text(res)).find("PASS") != std::string::npos);
    cg_result_free(res);
  }
}
