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

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cgame/cgame.h"

namespace {

constexpr int kUsage = 2;

struct Flags {
  int bound = 0;
  bool strict = false;
  std::size_t cap = 0;
  std::string atlas = "auto";
  bool json = false;
};

using Options = std::unique_ptr<cg_options, decltype(&cg_options_free)>;
using ScenarioPtr = std::unique_ptr<cg_scenario, decltype(&cg_scenario_free)>;
using Result = std::unique_ptr<cg_result, decltype(&cg_result_free)>;

int report_error(cg_status s) {
  std::fprintf(stderr, "error: %s: %s\n", cg_status_name(s), cg_last_error());
  return kUsage;
}

Options make_options(const Flags& f) {
  Options o(cg_options_new(), cg_options_free);
  cg_options_set_bound(o.get(), f.bound);
  cg_options_set_strict(o.get(), f.strict ? 1 : 0);
  if (f.cap > 0) cg_options_set_cap(o.get(), f.cap);
  if (f.atlas != "auto") cg_options_set_atlas_file(o.get(), f.atlas.c_str());
  return o;
}

int emit(cg_result* raw, const Flags& f) {
  Result r(raw, cg_result_free);
  std::fputs(f.json ? cg_result_records(r.get()) : cg_result_text(r.get()), stdout);
  return cg_result_exit_code(r.get());
}

int run_words(const std::string& source, const std::vector<std::string>& words,
              const Flags& f) {
  Options opts = make_options(f);
  cg_scenario* raw = nullptr;
  cg_status s = cg_scenario_load(source.c_str(), opts.get(), &raw);
  if (s != CG_OK) return report_error(s);
  ScenarioPtr sc(raw, cg_scenario_free);
  std::vector<const char*> argv;
  for (const auto& w : words) argv.push_back(w.c_str());
  cg_result* res = nullptr;
  s = cg_run(sc.get(), argv.data(), argv.size(), opts.get(), &res);
  if (s != CG_OK) return report_error(s);
  return emit(res, f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thin concurrent games: composition and quantitative collapse"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--bound", flags.bound, "Copy bound for every exponential")
      ->check(CLI::PositiveNumber);
  app.add_flag("--strict", flags.strict, "Treat non-representable games as failures");
  app.add_option("--cap", flags.cap, "Enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--atlas", flags.atlas, "auto, or a file of representatives");
  app.add_flag("--json", flags.json, "Flat key=value records instead of tables");

  std::string source;
  std::vector<std::string> rest;
  std::vector<std::string> words;

  auto scenario_cmd = [&](const std::string& name, const std::string& help,
                          std::vector<std::string> positional, bool variadic) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("scenario", source, "Scenario file or fixture name")->required();
    sub->add_option("args", rest, [&] {
         std::string s;
         for (const auto& p : positional) s += (s.empty() ? "" : " ") + p;
         return s;
       }())
        ->expected(0, variadic ? -1 : static_cast<int>(positional.size()));
    sub->callback([&, name] {
      words = {name};
      words.insert(words.end(), rest.begin(), rest.end());
    });
    return sub;
  };
  scenario_cmd("validate", "Check game and strategy axioms", {"[NAME...]"}, true);
  scenario_cmd("collapse", "Weighted relation of a strategy or a composite",
               {"SIGMA", "[TAU]"}, false);
  scenario_cmd("compose", "Compose two strategies", {"SIGMA", "TAU"}, false);
  scenario_cmd("classes", "Symmetry classes of a game", {"GAME"}, false);
  scenario_cmd("canonical", "Canonicity of a configuration", {"GAME", "CONFIG"}, false);
  scenario_cmd("check-theorem", "Trace the counting chain for a composition",
               {"SIGMA", "TAU", "[GAME=CONFIG...]"}, true);
  scenario_cmd("wit", "Compare class witnesses with wit+", {"SIGMA", "TAU"}, false);
  scenario_cmd("deadlock", "Deadlock search and pair counts", {"SIGMA", "TAU"}, false);
  scenario_cmd("run", "Execute the RUN commands of a scenario", {}, false);

  std::string fixture;
  CLI::App* repro = app.add_subcommand("repro", "Reproduce the claims attached to a fixture");
  repro->add_option("fixture", fixture, "Fixture name")->required();
  app.add_subcommand("fixtures", "List built-in fixtures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (app.got_subcommand("fixtures")) {
    for (std::size_t i = 0; i < cg_fixture_count(); ++i) std::printf("%s\n", cg_fixture_name(i));
    return 0;
  }
  if (app.got_subcommand(repro)) {
    Options opts = make_options(flags);
    cg_result* res = nullptr;
    cg_status s = cg_repro(fixture.c_str(), opts.get(), &res);
    if (s != CG_OK) return report_error(s);
    return emit(res, flags);
  }
  return run_words(source, words, flags);
}
