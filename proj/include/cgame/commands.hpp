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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cgame/collapse.hpp"
#include "cgame/scenario.hpp"

namespace cgame {

enum ExitCode { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

struct CommandOptions {
  std::optional<int> bound;  // overrides every exponential copy bound
  bool strict = false;
  Limits limits;
  // Representative overrides, game name -> configuration of that game.
  std::map<std::string, EventSet> reps;
};

// One flat key=value record.
using Record = std::vector<std::pair<std::string, std::string>>;

struct CommandResult {
  int exit_code = kExitOk;
  std::string text;
  std::vector<Record> records;

  void merge(const CommandResult& other);
};

// Fixture name or file path; applies opt.bound.
Scenario load_scenario(const std::string& source, const CommandOptions& opt);
// Rewrites every bang_ajm / bang_ho bound to k.
std::string rebound_scenario(const Scenario& sc, int k);

// "#3 [q(a), q]": class index of the representative's multiset of trees,
// each written as a label followed by the multiset of its subtrees.
std::string describe_class(const Atlas& atlas, int cls);

// Atlas for game with the overrides of opt and extra applied.
Atlas make_atlas(const Scenario& sc, const TcgPtr& game, const CommandOptions& opt,
                 const std::map<std::string, EventSet>& extra = {});
// Parses "G=config" for a configuration declared on G; throws InvalidArgument.
std::pair<std::string, EventSet> parse_rep_override(const Scenario& sc,
                                                    const std::string& word);
// Lines "G = config" or "G : ev1 ev2 ..."; '#' starts a comment.
std::map<std::string, EventSet> load_atlas_file(const Scenario& sc, const std::string& path);

CommandResult cmd_validate(const Scenario& sc, const std::vector<std::string>& names,
                           const CommandOptions& opt);
CommandResult cmd_classes(const Scenario& sc, const std::string& game,
                          const CommandOptions& opt);
CommandResult cmd_canonical(const Scenario& sc, const std::string& game,
                            const std::string& config, const CommandOptions& opt);
CommandResult cmd_collapse(const Scenario& sc, const std::string& strategy,
                           const CommandOptions& opt);
CommandResult cmd_compose(const Scenario& sc, const std::string& sigma,
                          const std::string& tau, const CommandOptions& opt);
CommandResult cmd_check_theorem(const Scenario& sc, const std::string& sigma,
                                const std::string& tau, const CommandOptions& opt);
CommandResult cmd_wit(const Scenario& sc, const std::string& sigma, const std::string& tau,
                      const CommandOptions& opt);
CommandResult cmd_deadlock(const Scenario& sc, const std::string& sigma,
                           const std::string& tau, const CommandOptions& opt);
CommandResult cmd_repro(const std::string& fixture, const CommandOptions& opt);
// Executes the RUN list of the scenario in order.
CommandResult cmd_run(const Scenario& sc, const CommandOptions& opt);

// One command line as written after RUN. Errors are reported in the result
// with exit code 2 for usage and parse errors and 1 otherwise.
CommandResult run_command(const Scenario& sc, const std::vector<std::string>& words,
                          const CommandOptions& opt);

// Records as lines of space-separated key=value pairs; values with spaces,
// quotes or '=' are double-quoted.
std::string format_records(const std::vector<Record>& records);

}  // namespace cgame
