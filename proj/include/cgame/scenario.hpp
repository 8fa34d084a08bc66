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
#include <string>
#include <utility>
#include <vector>

#include "cgame/strategy.hpp"

namespace cgame {

// Line-oriented scenario text:
//
//   # comment
//   GAME b
//     event q - q
//     event a + a
//     causal q a
//     symmetry full all          (all | identity | generators)
//     generator full q a         (images in declaration order, _ if undefined)
//   END
//   GAME c = dual(bang_ajm(single(-, ok), 4))
//   STRATEGY sigma : a -> b
//     event q0 q B:q(0)          (name role target)
//     causal q0 f0
//     conflict f0 g0
//     symmetry induced           (induced | identity | generators)
//   END
//   STRATEGY cc = copycat(b)
//   CONFIG x = b : q(0) a(0,0)
//   RUN validate sigma
//
// Expressions: empty, single(+|-, label), dual(G), par(G, H), bang_ajm(G, k),
// bang_ho(G, k), shift_up(G), shift_down(G), sum(G, ...), arrow(M, N), where
// k is an integer or a per-depth list [k0, k1, ...].

struct SymDecl {
  enum class Kind { All, Identity, Generators, Induced };
  Kind kind = Kind::Identity;
  std::vector<std::vector<std::string>> generators;
  friend bool operator==(const SymDecl&, const SymDecl&) = default;
};

struct Expr {
  std::string head;
  std::vector<Expr> args;
  bool call = false;
  friend bool operator==(const Expr&, const Expr&) = default;
};
std::string format_expr(const Expr& e);

struct EventDecl {
  std::string name;
  std::string polarity_or_role;  // "+"/"-" for games, a role for strategies
  std::string label_or_target;
  friend bool operator==(const EventDecl&, const EventDecl&) = default;
};

using NamePairs = std::vector<std::pair<std::string, std::string>>;

struct GameDecl {
  std::string name;
  bool is_expr = false;
  Expr expr;
  std::vector<EventDecl> events;
  NamePairs causal, conflict;
  SymDecl full, pos, neg;
  int line = 0;
  friend bool operator==(const GameDecl& a, const GameDecl& b) {
    return a.name == b.name && a.is_expr == b.is_expr && a.expr == b.expr &&
           a.events == b.events && a.causal == b.causal && a.conflict == b.conflict &&
           a.full == b.full && a.pos == b.pos && a.neg == b.neg;
  }
};

struct StrategyDecl {
  std::string name, a, b;
  std::string copycat_of;  // set for "STRATEGY name = copycat(G)"
  std::vector<EventDecl> events;
  NamePairs causal, conflict;
  SymDecl sym{SymDecl::Kind::Induced, {}};
  int line = 0;
  friend bool operator==(const StrategyDecl& x, const StrategyDecl& y) {
    return x.name == y.name && x.copycat_of == y.copycat_of && x.a == y.a && x.b == y.b &&
           x.events == y.events && x.causal == y.causal && x.conflict == y.conflict &&
           x.sym == y.sym;
  }
};

struct ConfigDecl {
  std::string name, owner;  // a game or a strategy
  std::vector<std::string> events;
  int line = 0;
  friend bool operator==(const ConfigDecl& x, const ConfigDecl& y) {
    return x.name == y.name && x.owner == y.owner && x.events == y.events;
  }
};

struct Command {
  std::vector<std::string> words;
  int line = 0;
  friend bool operator==(const Command& x, const Command& y) { return x.words == y.words; }
};

struct Scenario {
  // Declarations in source order; decl_order holds (kind, index) with kind
  // 'G', 'S' or 'C'.
  std::vector<GameDecl> game_decls;
  std::vector<StrategyDecl> strategy_decls;
  std::vector<ConfigDecl> config_decls;
  std::vector<std::pair<char, int>> decl_order;
  std::vector<Command> commands;

  std::map<std::string, TcgPtr> games;
  std::map<std::string, StrategyPtr> strategies;
  std::map<std::string, EventSet> configs;

  // Throw InvalidArgument on unknown names.
  TcgPtr game(const std::string& name) const;
  StrategyPtr strategy(const std::string& name) const;
  EventSet config(const std::string& name) const;
  const ConfigDecl& config_decl(const std::string& name) const;
};

// Throws ParseError with "line L, column C: ..." messages; construction
// errors keep their own code with the line prefixed.
Scenario parse_scenario(const std::string& text);
std::string print_scenario(const Scenario& s);
Scenario load_scenario_file(const std::string& path);

}  // namespace cgame
