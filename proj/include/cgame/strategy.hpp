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

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgame/constructions.hpp"

namespace cgame {

// sigma : A -> B. The ambient game is par(dual(A), B): A events keep their
// ids, B events are shifted by |A|.
struct Strategy {
  std::string name;
  TcgPtr s;  // S, with the strategy symmetry as its full family
  TcgPtr a, b;
  TcgPtr game;
  std::vector<EventId> label;  // S event -> game event

  const EventStructure& es() const { return s->es; }
  const SymmetrySpec& sym() const { return s->full; }
  int a_size() const { return a->es.size(); }
  int b_size() const { return b->es.size(); }

  EventSet image(EventSet x) const;
  EventSet on_a(EventSet x) const;  // S events of x played in A
  EventSet on_b(EventSet x) const;
  EventSet proj_a(EventSet x) const;  // x_A, as A ids
  EventSet proj_b(EventSet x) const;  // x_B, as B ids
  EventId b_event(EventId s) const { return label[s] - a_size(); }
  // sigma phi, as an iso of the ambient game.
  ConfigIso push(const ConfigIso& phi) const;
};
using StrategyPtr = std::shared_ptr<const Strategy>;

// Order-isos preserving roles whose image is a game symmetry.
SymmetrySpec induced_symmetry(const TcgPtr& game, std::vector<EventId> label);

// Event labels of s are roles; isos of S preserve them. Without sym the
// induced symmetry is used.
StrategyPtr make_strategy(std::string name, EventStructure s, TcgPtr a,
                          TcgPtr b, std::vector<EventId> label,
                          std::optional<SymmetrySpec> sym = std::nullopt);
// Copycat on A, from A to A.
StrategyPtr copycat(const TcgPtr& a);

// Game isos on par(dual(A), B) from and to their components.
ConfigIso join_iso(const ConfigIso& on_a, const ConfigIso& on_b);
ConfigIso part_a(const Strategy& st, const ConfigIso& game_iso);
ConfigIso part_b(const Strategy& st, const ConfigIso& game_iso);

struct AxiomIssue {
  std::string axiom;
  std::string message;
};
struct StrategyReport {
  std::vector<AxiomIssue> issues;
  bool ok() const { return issues.empty(); }
  bool failed(const std::string& axiom) const;
};
// Axioms: "configuration", "injectivity", "polarity", "courtesy",
// "receptivity", "sym-receptivity", "symmetry", "thinness".
StrategyReport validate_strategy(const Strategy& st, const Limits& limits = {});

// Composite bijection x^S || x^T_C ~ x^S_A || x^T through theta_b, a B iso
// from x^S_B to x^T_B. True when the causal orders generate no cycle.
bool is_secured(const Strategy& sigma, const Strategy& tau, EventSet xs,
                EventSet xt, const ConfigIso& theta_b);

struct InteractionState {
  EventSet xs = 0;
  EventSet xt = 0;
  friend bool operator==(const InteractionState&, const InteractionState&) = default;
};

struct StateHash {
  std::size_t operator()(const InteractionState& s) const;
};

// Matching, causally compatible pairs reachable from the empty pair.
struct Interaction {
  enum class Kind { A, B, C };
  struct Prime {
    InteractionState state;
    Kind kind;
    EventId top;  // S event for A and B, T event for C
  };

  StrategyPtr sigma, tau;
  std::vector<InteractionState> states;  // states[0] is empty
  std::unordered_map<InteractionState, int, StateHash> index;
  std::vector<Prime> primes;

  bool contains(const InteractionState& s) const { return index.count(s) != 0; }
  // All maximal events visible and positive.
  bool is_plus_covered(const InteractionState& s) const;
  // All maximal events visible.
  bool is_minimal(const InteractionState& s) const;
  EventSet proj_a(const InteractionState& s) const;
  EventSet proj_b(const InteractionState& s) const;
  EventSet proj_c(const InteractionState& s) const;
};
using InteractionPtr = std::shared_ptr<const Interaction>;

// Throws DimensionMismatch when the middle games differ in size.
InteractionPtr interaction(const StrategyPtr& sigma, const StrategyPtr& tau,
                           const Limits& limits = {});

struct Composition {
  StrategyPtr strategy;  // tau . sigma
  InteractionPtr inter;
  std::vector<int> prime;  // composite event -> index into inter->primes

  EventSet config_of(const InteractionState& s) const;
  InteractionState state_of(EventSet x) const;
};

Composition compose(const StrategyPtr& sigma, const StrategyPtr& tau,
                    const Limits& limits = {});

struct PcovReport {
  bool ok = true;
  std::size_t interaction_count = 0;
  std::size_t composition_count = 0;
  std::string failure;
  std::vector<std::pair<InteractionState, EventSet>> pairs;
};
PcovReport pcov_bijection(const Composition& comp);

struct DeadlockReport {
  bool ok = true;
  EventSet xs = 0, xt = 0;
  std::optional<ConfigIso> theta_b;
};
DeadlockReport no_deadlock(const Strategy& sigma, const Strategy& tau,
                           const Limits& limits = {});

struct SyncResult {
  EventSet ys = 0, yt = 0;
  ConfigIso theta_s;  // x^S -> y^S
  ConfigIso theta_t;  // y^T -> x^T
};
struct SyncReport {
  std::vector<SyncResult> solutions;
  bool connected = true;  // solutions pairwise related by S and T symmetries
};
// Throws NoSolution, or AmbiguousBeyondSymmetry when solutions are not
// connected.
SyncReport weak_bipullback(const Strategy& sigma, const Strategy& tau,
                           EventSet xs, EventSet xt, const ConfigIso& theta_b);

struct NegativeAction {
  ConfigIso phi;  // x^S -> y^S
  EventSet ys = 0;
  ConfigIso theta_pos;  // y -> sigma y^S
};
// For theta_neg a negative symmetry of the ambient game out of sigma x^S.
// Throws NoSolution / NonUnique.
NegativeAction negative_action(const Strategy& st, EventSet xs,
                               const ConfigIso& theta_neg);

// A witness up to positive symmetry: x^S with theta_pos : sigma x^S to a
// fixed representative.
struct PosWitness {
  EventSet xs = 0;
  ConfigIso theta_pos;
  friend bool operator==(const PosWitness&, const PosWitness&) = default;
};
// phi_neg, a negative endosymmetry of the representative, acting on w.
PosWitness act(const Strategy& st, const ConfigIso& phi_neg, const PosWitness& w);

struct ActionReport {
  bool ok = true;
  std::string failure;
  std::size_t checked = 0;
};
// Identity, compatibility with composition and the commuting square, over
// every witness for rep (a configuration of the ambient game).
ActionReport check_group_action(const Strategy& st, EventSet rep);

}  // namespace cgame
