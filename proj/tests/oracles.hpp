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

#include <cstddef>
#include <vector>

#include "cgame/collapse.hpp"

// Brute-force reference implementations. They read only the declared
// relations of an event structure and recompute everything else.
namespace oracle {

using cgame::ConfigIso;
using cgame::EventSet;

struct Raw {
  int n = 0;
  std::vector<EventSet> below;  // strict, transitively closed
  std::vector<EventSet> conflict;  // inherited, symmetric
  std::vector<bool> positive;
  std::vector<std::string> label;
};
Raw raw(const cgame::EventStructure& es);

// Every subset that is down-closed and conflict-free, in numeric order.
std::vector<EventSet> configurations(const Raw& r);
bool plus_covered(const Raw& r, EventSet x);

// Bijections x -> y preserving polarity, label and order both ways.
std::vector<ConfigIso> order_isos(const Raw& r, EventSet x, EventSet y);
std::vector<ConfigIso> symmetries(const cgame::Tcg& g, cgame::Flavor f, EventSet x,
                                  EventSet y);
bool symmetric(const cgame::Tcg& g, cgame::Flavor f, EventSet x, EventSet y);

// Number of full-symmetry classes, by union-find over configurations.
std::size_t class_count(const cgame::Tcg& g);
// Every full endosymmetry splits as pos o neg, both endo on x, in one way.
bool canonical(const cgame::Tcg& g, EventSet x);
bool representable(const cgame::Tcg& g);

// +-covered x^S with x^S_A negatively symmetric to rep_a and x^S_B
// positively symmetric to rep_b.
std::size_t wit_plus(const cgame::Strategy& st, EventSet rep_a, EventSet rep_b);
// Symmetry classes in S of +-covered x^S with projections fully symmetric to
// rep_a and rep_b.
std::size_t wit_classes(const cgame::Strategy& st, EventSet rep_a, EventSet rep_b);

// Matching pairs (x^S, x^T) whose merged causal order is acyclic.
std::size_t interaction_states(const cgame::Strategy& sigma, const cgame::Strategy& tau);
// Those of them with all maximal events visible and positive.
std::size_t plus_covered_states(const cgame::Strategy& sigma, const cgame::Strategy& tau);

}  // namespace oracle
