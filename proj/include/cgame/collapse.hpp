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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "cgame/strategy.hpp"

namespace cgame {

// One representative per symmetry class of a game, plus the transport
// isos kappa_x : x -> rep. kappa is the least symmetry in ConfigIso order,
// and the identity on the representative itself.
class Atlas {
 public:
  Atlas() = default;
  // chosen_rep of every class. With strict set, throws NotRepresentable
  // when some class has no canonical member.
  static Atlas automatic(TcgPtr game, bool strict = false);
  // Same atlas with x representing its class.
  Atlas with_rep(EventSet x) const;

  const TcgPtr& game() const { return game_; }
  int classes() const { return static_cast<int>(reps_.size()); }
  int class_of(EventSet x) const;
  EventSet rep(int cls) const { return reps_.at(cls); }
  EventSet rep_for(EventSet x) const { return rep(class_of(x)); }
  bool canonical(int cls) const;
  bool all_canonical() const;

  ConfigIso kappa(EventSet x) const;
  // Least x -> rep symmetry of the given flavor, when one exists.
  std::optional<ConfigIso> kappa(EventSet x, Flavor flavor) const;
  // theta in Sym(rep) transported to x -> y: kappa_y^-1 o theta o kappa_x.
  ConfigIso transport(const ConfigIso& theta, EventSet x, EventSet y) const;

 private:
  TcgPtr game_;
  std::vector<EventSet> reps_;
};

// Extended naturals; 0 * inf = 0.
struct ENat {
  bool inf = false;
  std::uint64_t n = 0;

  static ENat infinity() { return {true, 0}; }
  friend ENat operator+(ENat a, ENat b);
  friend ENat operator*(ENat a, ENat b);
  friend bool operator==(const ENat&, const ENat&) = default;
  std::string str() const;
};

struct WeightedRelation {
  std::vector<EventSet> rows;  // representatives
  std::vector<EventSet> cols;
  std::vector<std::vector<ENat>> entries;

  ENat at(int r, int c) const { return entries.at(r).at(c); }
  friend bool operator==(const WeightedRelation&, const WeightedRelation&) = default;
};

// Classes of +-covered configurations of S whose projections lie in the
// given classes; one member per class.
std::vector<EventSet> wit(const Strategy& st, int cls_a, int cls_b);

// +-covered x^S with x^S_A negatively and x^S_B positively symmetric to the
// representatives.
std::vector<EventSet> wit_plus(const Strategy& st, const Atlas& aa,
                               const Atlas& ab, int cls_a, int cls_b);

struct SWitness {
  ConfigIso theta_a;  // x^S_A -> rep_A, negative
  EventSet xs = 0;
  ConfigIso theta_b;  // x^S_B -> rep_B, positive
  friend bool operator==(const SWitness&, const SWitness&) = default;
};
std::vector<SWitness> swit_plus(const Strategy& st, const Atlas& aa,
                                const Atlas& ab, int cls_a, int cls_b);

// Witnesses on the ambient game with an arbitrary symmetry to rep, for
// x^S positively symmetric to rep; rep is a configuration of st.game.
std::vector<PosWitness> swit(const Strategy& st, EventSet rep);
// The map (x^S, neg o pos) |-> neg acting on (x^S, pos).
PosWitness swit_to_switplus(const Strategy& st, EventSet rep, const PosWitness& w);

struct FiberReport {
  bool ok = true;
  std::size_t domain = 0, codomain = 0, neg_group = 0;
  std::string failure;
};
// Every witness up to positive symmetry has exactly |Sym-(rep)| antecedents.
FiberReport check_swit_fibers(const Strategy& st, EventSet rep);

// +-covered interaction states with A, B and C projections negatively,
// fully and positively symmetric to the representatives.
std::vector<InteractionState> int_plus(const Interaction& in, const Atlas& aa,
                                       const Atlas& ab, const Atlas& ac,
                                       int cls_a, int cls_b, int cls_c);
std::vector<InteractionState> int_plus_ac(const Interaction& in, const Atlas& aa,
                                          const Atlas& ac, int cls_a, int cls_c);

struct SIntWitness {
  ConfigIso theta_a;  // negative, to rep_A
  InteractionState state;
  ConfigIso theta_c;  // positive, to rep_C
  friend bool operator==(const SIntWitness&, const SIntWitness&) = default;
};
std::vector<SIntWitness> swint_plus(const Interaction& in, const Atlas& aa,
                                    const Atlas& ab, const Atlas& ac, int cls_a,
                                    int cls_b, int cls_c);

// The B link of a pair of witnesses: (Omega_-)^-1 o theta_+.
ConfigIso link_b(const SWitness& ws, const SWitness& wt);
// Pairs whose composite bijection is secured.
std::vector<std::pair<SWitness, SWitness>> compatible_pairs(
    const Strategy& sigma, const Strategy& tau, const std::vector<SWitness>& ws,
    const std::vector<SWitness>& wt);

struct UpsilonImage {
  SIntWitness witness;
  ConfigIso phi;  // in Sym(rep_B)
  friend bool operator==(const UpsilonImage&, const UpsilonImage&) = default;
};
UpsilonImage upsilon(const Strategy& sigma, const Strategy& tau, const Atlas& ab,
                     const SWitness& ws, const SWitness& wt);
std::pair<SWitness, SWitness> upsilon_inverse(const Strategy& sigma,
                                              const Strategy& tau, const Atlas& ab,
                                              const UpsilonImage& img);

struct UpsilonReport {
  std::size_t domain = 0;     // compatible pairs
  std::size_t codomain = 0;   // |~+wint+| * |Sym(rep_B)|
  std::vector<std::pair<std::pair<SWitness, SWitness>, UpsilonImage>> table;
};
// Throws BijectionFailure naming the first element that breaks the round trip.
UpsilonReport check_upsilon(const Strategy& sigma, const Strategy& tau,
                            const Interaction& in, const Atlas& aa, const Atlas& ab,
                            const Atlas& ac, int cls_a, int cls_b, int cls_c);

struct PairCountReport {
  bool ok = true;
  std::size_t triples = 0;   // triples with compatible pairs or interactions
  std::string failure;
};
// |compatible pairs| = |~+wint+| * |Sym(rep_B)| on every triple of classes.
PairCountReport check_pair_counts(const Strategy& sigma, const Strategy& tau,
                                  const Interaction& in, const Atlas& aa,
                                  const Atlas& ab, const Atlas& ac);

// Entry (a, b) is |wit_plus(a, b)|, or infinity above limits.config_cap.
WeightedRelation collapse(const Strategy& st, const Atlas& aa, const Atlas& ab,
                          const Limits& limits = {});
// Throws DimensionMismatch.
WeightedRelation matrix_compose(const WeightedRelation& r, const WeightedRelation& s);

using Rational = boost::rational<std::int64_t>;

struct TheoremEntry {
  int cls_a = 0, cls_c = 0;
  Rational eq[12];  // eq[4] .. eq[11]
  std::size_t compatible = 0;  // sum over B of compatible pairs
  int first_break = 0;         // 0 when all steps agree
};

struct TheoremReport {
  bool holds = true;
  bool deadlock_free = true;
  bool b_representable = true;
  std::vector<TheoremEntry> entries;
  std::string describe_failure() const;
};
TheoremReport check_theorem(const StrategyPtr& sigma, const StrategyPtr& tau,
                            const Atlas& aa, const Atlas& ab, const Atlas& ac);

struct WitComparison {
  int cls_a = 0, cls_c = 0;
  std::size_t composite_classes = 0;  // |wit of tau . sigma|
  std::size_t product_sum = 0;        // sum over B of |wit_sigma| * |wit_tau|
  std::size_t composite_plus = 0;
  std::size_t product_plus_sum = 0;
};
struct WitReport {
  std::vector<WitComparison> rows;
  bool classes_mismatch = false;  // some row with composite != product
  bool plus_agrees = true;
  bool noncanonical_witness = false;  // a wit+ element not sent onto reps
};
WitReport check_wit_vs_witplus(const StrategyPtr& sigma, const StrategyPtr& tau,
                               const Atlas& aa, const Atlas& ab, const Atlas& ac);

}  // namespace cgame
