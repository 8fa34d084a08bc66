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
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgame/event_structure.hpp"

namespace cgame {

// A bijection between two configurations of the same structure. img is
// indexed by event id and holds -1 outside src.
struct ConfigIso {
  EventSet src = 0;
  EventSet dst = 0;
  std::vector<EventId> img;

  EventId operator()(EventId e) const { return img[e]; }
  static ConfigIso identity(int n, EventSet x);
  bool is_identity() const;

  friend bool operator==(const ConfigIso&, const ConfigIso&) = default;
  friend bool operator<(const ConfigIso& a, const ConfigIso& b);
};

ConfigIso compose(const ConfigIso& g, const ConfigIso& f);  // g after f
ConfigIso inverse(const ConfigIso& f);
ConfigIso restrict_to(const ConfigIso& f, EventSet sub);
// Polarity, label and order preserving in both directions.
bool is_order_iso(const EventStructure& es, const ConfigIso& f);
std::string format_iso(const EventStructure& es, const ConfigIso& f);

enum class Flavor { Full, Pos, Neg };
const char* flavor_name(Flavor f);

using IsoPredicate = std::function<bool(const ConfigIso&)>;
// Necessary condition on single pairs e -> f, used to prune search.
using PairFilter = std::function<bool(EventId, EventId)>;

enum class SymKind { AllOrderIsos, MaximalGenerators, RuleBased, Derived };

// Extensional description of an isomorphism family. Membership is always
// "order-iso preserving polarity and label" plus the kind-specific test.
struct SymmetrySpec {
  SymKind kind = SymKind::AllOrderIsos;
  // MaximalGenerators: maps over all events, -1 where undefined. An iso is in
  // the family when it agrees with one generator on its whole domain.
  std::vector<std::vector<EventId>> generators;
  // RuleBased: rule name; Derived: construction node name.
  std::string rule;
  std::vector<SymmetrySpec> children;
  IsoPredicate extra;
  PairFilter pair_ok;

  static SymmetrySpec all();
  static SymmetrySpec identity_only(int n);
  static SymmetrySpec generated(std::vector<std::vector<EventId>> gens);
  static SymmetrySpec rule_based(std::string name, IsoPredicate pred,
                                 PairFilter pf = {});
  static SymmetrySpec derived(std::string node, std::vector<SymmetrySpec> kids,
                              IsoPredicate pred, PairFilter pf = {});

  bool admits(const EventStructure& es, const ConfigIso& f) const;
  // Kind-specific test only; assumes f is an order-iso.
  bool admits_unchecked(const ConfigIso& f) const;
  bool pair_allowed(EventId e, EventId f) const;
  std::string describe() const;
};

namespace detail {
struct GameCache;
}

// A thin concurrent game: an event structure and three iso families.
struct Tcg {
  std::string name;
  EventStructure es;
  SymmetrySpec full, pos, neg;
  std::shared_ptr<detail::GameCache> cache;

  const SymmetrySpec& family(Flavor f) const;
};
using TcgPtr = std::shared_ptr<const Tcg>;

TcgPtr make_tcg(EventStructure es, SymmetrySpec full, SymmetrySpec pos,
                SymmetrySpec neg, std::string name = {});
// Full = all order-isos, polar families trivial.
TcgPtr make_rigid_tcg(EventStructure es, std::string name = {});

// Cached list of all configurations.
const std::vector<EventSet>& configurations(const Tcg& game);

// Generic enumeration of isos x -> y (or x -> any configuration when y is
// empty) within a family, in a deterministic order.
std::vector<ConfigIso> enumerate_isos(const EventStructure& es,
                                      const SymmetrySpec& spec, EventSet x,
                                      std::optional<EventSet> y,
                                      const Limits& limits = {},
                                      std::size_t max_results =
                                          std::numeric_limits<std::size_t>::max());

std::vector<ConfigIso> enumerate_symmetries(const Tcg& game, Flavor flavor,
                                            EventSet x, EventSet y,
                                            const Limits& limits = {});
// Memoized per game; the reference stays valid while the game lives.
const std::vector<ConfigIso>& symmetries_from(const Tcg& game, Flavor flavor,
                                              EventSet x,
                                              const Limits& limits = {});
std::optional<ConfigIso> first_symmetry(const Tcg& game, Flavor flavor,
                                        EventSet x, EventSet y);
bool are_symmetric(const Tcg& game, Flavor flavor, EventSet x, EventSet y);
bool in_family(const Tcg& game, Flavor flavor, const ConfigIso& f);

struct FamilyReport {
  bool ok = true;
  std::string violation;
  std::optional<ConfigIso> first;
  std::optional<ConfigIso> second;
};
// Identity, inverse, composition and restriction closure for each family,
// plus inclusion of the polar families in the full one.
FamilyReport check_family_axioms(const Tcg& game, const Limits& limits = {});
// Positive and negative symmetries share only identities.
FamilyReport check_polar_intersection(const Tcg& game,
                                      const Limits& limits = {});

struct Factorization {
  ConfigIso neg;  // x -> mid
  EventSet mid = 0;
  ConfigIso pos;  // mid -> y
};
// All ways of writing f = pos o neg.
std::vector<Factorization> all_factorizations(const Tcg& game,
                                              const ConfigIso& f);
// Throws NoFactorization / NonUniqueFactorization.
Factorization factorize(const Tcg& game, const ConfigIso& f);
// Checks unique factorization of every full symmetry of the game.
FamilyReport check_factorization(const Tcg& game, const Limits& limits = {});

bool is_canonical(const Tcg& game, EventSet x);

struct SymmetryClass {
  std::vector<EventSet> members;  // lex order
  std::vector<EventSet> canonical_members;
  EventSet chosen_rep = 0;
};

// Partition of all configurations by full symmetry. Classes are ordered by
// their least member; chosen_rep is the least canonical member when the game
// is representable and the least member otherwise.
const std::vector<SymmetryClass>& symmetry_classes(const Tcg& game);
int class_index(const Tcg& game, EventSet x);

struct Representability {
  bool representable = true;
  std::vector<EventSet> reps;           // per class; canonical when available
  std::vector<int> classes_without_canonical;
};
Representability is_representable(const Tcg& game);

struct EndoGroup {
  EventSet base = 0;
  Flavor flavor = Flavor::Full;
  std::vector<ConfigIso> elements;
  std::size_t size() const { return elements.size(); }
};
EndoGroup endo_group(const Tcg& game, Flavor flavor, EventSet x);
// True when elements contain the identity and are closed under composition
// and inverse.
bool is_group(const EndoGroup& g);

}  // namespace cgame
