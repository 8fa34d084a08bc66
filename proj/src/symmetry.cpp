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

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>

#include "cgame/symmetry.hpp"

namespace cgame {
namespace detail {

struct GameCache {
  std::once_flag configs_once;
  std::vector<EventSet> configs;

  std::once_flag classes_once;
  std::vector<SymmetryClass> classes;
  std::unordered_map<EventSet, int> class_of;
  bool representable = true;

  std::mutex mu;
  std::unordered_map<EventSet, std::vector<ConfigIso>> from[3];
  std::unordered_map<EventSet, bool> canonical;
};

}  // namespace detail

namespace {

detail::GameCache& cache_of(const Tcg& game) {
  if (!game.cache) {
    throw Error(ErrorCode::InvalidArgument, "game built without make_tcg");
  }
  return *game.cache;
}

// Invariant of a configuration under order-isos: per event, its polarity,
// label and the sizes of its strict down- and up-sets inside x.
std::string shape_key(const EventStructure& es, EventSet x) {
  std::vector<std::string> parts;
  for_each_event(x, [&](EventId e) {
    parts.push_back(std::string(1, polarity_char(es.polarity(e))) + es.label(e) +
                    "/" + std::to_string(count(es.below(e))) + "/" +
                    std::to_string(count(es.above(e) & x)));
  });
  std::sort(parts.begin(), parts.end());
  std::string key;
  for (const auto& p : parts) key += p + "|";
  return key;
}

FamilyReport violation(std::string what, std::optional<ConfigIso> a,
                       std::optional<ConfigIso> b = std::nullopt) {
  FamilyReport r;
  r.ok = false;
  r.violation = std::move(what);
  r.first = std::move(a);
  r.second = std::move(b);
  return r;
}

}  // namespace

const SymmetrySpec& Tcg::family(Flavor f) const {
  switch (f) {
    case Flavor::Pos: return pos;
    case Flavor::Neg: return neg;
    case Flavor::Full: break;
  }
  return full;
}

TcgPtr make_tcg(EventStructure es, SymmetrySpec full, SymmetrySpec pos,
                SymmetrySpec neg, std::string name) {
  auto g = std::make_shared<Tcg>();
  g->name = std::move(name);
  g->es = std::move(es);
  g->full = std::move(full);
  g->pos = std::move(pos);
  g->neg = std::move(neg);
  g->cache = std::make_shared<detail::GameCache>();
  return g;
}

TcgPtr make_rigid_tcg(EventStructure es, std::string name) {
  int n = es.size();
  return make_tcg(std::move(es), SymmetrySpec::all(),
                  SymmetrySpec::identity_only(n), SymmetrySpec::identity_only(n),
                  std::move(name));
}

const std::vector<EventSet>& configurations(const Tcg& game) {
  auto& c = cache_of(game);
  std::call_once(c.configs_once,
                 [&] { c.configs = enumerate_configurations(game.es); });
  return c.configs;
}

const std::vector<ConfigIso>& symmetries_from(const Tcg& game, Flavor flavor,
                                              EventSet x, const Limits& limits) {
  auto& c = cache_of(game);
  auto& table = c.from[static_cast<int>(flavor)];
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = table.find(x);
    if (it != table.end()) return it->second;
  }
  auto isos = enumerate_isos(game.es, game.family(flavor), x, std::nullopt, limits);
  std::sort(isos.begin(), isos.end());
  std::lock_guard<std::mutex> lock(c.mu);
  return table.try_emplace(x, std::move(isos)).first->second;
}

std::vector<ConfigIso> enumerate_symmetries(const Tcg& game, Flavor flavor,
                                            EventSet x, EventSet y,
                                            const Limits& limits) {
  std::vector<ConfigIso> out;
  for (const auto& f : symmetries_from(game, flavor, x, limits))
    if (f.dst == y) out.push_back(f);
  return out;
}

std::optional<ConfigIso> first_symmetry(const Tcg& game, Flavor flavor,
                                        EventSet x, EventSet y) {
  auto r = enumerate_isos(game.es, game.family(flavor), x, y, {}, 1);
  if (r.empty()) return std::nullopt;
  return r.front();
}

bool are_symmetric(const Tcg& game, Flavor flavor, EventSet x, EventSet y) {
  return first_symmetry(game, flavor, x, y).has_value();
}

bool in_family(const Tcg& game, Flavor flavor, const ConfigIso& f) {
  return game.es.is_configuration(f.src) && game.es.is_configuration(f.dst) &&
         game.family(flavor).admits(game.es, f);
}

FamilyReport check_family_axioms(const Tcg& game, const Limits& limits) {
  const auto& configs = configurations(game);
  const int n = game.es.size();
  for (Flavor fl : {Flavor::Full, Flavor::Pos, Flavor::Neg}) {
    const std::string tag = flavor_name(fl);
    for (EventSet x : configs) {
      ConfigIso id = ConfigIso::identity(n, x);
      if (!in_family(game, fl, id)) return violation(tag + ": missing identity", id);
      for (const auto& f : symmetries_from(game, fl, x, limits)) {
        if (fl != Flavor::Full && !in_family(game, Flavor::Full, f)) {
          return violation(tag + ": not included in full family", f);
        }
        ConfigIso inv = inverse(f);
        if (!in_family(game, fl, inv)) return violation(tag + ": inverse missing", f, inv);
        for (const auto& g : symmetries_from(game, fl, f.dst, limits)) {
          ConfigIso h = compose(g, f);
          if (!in_family(game, fl, h)) {
            return violation(tag + ": composite missing", f, g);
          }
        }
        for (EventSet sub : configs) {
          if ((sub & ~x) != 0 || sub == x) continue;
          ConfigIso r = restrict_to(f, sub);
          if (!game.es.is_configuration(r.dst) || !in_family(game, fl, r)) {
            return violation(tag + ": restriction missing", f, r);
          }
        }
      }
    }
  }
  return {};
}

FamilyReport check_polar_intersection(const Tcg& game, const Limits& limits) {
  for (EventSet x : configurations(game)) {
    for (const auto& f : symmetries_from(game, Flavor::Pos, x, limits)) {
      if (!f.is_identity() && in_family(game, Flavor::Neg, f)) {
        return violation("positive and negative share a non-identity", f);
      }
    }
  }
  return {};
}

std::vector<Factorization> all_factorizations(const Tcg& game,
                                              const ConfigIso& f) {
  std::vector<Factorization> out;
  for (const auto& neg : symmetries_from(game, Flavor::Neg, f.src)) {
    ConfigIso pos = compose(f, inverse(neg));
    if (game.family(Flavor::Pos).admits(game.es, pos)) {
      out.push_back(Factorization{neg, neg.dst, std::move(pos)});
    }
  }
  return out;
}

Factorization factorize(const Tcg& game, const ConfigIso& f) {
  auto all = all_factorizations(game, f);
  if (all.empty()) {
    throw Error(ErrorCode::NoFactorization,
                "no polar factorization of " + format_iso(game.es, f));
  }
  if (all.size() > 1) {
    throw Error(ErrorCode::NonUniqueFactorization,
                std::to_string(all.size()) + " polar factorizations of " +
                    format_iso(game.es, f));
  }
  return std::move(all.front());
}

FamilyReport check_factorization(const Tcg& game, const Limits& limits) {
  for (EventSet x : configurations(game)) {
    for (const auto& f : symmetries_from(game, Flavor::Full, x, limits)) {
      auto all = all_factorizations(game, f);
      if (all.size() != 1) {
        FamilyReport r = violation(
            all.empty() ? "no factorization" : "non-unique factorization", f);
        if (all.size() > 1) r.second = all[1].neg;
        return r;
      }
    }
  }
  return {};
}

bool is_canonical(const Tcg& game, EventSet x) {
  auto& c = cache_of(game);
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.canonical.find(x);
    if (it != c.canonical.end()) return it->second;
  }
  bool ok = true;
  for (const auto& f : enumerate_symmetries(game, Flavor::Full, x, x)) {
    auto all = all_factorizations(game, f);
    if (all.size() != 1 || all.front().mid != x) {
      ok = false;
      break;
    }
  }
  std::lock_guard<std::mutex> lock(c.mu);
  c.canonical.emplace(x, ok);
  return ok;
}

const std::vector<SymmetryClass>& symmetry_classes(const Tcg& game) {
  auto& c = cache_of(game);
  std::call_once(c.classes_once, [&] {
    std::vector<SymmetryClass> classes;
    std::unordered_map<EventSet, int> class_of;
    std::map<std::string, std::vector<int>> buckets;
    for (EventSet x : configurations(game)) {
      auto& bucket = buckets[shape_key(game.es, x)];
      int found = -1;
      for (int k : bucket) {
        if (are_symmetric(game, Flavor::Full, classes[k].members.front(), x)) {
          found = k;
          break;
        }
      }
      if (found < 0) {
        found = static_cast<int>(classes.size());
        classes.emplace_back();
        bucket.push_back(found);
      }
      classes[found].members.push_back(x);
      class_of[x] = found;
    }
    bool representable = true;
    for (auto& cls : classes) {
      for (EventSet x : cls.members)
        if (is_canonical(game, x)) cls.canonical_members.push_back(x);
      if (cls.canonical_members.empty()) representable = false;
    }
    for (auto& cls : classes) {
      cls.chosen_rep = representable ? cls.canonical_members.front()
                                     : cls.members.front();
    }
    c.classes = std::move(classes);
    c.class_of = std::move(class_of);
    c.representable = representable;
  });
  return c.classes;
}

int class_index(const Tcg& game, EventSet x) {
  symmetry_classes(game);
  const auto& m = game.cache->class_of;
  auto it = m.find(x);
  return it == m.end() ? -1 : it->second;
}

Representability is_representable(const Tcg& game) {
  Representability r;
  const auto& classes = symmetry_classes(game);
  r.representable = game.cache->representable;
  for (int k = 0; k < static_cast<int>(classes.size()); ++k) {
    const auto& cls = classes[k];
    if (cls.canonical_members.empty()) {
      r.classes_without_canonical.push_back(k);
      r.reps.push_back(cls.members.front());
    } else {
      r.reps.push_back(cls.canonical_members.front());
    }
  }
  return r;
}

EndoGroup endo_group(const Tcg& game, Flavor flavor, EventSet x) {
  EndoGroup g;
  g.base = x;
  g.flavor = flavor;
  g.elements = enumerate_symmetries(game, flavor, x, x);
  return g;
}

bool is_group(const EndoGroup& g) {
  if (g.elements.empty()) return false;
  std::vector<ConfigIso> sorted = g.elements;
  std::sort(sorted.begin(), sorted.end());
  auto contains = [&](const ConfigIso& f) {
    return std::binary_search(sorted.begin(), sorted.end(), f);
  };
  int n = static_cast<int>(sorted.front().img.size());
  if (!contains(ConfigIso::identity(n, g.base))) return false;
  for (const auto& a : sorted) {
    if (a.src != g.base || a.dst != g.base) return false;
    if (!contains(inverse(a))) return false;
    for (const auto& b : sorted)
      if (!contains(compose(a, b))) return false;
  }
  return true;
}

}  // namespace cgame
