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
#include <sstream>

#include "cgame/symmetry.hpp"

namespace cgame {

ConfigIso ConfigIso::identity(int n, EventSet x) {
  ConfigIso f;
  f.src = f.dst = x;
  f.img.assign(n, -1);
  for_each_event(x, [&](EventId e) { f.img[e] = e; });
  return f;
}

bool ConfigIso::is_identity() const {
  if (src != dst) return false;
  bool id = true;
  for_each_event(src, [&](EventId e) {
    if (img[e] != e) id = false;
  });
  return id;
}

bool operator<(const ConfigIso& a, const ConfigIso& b) {
  if (a.src != b.src) return lex_less(a.src, b.src);
  if (a.dst != b.dst) return lex_less(a.dst, b.dst);
  return a.img < b.img;
}

ConfigIso compose(const ConfigIso& g, const ConfigIso& f) {
  if (f.dst != g.src) {
    throw Error(ErrorCode::InvalidArgument, "compose: codomain/domain mismatch");
  }
  ConfigIso h;
  h.src = f.src;
  h.dst = g.dst;
  h.img.assign(f.img.size(), -1);
  for_each_event(f.src, [&](EventId e) { h.img[e] = g.img[f.img[e]]; });
  return h;
}

ConfigIso inverse(const ConfigIso& f) {
  ConfigIso h;
  h.src = f.dst;
  h.dst = f.src;
  h.img.assign(f.img.size(), -1);
  for_each_event(f.src, [&](EventId e) { h.img[f.img[e]] = e; });
  return h;
}

ConfigIso restrict_to(const ConfigIso& f, EventSet sub) {
  ConfigIso h;
  h.src = sub;
  h.img.assign(f.img.size(), -1);
  for_each_event(sub, [&](EventId e) {
    h.img[e] = f.img[e];
    h.dst |= bit(f.img[e]);
  });
  return h;
}

bool is_order_iso(const EventStructure& es, const ConfigIso& f) {
  if (static_cast<int>(f.img.size()) != es.size()) return false;
  if (count(f.src) != count(f.dst)) return false;
  EventSet seen = 0;
  bool ok = true;
  for_each_event(f.src, [&](EventId e) {
    EventId t = f.img[e];
    if (t < 0 || t >= es.size() || !has(f.dst, t) || has(seen, t)) {
      ok = false;
      return;
    }
    seen |= bit(t);
    if (es.polarity(e) != es.polarity(t) || es.label(e) != es.label(t)) ok = false;
  });
  if (!ok || seen != f.dst) return false;
  for_each_event(f.src, [&](EventId a) {
    for_each_event(f.src, [&](EventId b) {
      if (es.lt(a, b) != es.lt(f.img[a], f.img[b])) ok = false;
    });
  });
  return ok;
}

std::string format_iso(const EventStructure& es, const ConfigIso& f) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for_each_event(f.src, [&](EventId e) {
    if (!first) out << ", ";
    first = false;
    out << es.name(e) << "->" << es.name(f.img[e]);
  });
  out << '}';
  return out.str();
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::Full: return "full";
    case Flavor::Pos: return "pos";
    case Flavor::Neg: return "neg";
  }
  return "?";
}

SymmetrySpec SymmetrySpec::all() { return SymmetrySpec{}; }

SymmetrySpec SymmetrySpec::identity_only(int n) {
  std::vector<EventId> id(n);
  for (int e = 0; e < n; ++e) id[e] = e;
  return generated({id});
}

SymmetrySpec SymmetrySpec::generated(std::vector<std::vector<EventId>> gens) {
  SymmetrySpec s;
  s.kind = SymKind::MaximalGenerators;
  s.generators = std::move(gens);
  return s;
}

SymmetrySpec SymmetrySpec::rule_based(std::string name, IsoPredicate pred,
                                      PairFilter pf) {
  SymmetrySpec s;
  s.kind = SymKind::RuleBased;
  s.rule = std::move(name);
  s.extra = std::move(pred);
  s.pair_ok = std::move(pf);
  return s;
}

SymmetrySpec SymmetrySpec::derived(std::string node,
                                   std::vector<SymmetrySpec> kids,
                                   IsoPredicate pred, PairFilter pf) {
  SymmetrySpec s;
  s.kind = SymKind::Derived;
  s.rule = std::move(node);
  s.children = std::move(kids);
  s.extra = std::move(pred);
  s.pair_ok = std::move(pf);
  return s;
}

bool SymmetrySpec::pair_allowed(EventId e, EventId f) const {
  if (pair_ok && !pair_ok(e, f)) return false;
  if (kind == SymKind::MaximalGenerators) {
    for (const auto& g : generators)
      if (e < static_cast<EventId>(g.size()) && g[e] == f) return true;
    return false;
  }
  return true;
}

bool SymmetrySpec::admits_unchecked(const ConfigIso& f) const {
  bool ok = true;
  if (pair_ok) {
    for_each_event(f.src, [&](EventId e) {
      if (!pair_ok(e, f.img[e])) ok = false;
    });
    if (!ok) return false;
  }
  switch (kind) {
    case SymKind::AllOrderIsos:
      return true;
    case SymKind::MaximalGenerators:
      for (const auto& g : generators) {
        bool match = true;
        for_each_event(f.src, [&](EventId e) {
          if (e >= static_cast<EventId>(g.size()) || g[e] != f.img[e]) match = false;
        });
        if (match) return true;
      }
      return false;
    case SymKind::RuleBased:
    case SymKind::Derived:
      return !extra || extra(f);
  }
  return false;
}

bool SymmetrySpec::admits(const EventStructure& es, const ConfigIso& f) const {
  return is_order_iso(es, f) && admits_unchecked(f);
}

std::string SymmetrySpec::describe() const {
  switch (kind) {
    case SymKind::AllOrderIsos:
      return "all";
    case SymKind::MaximalGenerators:
      return "generators(" + std::to_string(generators.size()) + ")";
    case SymKind::RuleBased:
      return "rule(" + rule + ")";
    case SymKind::Derived: {
      std::string out = "derived(" + rule;
      for (const auto& c : children) out += ", " + c.describe();
      return out + ")";
    }
  }
  return "?";
}

std::vector<ConfigIso> enumerate_isos(const EventStructure& es,
                                      const SymmetrySpec& spec, EventSet x,
                                      std::optional<EventSet> y,
                                      const Limits& limits,
                                      std::size_t max_results) {
  std::vector<ConfigIso> out;
  if (y && count(*y) != count(x)) return out;
  std::vector<EventId> order;
  for (EventId e : es.topological_order())
    if (has(x, e)) order.push_back(e);
  const int m = static_cast<int>(order.size());
  const int n = es.size();
  EventSet pool = y ? *y : es.all();

  std::vector<EventId> img(n, -1);
  std::vector<EventSet> cand(m + 1, 0);
  const bool use_gens = spec.kind == SymKind::MaximalGenerators;
  std::vector<std::vector<int>> live(m + 1);  // surviving generators
  if (use_gens) {
    for (int g = 0; g < static_cast<int>(spec.generators.size()); ++g)
      live[0].push_back(g);
  }
  std::size_t leaves = 0;
  EventSet used = 0;

  // Candidate targets for order[i] given the assignment of order[0..i).
  auto candidates = [&](int i) {
    EventId e = order[i];
    EventSet want_below = 0;
    for_each_event(es.below(e), [&](EventId p) { want_below |= bit(img[p]); });
    EventSet c = 0;
    for_each_event(pool & ~used, [&](EventId f) {
      if (es.polarity(f) != es.polarity(e) || es.label(f) != es.label(e)) return;
      if (es.below(f) != want_below) return;
      if (!y && (es.conflicts(f) & used)) return;
      if (spec.pair_ok && !spec.pair_ok(e, f)) return;
      c |= bit(f);
    });
    return c;
  };

  if (m == 0) {
    ConfigIso f = ConfigIso::identity(n, 0);
    if (spec.admits_unchecked(f)) out.push_back(f);
    return out;
  }
  int i = 0;
  cand[0] = candidates(0);
  while (i >= 0) {
    if (cand[i] == 0) {
      --i;
      if (i >= 0) {
        used &= ~bit(img[order[i]]);
        img[order[i]] = -1;
      }
      continue;
    }
    EventId f = lowest(cand[i]);
    cand[i] &= cand[i] - 1;
    EventId e = order[i];
    if (use_gens) {
      live[i + 1].clear();
      for (int g : live[i]) {
        const auto& gen = spec.generators[g];
        if (e < static_cast<EventId>(gen.size()) && gen[e] == f) live[i + 1].push_back(g);
      }
      if (live[i + 1].empty()) continue;
    }
    img[e] = f;
    used |= bit(f);
    if (i + 1 == m) {
      if (++leaves > limits.iso_cap) {
        throw Error(ErrorCode::SizeLimitExceeded, "isomorphism search exceeds cap");
      }
      ConfigIso iso;
      iso.src = x;
      iso.dst = used;
      iso.img = img;
      if (spec.admits_unchecked(iso)) {
        out.push_back(std::move(iso));
        if (out.size() >= max_results) return out;
      }
      used &= ~bit(f);
      img[e] = -1;
      continue;
    }
    ++i;
    cand[i] = candidates(i);
    if (cand[i] == 0) {
      // Undo immediately; the loop pops this level next round.
      --i;
      used &= ~bit(f);
      img[e] = -1;
    }
  }
  return out;
}

}  // namespace cgame
