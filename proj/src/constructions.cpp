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

#include "cgame/constructions.hpp"

#include <memory>
#include <set>

namespace cgame {

namespace {

// Appends src to dst with every name passed through rename.
template <typename Rename>
int append_spec(EsSpec& dst, const EsSpec& src, bool flip_pol, Rename rename) {
  int off = dst.size();
  for (int e = 0; e < src.size(); ++e) {
    Polarity p = flip_pol ? flip(src.polarity[e]) : src.polarity[e];
    dst.add(p, src.label[e], rename(src.name[e]));
  }
  for (auto [a, b] : src.causality) dst.causality.emplace_back(a + off, b + off);
  for (auto [a, b] : src.conflict) dst.conflict.emplace_back(a + off, b + off);
  return off;
}

bool names_clash(const std::vector<const EventStructure*>& parts) {
  std::set<std::string> seen;
  for (const auto* es : parts)
    for (int e = 0; e < es->size(); ++e)
      if (!seen.insert(es->name(e)).second) return true;
  return false;
}

std::string game_name(const TcgPtr& g) {
  return g->name.empty() ? std::string("?") : g->name;
}

EventSet block(int offset, int size) {
  if (size == 0) return 0;
  EventSet s = size >= 64 ? ~EventSet{0} : (bit(size) - 1);
  return s << offset;
}

}  // namespace

ConfigIso project_iso(const ConfigIso& f, int offset, int size) {
  ConfigIso g;
  g.img.assign(size, -1);
  EventSet mask = block(offset, size);
  for_each_event(f.src & mask, [&](EventId e) {
    g.src |= bit(e - offset);
    g.img[e - offset] = f.img[e] - offset;
    g.dst |= bit(f.img[e] - offset);
  });
  return g;
}

SymmetrySpec lift_parts(const std::string& node, std::vector<SpecPart> parts) {
  auto shared = std::make_shared<const std::vector<SpecPart>>(parts);
  auto part_of = [shared](EventId e) {
    for (int i = 0; i < static_cast<int>(shared->size()); ++i) {
      const auto& p = (*shared)[i];
      if (e >= p.offset && e < p.offset + p.size) return i;
    }
    return -1;
  };
  PairFilter pf = [shared, part_of](EventId e, EventId f) {
    int i = part_of(e);
    if (i != part_of(f)) return false;
    if (i < 0) return e == f;
    const auto& p = (*shared)[i];
    return p.spec.pair_allowed(e - p.offset, f - p.offset);
  };
  IsoPredicate pred = [shared, pf](const ConfigIso& f) {
    bool ok = true;
    for_each_event(f.src, [&](EventId e) {
      if (!pf(e, f.img[e])) ok = false;
    });
    if (!ok) return false;
    for (const auto& p : *shared) {
      ConfigIso g = project_iso(f, p.offset, p.size);
      if (!p.spec.admits_unchecked(g)) return false;
    }
    return true;
  };
  std::vector<SymmetrySpec> kids;
  for (auto& p : parts) kids.push_back(p.spec);
  return SymmetrySpec::derived(node, std::move(kids), std::move(pred), std::move(pf));
}

Arena make_arena(const EventStructure& es) {
  for (int e = 0; e < es.size(); ++e) {
    if (count(es.preds(e)) > 1 || es.conflicts(e) != 0) {
      throw Error(ErrorCode::NotForestial,
                  "event " + es.name(e) + " breaks the forest shape");
    }
  }
  return Arena{es};
}

CopyBound CopyBound::uniform(int k) { return CopyBound{{k}}; }

int CopyBound::at(int depth) const {
  if (per_depth.empty()) throw Error(ErrorCode::InvalidArgument, "empty copy bound");
  int k = depth < static_cast<int>(per_depth.size()) ? per_depth[depth]
                                                     : per_depth.back();
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "copy bound must be >= 1");
  return k;
}

bool is_negative(const EventStructure& es) {
  return (es.minimal_events() & es.positive_events()) == 0;
}

TcgPtr empty_game() { return make_rigid_tcg(EventStructure::build({}), "empty"); }

TcgPtr single_event(Polarity p, const std::string& label, const std::string& name) {
  EsSpec s;
  s.add(p, label, name.empty() ? label : name);
  return make_rigid_tcg(EventStructure::build(s),
                        std::string(1, polarity_char(p)) + label);
}

TcgPtr dual(const TcgPtr& a) {
  EsSpec s;
  append_spec(s, a->es.spec(), true, [](const std::string& n) { return n; });
  return make_tcg(EventStructure::build(s), a->full, a->neg, a->pos,
                  "dual(" + game_name(a) + ")");
}

TcgPtr parallel(const TcgPtr& a, const TcgPtr& b) {
  bool clash = names_clash({&a->es, &b->es});
  EsSpec s;
  int offa = append_spec(s, a->es.spec(), false, [&](const std::string& n) {
    return clash ? "L." + n : n;
  });
  int offb = append_spec(s, b->es.spec(), false, [&](const std::string& n) {
    return clash ? "R." + n : n;
  });
  int na = a->es.size(), nb = b->es.size();
  auto fam = [&](Flavor f) {
    return lift_parts("par", {{offa, na, a->family(f)}, {offb, nb, b->family(f)}});
  };
  return make_tcg(EventStructure::build(s), fam(Flavor::Full), fam(Flavor::Pos),
                  fam(Flavor::Neg),
                  "par(" + game_name(a) + "," + game_name(b) + ")");
}

TcgPtr bang_ajm(const TcgPtr& n, const CopyBound& bound) {
  if (!is_negative(n->es)) {
    throw Error(ErrorCode::NotNegative, "bang_ajm needs a negative game");
  }
  const int k = bound.at(0);
  const int m = n->es.size();
  if (k * m > kMaxEvents) {
    throw Error(ErrorCode::SizeLimitExceeded, "bang_ajm exceeds 64 events");
  }
  EsSpec s;
  EsSpec base = n->es.spec();
  for (int i = 0; i < k; ++i) {
    append_spec(s, base, false, [&](const std::string& nm) {
      return nm + "[" + std::to_string(i) + "]";
    });
  }
  // Each copy with events in the domain lands in a single copy, injectively;
  // with preserve_copy it must land in itself.
  auto fam = [n, k, m](Flavor fl, bool preserve_copy) {
    SymmetrySpec child = n->family(fl);
    PairFilter pf = [child, m, preserve_copy](EventId e, EventId f) {
      if (preserve_copy && e / m != f / m) return false;
      return child.pair_allowed(e % m, f % m);
    };
    IsoPredicate pred = [child, k, m, preserve_copy](const ConfigIso& f) {
      std::vector<int> target(k, -1);
      EventSet used_targets = 0;
      for (int i = 0; i < k; ++i) {
        EventSet part = f.src & block(i * m, m);
        if (part == 0) continue;
        int t = f.img[lowest(part)] / m;
        bool same = true;
        for_each_event(part, [&](EventId e) {
          if (f.img[e] / m != t) same = false;
        });
        if (!same || has(used_targets, t)) return false;
        if (preserve_copy && t != i) return false;
        used_targets |= bit(t);
        ConfigIso g;
        g.img.assign(m, -1);
        for_each_event(part, [&](EventId e) {
          g.src |= bit(e - i * m);
          g.img[e - i * m] = f.img[e] - t * m;
          g.dst |= bit(f.img[e] - t * m);
        });
        if (!child.admits_unchecked(g)) return false;
      }
      return true;
    };
    return SymmetrySpec::derived(preserve_copy ? "bang_ajm_pos" : "bang_ajm",
                                 {child}, std::move(pred), std::move(pf));
  };
  return make_tcg(EventStructure::build(s), fam(Flavor::Full, false),
                  fam(Flavor::Pos, true), fam(Flavor::Neg, false),
                  "bang_ajm(" + game_name(n) + "," + std::to_string(k) + ")");
}

TcgPtr bang_ho(const Arena& a, const CopyBound& bound) {
  const EventStructure& ar = a.es;
  EsSpec s;
  std::vector<int> own;  // last copy index of each event
  struct Frame {
    EventId move;
    int depth;
    EventId parent;
    std::vector<int> idx;
  };
  std::vector<Frame> stack;
  for (EventId r : ar.topological_order()) {
    if (ar.preds(r) != 0) continue;
    stack.push_back({r, 0, -1, {}});
  }
  // Depth-first, emitting roots and copies in increasing order.
  std::vector<Frame> work(stack.rbegin(), stack.rend());
  while (!work.empty()) {
    Frame fr = work.back();
    work.pop_back();
    const int k = bound.at(fr.depth);
    std::vector<Frame> next;
    for (int i = 0; i < k; ++i) {
      std::vector<int> idx = fr.idx;
      idx.push_back(i);
      std::string nm = ar.name(fr.move) + "(";
      for (std::size_t j = 0; j < idx.size(); ++j) {
        nm += (j ? "," : "") + std::to_string(idx[j]);
      }
      nm += ")";
      if (s.size() >= kMaxEvents) {
        throw Error(ErrorCode::SizeLimitExceeded, "bang_ho exceeds 64 events");
      }
      EventId e = s.add(ar.polarity(fr.move), ar.name(fr.move), nm);
      own.push_back(i);
      if (fr.parent >= 0) s.causality.emplace_back(fr.parent, e);
      for_each_event(ar.succs(fr.move), [&](EventId c) {
        next.push_back({c, fr.depth + 1, e, idx});
      });
    }
    for (auto it = next.rbegin(); it != next.rend(); ++it) work.push_back(*it);
  }
  auto es = EventStructure::build(s);
  auto own_p = std::make_shared<const std::vector<int>>(own);
  auto pol = std::make_shared<std::vector<Polarity>>();
  for (int e = 0; e < es.size(); ++e) pol->push_back(es.polarity(e));
  // Keeps the own index of events of the given polarity.
  auto keeping = [own_p, pol](Polarity fixed, const std::string& rule) {
    PairFilter pf = [own_p, pol, fixed](EventId e, EventId f) {
      return (*pol)[e] != fixed || (*own_p)[e] == (*own_p)[f];
    };
    IsoPredicate pred = [pf](const ConfigIso& f) {
      bool ok = true;
      for_each_event(f.src, [&](EventId e) {
        if (!pf(e, f.img[e])) ok = false;
      });
      return ok;
    };
    return SymmetrySpec::rule_based(rule, pred, pf);
  };
  std::string bname = "bang_ho(";
  for (std::size_t j = 0; j < bound.per_depth.size(); ++j) {
    bname += (j ? "," : "") + std::to_string(bound.per_depth[j]);
  }
  return make_tcg(es, SymmetrySpec::rule_based("ho_full", {}),
                  keeping(Polarity::Negative, "ho_pos"),
                  keeping(Polarity::Positive, "ho_neg"), bname + ")");
}

namespace {

TcgPtr shift(const TcgPtr& a, Polarity p, const std::string& tag) {
  EsSpec s;
  EventId root = s.add(p, tag, tag);
  bool clash = a->es.find(tag) >= 0;
  int off = append_spec(s, a->es.spec(), false, [&](const std::string& n) {
    return clash ? "A." + n : n;
  });
  for_each_event(a->es.minimal_events(), [&](EventId e) {
    s.causality.emplace_back(root, e + off);
  });
  int n = a->es.size();
  auto fam = [&](Flavor f) { return lift_parts(tag, {{off, n, a->family(f)}}); };
  return make_tcg(EventStructure::build(s), fam(Flavor::Full), fam(Flavor::Pos),
                  fam(Flavor::Neg), tag + "(" + game_name(a) + ")");
}

}  // namespace

TcgPtr shift_up(const TcgPtr& a) { return shift(a, Polarity::Negative, "up"); }
TcgPtr shift_down(const TcgPtr& a) { return shift(a, Polarity::Positive, "down"); }

TcgPtr sum(const std::vector<TcgPtr>& parts) {
  std::vector<const EventStructure*> ess;
  for (const auto& p : parts) ess.push_back(&p->es);
  bool clash = names_clash(ess);
  EsSpec s;
  std::vector<int> offs;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    offs.push_back(append_spec(s, parts[i]->es.spec(), false, [&](const std::string& n) {
      return clash ? std::to_string(i) + "." + n : n;
    }));
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      for_each_event(parts[i]->es.minimal_events(), [&](EventId a) {
        for_each_event(parts[j]->es.minimal_events(), [&](EventId b) {
          s.conflict.emplace_back(a + offs[i], b + offs[j]);
        });
      });
    }
  }
  auto fam = [&](Flavor f) {
    std::vector<SpecPart> ps;
    for (std::size_t i = 0; i < parts.size(); ++i)
      ps.push_back({offs[i], parts[i]->es.size(), parts[i]->family(f)});
    return lift_parts("sum", std::move(ps));
  };
  std::string nm = "sum(";
  for (std::size_t i = 0; i < parts.size(); ++i)
    nm += (i ? "," : "") + game_name(parts[i]);
  return make_tcg(EventStructure::build(s), fam(Flavor::Full), fam(Flavor::Pos),
                  fam(Flavor::Neg), nm + ")");
}

TcgPtr linear_arrow(const TcgPtr& m, const TcgPtr& n) {
  if (!is_negative(m->es) || !is_negative(n->es)) {
    throw Error(ErrorCode::NotNegative, "linear_arrow needs negative games");
  }
  EventSet mins = n->es.minimal_events();
  if (count(mins) > 1) {
    throw Error(ErrorCode::ArityMismatch,
                "linear_arrow needs at most one minimal event on the right");
  }
  if (mins == 0) return empty_game();
  bool clash = names_clash({&m->es, &n->es});
  EsSpec s;
  int offm = append_spec(s, m->es.spec(), true, [&](const std::string& x) {
    return clash ? "L." + x : x;
  });
  int offn = append_spec(s, n->es.spec(), false, [&](const std::string& x) {
    return clash ? "R." + x : x;
  });
  EventId top = lowest(mins) + offn;
  for_each_event(m->es.minimal_events(), [&](EventId e) {
    s.causality.emplace_back(top, e + offm);
  });
  int nm = m->es.size(), nn = n->es.size();
  auto fam = [&](Flavor left, Flavor right) {
    return lift_parts("arrow", {{offm, nm, m->family(left)}, {offn, nn, n->family(right)}});
  };
  return make_tcg(EventStructure::build(s), fam(Flavor::Full, Flavor::Full),
                  fam(Flavor::Neg, Flavor::Pos), fam(Flavor::Pos, Flavor::Neg),
                  "arrow(" + game_name(m) + "," + game_name(n) + ")");
}

}  // namespace cgame
