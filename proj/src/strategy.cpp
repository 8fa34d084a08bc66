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
#include <memory>

#include "cgame/strategy.hpp"

namespace cgame {

EventSet Strategy::image(EventSet x) const {
  EventSet out = 0;
  for_each_event(x, [&](EventId e) { out |= bit(label[e]); });
  return out;
}

EventSet Strategy::on_a(EventSet x) const {
  EventSet out = 0;
  for_each_event(x, [&](EventId e) {
    if (label[e] < a_size()) out |= bit(e);
  });
  return out;
}

EventSet Strategy::on_b(EventSet x) const { return x & ~on_a(x); }

EventSet Strategy::proj_a(EventSet x) const {
  EventSet out = 0;
  for_each_event(on_a(x), [&](EventId e) { out |= bit(label[e]); });
  return out;
}

EventSet Strategy::proj_b(EventSet x) const {
  EventSet out = 0;
  for_each_event(on_b(x), [&](EventId e) { out |= bit(b_event(e)); });
  return out;
}

ConfigIso Strategy::push(const ConfigIso& phi) const {
  ConfigIso g;
  g.img.assign(game->es.size(), -1);
  for_each_event(phi.src, [&](EventId e) {
    g.src |= bit(label[e]);
    g.img[label[e]] = label[phi.img[e]];
    g.dst |= bit(label[phi.img[e]]);
  });
  return g;
}

SymmetrySpec induced_symmetry(const TcgPtr& game, std::vector<EventId> label) {
  auto lab = std::make_shared<const std::vector<EventId>>(std::move(label));
  SymmetrySpec full = game->full;
  auto ges = std::shared_ptr<const EventStructure>(game, &game->es);
  PairFilter pf = [lab, full](EventId e, EventId f) {
    return full.pair_allowed((*lab)[e], (*lab)[f]);
  };
  IsoPredicate pred = [lab, full, ges](const ConfigIso& phi) {
    ConfigIso g;
    g.img.assign(ges->size(), -1);
    for_each_event(phi.src, [&](EventId e) {
      g.src |= bit((*lab)[e]);
      g.img[(*lab)[e]] = (*lab)[phi.img[e]];
      g.dst |= bit((*lab)[phi.img[e]]);
    });
    return full.admits(*ges, g);
  };
  return SymmetrySpec::rule_based("induced", std::move(pred), std::move(pf));
}

StrategyPtr make_strategy(std::string name, EventStructure s, TcgPtr a,
                          TcgPtr b, std::vector<EventId> label,
                          std::optional<SymmetrySpec> sym) {
  auto st = std::make_shared<Strategy>();
  st->name = std::move(name);
  st->a = std::move(a);
  st->b = std::move(b);
  st->game = parallel(dual(st->a), st->b);
  if (static_cast<int>(label.size()) != s.size()) {
    throw Error(ErrorCode::DimensionMismatch, "label map does not cover S");
  }
  for (EventId g : label) {
    if (g < 0 || g >= st->game->es.size()) {
      throw Error(ErrorCode::InvalidArgument, "label outside the game");
    }
  }
  st->label = label;
  SymmetrySpec spec = sym ? std::move(*sym) : induced_symmetry(st->game, label);
  int n = s.size();
  st->s = make_tcg(std::move(s), std::move(spec), SymmetrySpec::identity_only(n),
                   SymmetrySpec::identity_only(n), st->name);
  return st;
}

StrategyPtr copycat(const TcgPtr& a) {
  TcgPtr game = parallel(dual(a), a);
  EsSpec s = game->es.spec();
  const int n = a->es.size();
  for (EventId e = 0; e < n; ++e) {
    if (a->es.polarity(e) == Polarity::Positive) {
      s.causality.emplace_back(e, e + n);
    } else {
      s.causality.emplace_back(e + n, e);
    }
  }
  std::vector<EventId> label(2 * n);
  for (int e = 0; e < 2 * n; ++e) label[e] = e;
  return make_strategy("cc(" + a->name + ")", EventStructure::build(s), a, a,
                       std::move(label));
}

ConfigIso join_iso(const ConfigIso& on_a, const ConfigIso& on_b) {
  const int na = static_cast<int>(on_a.img.size());
  ConfigIso g;
  g.img.assign(na + on_b.img.size(), -1);
  for_each_event(on_a.src, [&](EventId e) { g.img[e] = on_a.img[e]; });
  for_each_event(on_b.src, [&](EventId e) { g.img[e + na] = on_b.img[e] + na; });
  g.src = on_a.src | (on_b.src << na);
  g.dst = on_a.dst | (on_b.dst << na);
  return g;
}

ConfigIso part_a(const Strategy& st, const ConfigIso& f) {
  return project_iso(f, 0, st.a_size());
}

ConfigIso part_b(const Strategy& st, const ConfigIso& f) {
  return project_iso(f, st.a_size(), st.b_size());
}

bool StrategyReport::failed(const std::string& axiom) const {
  return std::any_of(issues.begin(), issues.end(),
                     [&](const AxiomIssue& i) { return i.axiom == axiom; });
}

StrategyReport validate_strategy(const Strategy& st, const Limits& limits) {
  StrategyReport r;
  const EventStructure& s = st.es();
  const EventStructure& g = st.game->es;
  auto issue = [&](const std::string& axiom, const std::string& msg) {
    if (!r.failed(axiom)) r.issues.push_back({axiom, msg});
  };

  for (EventId e = 0; e < s.size(); ++e) {
    if (s.polarity(e) != g.polarity(st.label[e])) {
      issue("polarity", s.name(e) + " disagrees with " + g.name(st.label[e]));
    }
  }
  for (auto [p, q] : s.edges()) {
    bool forced = s.polarity(p) == Polarity::Positive ||
                  s.polarity(q) == Polarity::Negative;
    if (forced && !has(g.preds(st.label[q]), st.label[p])) {
      issue("courtesy", s.name(p) + " -> " + s.name(q) + " is not a game link");
    }
  }

  const auto& configs = configurations(*st.s);
  for (EventSet x : configs) {
    EventSet img = st.image(x);
    if (count(img) != count(x)) {
      issue("injectivity", "labels collide on " + format_set(s, x));
      continue;
    }
    if (!g.is_configuration(img)) {
      issue("configuration", format_set(s, x) + " maps outside the game");
      continue;
    }
    for_each_event(g.negative_events() & ~img, [&](EventId n) {
      if (!g.is_configuration(img | bit(n))) return;
      int matches = 0;
      for_each_event(s.all() & ~x, [&](EventId e) {
        if (st.label[e] == n && s.is_configuration(x | bit(e))) ++matches;
      });
      if (matches != 1) {
        issue("receptivity", format_set(s, x) + " answers " + g.name(n) + " " +
                                 std::to_string(matches) + " times");
      }
    });
  }
  if (r.failed("configuration") || r.failed("injectivity")) return r;

  for (EventSet x : configs) {
    for (const auto& phi : symmetries_from(*st.s, Flavor::Full, x, limits)) {
      ConfigIso img = st.push(phi);
      if (!st.game->full.admits(g, img)) {
        issue("symmetry", format_iso(s, phi) + " is not sent to a symmetry");
        continue;
      }
      if (!phi.is_identity() && st.game->pos.admits(g, img)) {
        issue("thinness", format_iso(s, phi) + " is sent to a positive symmetry");
      }
    }
  }
  if (r.failed("symmetry")) return r;

  for (EventSet x : configs) {
    EventSet img = st.image(x);
    for (const auto& neg : symmetries_from(*st.game, Flavor::Neg, img, limits)) {
      std::size_t found = 0;
      ConfigIso neg_inv = inverse(neg);
      for (const auto& phi : symmetries_from(*st.s, Flavor::Full, x, limits)) {
        if (st.game->pos.admits(g, compose(st.push(phi), neg_inv))) ++found;
      }
      if (found != 1) {
        issue("sym-receptivity", format_iso(g, neg) + " lifts " +
                                     std::to_string(found) + " times from " +
                                     format_set(s, x));
      }
    }
  }
  return r;
}

NegativeAction negative_action(const Strategy& st, EventSet xs,
                               const ConfigIso& theta_neg) {
  const EventStructure& g = st.game->es;
  if (theta_neg.src != st.image(xs)) {
    throw Error(ErrorCode::InvalidArgument, "negative symmetry does not start at sigma x");
  }
  ConfigIso inv = inverse(theta_neg);
  std::vector<NegativeAction> found;
  for (const auto& phi : symmetries_from(*st.s, Flavor::Full, xs)) {
    ConfigIso pos = compose(st.push(phi), inv);
    if (st.game->pos.admits(g, pos)) found.push_back({phi, phi.dst, std::move(pos)});
  }
  if (found.empty()) {
    throw Error(ErrorCode::NoSolution, "no lift of " + format_iso(g, theta_neg));
  }
  if (found.size() > 1) {
    throw Error(ErrorCode::NonUnique, std::to_string(found.size()) + " lifts of " +
                                          format_iso(g, theta_neg));
  }
  return std::move(found.front());
}

PosWitness act(const Strategy& st, const ConfigIso& phi_neg, const PosWitness& w) {
  Factorization xi = factorize(*st.game, compose(phi_neg, w.theta_pos));
  NegativeAction na = negative_action(st, w.xs, xi.neg);
  return PosWitness{na.ys, compose(xi.pos, inverse(na.theta_pos))};
}

ActionReport check_group_action(const Strategy& st, EventSet rep) {
  ActionReport r;
  const Tcg& game = *st.game;
  std::vector<PosWitness> wits;
  for (EventSet x : configurations(*st.s)) {
    if (!is_plus_covered(st.es(), x)) continue;
    for (auto& th : enumerate_symmetries(game, Flavor::Pos, st.image(x), rep))
      wits.push_back({x, std::move(th)});
  }
  auto group = endo_group(game, Flavor::Neg, rep).elements;
  auto fail = [&](const std::string& why) {
    r.ok = false;
    r.failure = why;
    return r;
  };
  ConfigIso id = ConfigIso::identity(game.es.size(), rep);
  for (const auto& w : wits) {
    if (!(act(st, id, w) == w)) return fail("identity acts non-trivially");
    for (const auto& p : group) {
      PosWitness v = act(st, p, w);
      if (v.theta_pos.src != st.image(v.xs) || !in_family(game, Flavor::Pos, v.theta_pos)) {
        return fail("action leaves the witness set");
      }
      // Commuting square: phi_neg o theta_pos = psi_pos o sigma phi.
      bool square = false;
      for (const auto& phi : enumerate_isos(st.es(), st.sym(), w.xs, v.xs)) {
        if (compose(p, w.theta_pos) == compose(v.theta_pos, st.push(phi))) square = true;
      }
      if (!square) return fail("square does not commute");
      for (const auto& q : group) {
        if (!(act(st, compose(q, p), w) == act(st, q, v))) {
          return fail("action is not compatible with composition");
        }
      }
      ++r.checked;
    }
  }
  return r;
}

}  // namespace cgame
