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
#include <deque>
#include <map>
#include <set>

#include <boost/container_hash/hash.hpp>

#include "cgame/strategy.hpp"

namespace cgame {

std::size_t StateHash::operator()(const InteractionState& s) const {
  std::size_t h = 0;
  boost::hash_combine(h, s.xs);
  boost::hash_combine(h, s.xt);
  return h;
}

namespace {

void check_middle(const Strategy& sigma, const Strategy& tau) {
  const EventStructure& b1 = sigma.b->es;
  const EventStructure& b2 = tau.a->es;
  bool same = b1.size() == b2.size();
  for (EventId e = 0; same && e < b1.size(); ++e) {
    same = b1.polarity(e) == b2.polarity(e) && b1.label(e) == b2.label(e) &&
           b1.below(e) == b2.below(e);
  }
  if (!same) {
    throw Error(ErrorCode::DimensionMismatch,
                "strategies " + sigma.name + " and " + tau.name +
                    " do not share their middle game");
  }
}

// The T event of xt played on B event b, or -1.
EventId partner(const Strategy& tau, EventSet xt, EventId b) {
  EventId found = -1;
  for_each_event(tau.on_a(xt), [&](EventId t) {
    if (tau.label[t] == b) found = t;
  });
  return found;
}

bool acyclic(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> out(n);
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> ready;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) ready.push_back(i);
  int seen = 0;
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    ++seen;
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

EventSet enabled(const EventStructure& es, EventSet x) {
  EventSet out = 0;
  for_each_event(es.all() & ~x, [&](EventId e) {
    if ((es.below(e) & ~x) == 0 && (es.conflicts(e) & x) == 0) out |= bit(e);
  });
  return out;
}

}  // namespace

bool is_secured(const Strategy& sigma, const Strategy& tau, EventSet xs,
                EventSet xt, const ConfigIso& theta_b) {
  check_middle(sigma, tau);
  if (theta_b.src != sigma.proj_b(xs) || theta_b.dst != tau.proj_a(xt)) {
    throw Error(ErrorCode::InvalidArgument, "theta_b does not connect the B projections");
  }
  const int ns = sigma.es().size();
  std::vector<int> node_s(ns, -1), node_t(tau.es().size(), -1);
  int n = 0;
  std::vector<EventId> by_b(sigma.b_size(), -1);  // T-side B id -> S node
  for_each_event(xs, [&](EventId s) {
    node_s[s] = n++;
    if (sigma.label[s] >= sigma.a_size()) by_b[theta_b.img[sigma.b_event(s)]] = node_s[s];
  });
  for_each_event(xt, [&](EventId t) {
    node_t[t] = tau.label[t] < tau.a_size() ? by_b[tau.label[t]] : n++;
  });
  std::vector<std::pair<int, int>> edges;
  for_each_event(xs, [&](EventId s) {
    for_each_event(sigma.es().preds(s), [&](EventId p) {
      edges.emplace_back(node_s[p], node_s[s]);
    });
  });
  for_each_event(xt, [&](EventId t) {
    for_each_event(tau.es().preds(t), [&](EventId p) {
      edges.emplace_back(node_t[p], node_t[t]);
    });
  });
  return acyclic(n, edges);
}

namespace {

struct Node {
  Interaction::Kind kind;
  EventId s = -1, t = -1;
};

std::vector<Node> nodes_of(const Interaction& in, const InteractionState& x) {
  const Strategy& sg = *in.sigma;
  const Strategy& ta = *in.tau;
  std::vector<Node> out;
  for_each_event(x.xs, [&](EventId s) {
    if (sg.label[s] < sg.a_size()) {
      out.push_back({Interaction::Kind::A, s, -1});
    } else {
      out.push_back({Interaction::Kind::B, s, partner(ta, x.xt, sg.b_event(s))});
    }
  });
  for_each_event(ta.on_b(x.xt), [&](EventId t) {
    out.push_back({Interaction::Kind::C, -1, t});
  });
  return out;
}

std::vector<Node> maximal_nodes(const Interaction& in, const InteractionState& x) {
  std::vector<Node> out;
  for (const Node& n : nodes_of(in, x)) {
    InteractionState y = x;
    if (n.s >= 0) y.xs &= ~bit(n.s);
    if (n.t >= 0) y.xt &= ~bit(n.t);
    if (in.contains(y)) out.push_back(n);
  }
  return out;
}

bool subset(const InteractionState& a, const InteractionState& b) {
  return (a.xs & ~b.xs) == 0 && (a.xt & ~b.xt) == 0;
}

}  // namespace

bool Interaction::is_plus_covered(const InteractionState& x) const {
  for (const Node& n : maximal_nodes(*this, x)) {
    if (n.kind == Kind::B) return false;
    Polarity p = n.kind == Kind::A ? sigma->es().polarity(n.s) : tau->es().polarity(n.t);
    if (p != Polarity::Positive) return false;
  }
  return true;
}

bool Interaction::is_minimal(const InteractionState& x) const {
  for (const Node& n : maximal_nodes(*this, x))
    if (n.kind == Kind::B) return false;
  return true;
}

EventSet Interaction::proj_a(const InteractionState& x) const { return sigma->proj_a(x.xs); }
EventSet Interaction::proj_b(const InteractionState& x) const { return sigma->proj_b(x.xs); }
EventSet Interaction::proj_c(const InteractionState& x) const { return tau->proj_b(x.xt); }

InteractionPtr interaction(const StrategyPtr& sigma, const StrategyPtr& tau,
                           const Limits& limits) {
  check_middle(*sigma, *tau);
  auto in = std::make_shared<Interaction>();
  in->sigma = sigma;
  in->tau = tau;
  const EventStructure& s = sigma->es();
  const EventStructure& t = tau->es();
  std::deque<InteractionState> queue;
  auto visit = [&](InteractionState y) {
    if (in->index.count(y)) return;
    if (in->states.size() >= limits.config_cap) {
      throw Error(ErrorCode::SizeLimitExceeded, "interaction exceeds state cap");
    }
    in->index.emplace(y, static_cast<int>(in->states.size()));
    in->states.push_back(y);
    queue.push_back(y);
  };
  visit({0, 0});
  while (!queue.empty()) {
    InteractionState x = queue.front();
    queue.pop_front();
    EventSet en_t = enabled(t, x.xt);
    for_each_event(enabled(s, x.xs), [&](EventId e) {
      if (sigma->label[e] < sigma->a_size()) {
        visit({x.xs | bit(e), x.xt});
        return;
      }
      EventId b = sigma->b_event(e);
      for_each_event(en_t, [&](EventId f) {
        if (tau->label[f] == b) visit({x.xs | bit(e), x.xt | bit(f)});
      });
    });
    for_each_event(en_t, [&](EventId f) {
      if (tau->label[f] >= tau->a_size()) visit({x.xs, x.xt | bit(f)});
    });
  }
  for (const auto& x : in->states) {
    auto top = maximal_nodes(*in, x);
    if (top.size() != 1) continue;
    const Node& n = top.front();
    in->primes.push_back({x, n.kind, n.kind == Interaction::Kind::C ? n.t : n.s});
  }
  return in;
}

EventSet Composition::config_of(const InteractionState& x) const {
  EventSet out = 0;
  for (int e = 0; e < static_cast<int>(prime.size()); ++e)
    if (subset(inter->primes[prime[e]].state, x)) out |= bit(e);
  return out;
}

InteractionState Composition::state_of(EventSet x) const {
  InteractionState out;
  for_each_event(x, [&](EventId e) {
    out.xs |= inter->primes[prime[e]].state.xs;
    out.xt |= inter->primes[prime[e]].state.xt;
  });
  return out;
}

Composition compose(const StrategyPtr& sigma, const StrategyPtr& tau,
                    const Limits& limits) {
  Composition comp;
  comp.inter = interaction(sigma, tau, limits);
  const Interaction& in = *comp.inter;
  for (int i = 0; i < static_cast<int>(in.primes.size()); ++i)
    if (in.primes[i].kind != Interaction::Kind::B) comp.prime.push_back(i);
  std::sort(comp.prime.begin(), comp.prime.end(), [&](int a, int b) {
    const auto& x = in.primes[a].state;
    const auto& y = in.primes[b].state;
    int cx = count(x.xs) + count(x.xt), cy = count(y.xs) + count(y.xt);
    if (cx != cy) return cx < cy;
    if (x.xs != y.xs) return lex_less(x.xs, y.xs);
    return lex_less(x.xt, y.xt);
  });
  const int n = static_cast<int>(comp.prime.size());
  if (n > kMaxEvents) {
    throw Error(ErrorCode::SizeLimitExceeded, "composition exceeds 64 events");
  }

  const int na = sigma->a_size(), nb = sigma->b_size();
  EsSpec spec;
  std::vector<EventId> label;
  std::set<std::string> names;
  for (int i : comp.prime) {
    const auto& p = in.primes[i];
    bool left = p.kind == Interaction::Kind::A;
    const EventStructure& es = left ? sigma->es() : tau->es();
    std::string nm = es.name(p.top);
    while (!names.insert(nm).second) nm += "'";
    spec.add(es.polarity(p.top), (left ? "S:" : "T:") + es.label(p.top), nm);
    label.push_back(left ? sigma->label[p.top] : tau->label[p.top] - nb + na);
  }
  for (int a = 0; a < n; ++a) {
    const auto& pa = in.primes[comp.prime[a]].state;
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto& pb = in.primes[comp.prime[b]].state;
      if (subset(pa, pb)) {
        spec.causality.emplace_back(a, b);
      } else if (a < b && !subset(pb, pa) && !in.contains({pa.xs | pb.xs, pa.xt | pb.xt})) {
        spec.conflict.emplace_back(a, b);
      }
    }
  }

  // phi is a symmetry when S and T symmetries agreeing on B induce it on
  // the visible tops.
  auto inter = comp.inter;
  auto primes = std::make_shared<const std::vector<int>>(comp.prime);
  IsoPredicate pred = [inter, primes](const ConfigIso& phi) {
    const Interaction& in = *inter;
    auto state_of = [&](EventSet x) {
      InteractionState out;
      for_each_event(x, [&](EventId e) {
        out.xs |= in.primes[(*primes)[e]].state.xs;
        out.xt |= in.primes[(*primes)[e]].state.xt;
      });
      return out;
    };
    InteractionState sx = state_of(phi.src), sy = state_of(phi.dst);
    const Strategy& sg = *in.sigma;
    const Strategy& ta = *in.tau;
    auto tops_ok = [&](const ConfigIso& th, Interaction::Kind kind) {
      bool ok = true;
      for_each_event(phi.src, [&](EventId e) {
        const auto& p = in.primes[(*primes)[e]];
        if (p.kind == kind && th.img[p.top] != in.primes[(*primes)[phi.img[e]]].top) {
          ok = false;
        }
      });
      return ok;
    };
    std::vector<ConfigIso> ts;
    for (auto& th : enumerate_isos(ta.es(), ta.sym(), sx.xt, sy.xt))
      if (tops_ok(th, Interaction::Kind::C)) ts.push_back(std::move(th));
    if (ts.empty()) return false;
    for (const auto& hs : enumerate_isos(sg.es(), sg.sym(), sx.xs, sy.xs)) {
      if (!tops_ok(hs, Interaction::Kind::A)) continue;
      for (const auto& ht : ts) {
        bool agree = true;
        for_each_event(sg.on_b(sx.xs), [&](EventId s) {
          EventId t = partner(ta, sx.xt, sg.b_event(s));
          if (t < 0 || sg.b_event(hs.img[s]) != ta.label[ht.img[t]]) agree = false;
        });
        if (agree) return true;
      }
    }
    return false;
  };
  auto es = EventStructure::build(spec);
  comp.strategy = make_strategy(
      tau->name + "." + sigma->name, std::move(es), sigma->a, tau->b, std::move(label),
      SymmetrySpec::derived("compose", {sigma->sym(), tau->sym()}, std::move(pred)));
  return comp;
}

PcovReport pcov_bijection(const Composition& comp) {
  PcovReport r;
  const Interaction& in = *comp.inter;
  const Strategy& st = *comp.strategy;
  std::set<EventSet> hit;
  for (const auto& x : in.states) {
    if (!in.is_plus_covered(x)) continue;
    ++r.interaction_count;
    EventSet c = comp.config_of(x);
    r.pairs.emplace_back(x, c);
    if (!st.es().is_configuration(c) || !is_plus_covered(st.es(), c)) {
      r.ok = false;
      r.failure = "image of a +-covered state is not +-covered";
    } else if (st.proj_a(c) != in.proj_a(x) || st.proj_b(c) != in.proj_c(x)) {
      r.ok = false;
      r.failure = "projections disagree";
    } else if (!hit.insert(c).second) {
      r.ok = false;
      r.failure = "two states share an image";
    }
  }
  for (EventSet c : configurations(*st.s))
    if (is_plus_covered(st.es(), c)) ++r.composition_count;
  if (r.ok && r.composition_count != hit.size()) {
    r.ok = false;
    r.failure = "some +-covered configuration has no antecedent";
  }
  return r;
}

DeadlockReport no_deadlock(const Strategy& sigma, const Strategy& tau,
                           const Limits& limits) {
  check_middle(sigma, tau);
  std::map<EventSet, std::vector<EventSet>> by_s, by_t;
  for (EventSet x : configurations(*sigma.s)) by_s[sigma.proj_b(x)].push_back(x);
  for (EventSet x : configurations(*tau.s)) by_t[tau.proj_a(x)].push_back(x);
  const Tcg& b = *sigma.b;
  for (const auto& [bs, xss] : by_s) {
    for (const auto& [bt, xts] : by_t) {
      if (count(bs) != count(bt)) continue;
      for (const auto& th : enumerate_symmetries(b, Flavor::Full, bs, bt, limits)) {
        for (EventSet xs : xss) {
          for (EventSet xt : xts) {
            if (!is_secured(sigma, tau, xs, xt, th)) return {false, xs, xt, th};
          }
        }
      }
    }
  }
  return {};
}

SyncReport weak_bipullback(const Strategy& sigma, const Strategy& tau,
                           EventSet xs, EventSet xt, const ConfigIso& theta_b) {
  check_middle(sigma, tau);
  if (!is_secured(sigma, tau, xs, xt, theta_b)) {
    throw Error(ErrorCode::InvalidArgument, "composite bijection is not secured");
  }
  SyncReport r;
  const auto& t_syms = symmetries_from(*tau.s, Flavor::Full, xt);
  EventSet xs_b = sigma.on_b(xs);
  for (const auto& hs : symmetries_from(*sigma.s, Flavor::Full, xs)) {
    for (const auto& ht : t_syms) {  // ht : x^T -> y^T
      bool agree = true;
      for_each_event(xs_b, [&](EventId s) {
        EventId t = partner(tau, xt, theta_b.img[sigma.b_event(s)]);
        if (t < 0 || sigma.b_event(hs.img[s]) != tau.label[ht.img[t]]) agree = false;
      });
      if (!agree) continue;
      EventSet yb = sigma.proj_b(hs.dst);
      if (yb != tau.proj_a(ht.dst)) continue;
      if (!is_secured(sigma, tau, hs.dst, ht.dst, ConfigIso::identity(sigma.b_size(), yb))) {
        continue;
      }
      r.solutions.push_back({hs.dst, ht.dst, hs, inverse(ht)});
    }
  }
  if (r.solutions.empty()) {
    throw Error(ErrorCode::NoSolution, "no synchronisation of the given pair");
  }
  const auto& first = r.solutions.front();
  for (const auto& other : r.solutions) {
    ConfigIso ps = compose(other.theta_s, inverse(first.theta_s));
    ConfigIso pt = compose(inverse(other.theta_t), first.theta_t);
    if (!in_family(*sigma.s, Flavor::Full, ps) || !in_family(*tau.s, Flavor::Full, pt) ||
        !(part_b(sigma, sigma.push(ps)).img == part_a(tau, tau.push(pt)).img)) {
      r.connected = false;
    }
  }
  if (!r.connected) {
    throw Error(ErrorCode::AmbiguousBeyondSymmetry, "synchronisations are not related");
  }
  return r;
}

}  // namespace cgame
