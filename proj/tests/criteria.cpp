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

#include "criteria.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "cgame/commands.hpp"
#include "cgame/fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace criteria {

using namespace cgame;

void Verdict::check(bool cond, const std::string& what) {
  if (!cond) {
    ok = false;
    notes.push_back("failed: " + what);
  }
}

std::string Verdict::summary() const {
  std::string s;
  for (const auto& n : notes) s += (s.empty() ? "" : "; ") + n;
  return s;
}

std::vector<Pair> fixture_pairs() {
  std::vector<Pair> out;
  for (const auto& name : fixture_names()) {
    Scenario sc = fixture(name);
    for (const auto& [sn, s] : sc.strategies)
      for (const auto& [tn, t] : sc.strategies)
        if (s->b == t->a) out.push_back({name, sn, tn});
  }
  return out;
}

std::vector<std::pair<std::string, StrategyPtr>> fixture_strategies() {
  std::vector<std::pair<std::string, StrategyPtr>> out;
  for (const auto& name : fixture_names())
    for (const auto& [sn, s] : fixture(name).strategies) out.emplace_back(name + "/" + sn, s);
  return out;
}

Atlases automatic_atlases(const Strategy& sigma, const Strategy& tau) {
  return {Atlas::automatic(sigma.a), Atlas::automatic(sigma.b), Atlas::automatic(tau.b)};
}

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

int find_class(const Atlas& atlas, const std::string& desc) {
  for (int c = 0; c < atlas.classes(); ++c) {
    std::string d = describe_class(atlas, c);
    if (d.substr(d.find(' ') + 1) == desc) return c;
  }
  return -1;
}

std::size_t sym_count(const Tcg& g, Flavor f, EventSet x) { return endo_group(g, f, x).size(); }

// Composite class witnesses at (a, c) against the products over B.
void mismatch(Verdict& v, const Scenario& sc, const std::string& want_a,
              const std::string& want_b, const std::string& want_c) {
  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  v.check(validate_strategy(*s).ok() && validate_strategy(*t).ok(), "fixture strategies valid");
  Atlases at = automatic_atlases(*s, *t);
  int a = find_class(at.a, want_a), c = find_class(at.c, want_c);
  v.check(a >= 0 && c >= 0, "classes " + want_a + " and " + want_c + " exist");
  if (a < 0 || c < 0) return;
  EventSet ra = at.a.rep(a), rc = at.c.rep(c);
  Composition comp = compose(s, t);
  const Strategy& ts = *comp.strategy;

  std::size_t composite = wit(ts, a, c).size();
  v.check(composite == 2, "composite class witnesses = 2, got " + num(composite));
  v.check(oracle::wit_classes(ts, ra, rc) == composite, "composite class witnesses match oracle");

  std::vector<int> mediating;
  std::size_t product = 0, plus_sum = 0;
  for (int b = 0; b < at.b.classes(); ++b) {
    std::size_t x = wit(*s, a, b).size(), y = wit(*t, b, c).size();
    product += x * y;
    if (x * y != 0) mediating.push_back(b);
    std::size_t px = wit_plus(*s, at.a, at.b, a, b).size();
    std::size_t py = wit_plus(*t, at.b, at.c, b, c).size();
    v.check(px == oracle::wit_plus(*s, ra, at.b.rep(b)), "sigma wit+ matches oracle");
    v.check(py == oracle::wit_plus(*t, at.b.rep(b), rc), "tau wit+ matches oracle");
    plus_sum += px * py;
  }
  v.check(product == 1, "sum of class witness products = 1, got " + num(product));
  v.check(mediating.size() == 1 && find_class(at.b, want_b) == mediating[0],
          "unique mediating class " + want_b);
  std::size_t plus = wit_plus(ts, at.a, at.c, a, c).size();
  v.check(plus == oracle::wit_plus(ts, ra, rc), "composite wit+ matches oracle");
  v.check(plus == plus_sum, "wit+ " + num(plus) + " = sum " + num(plus_sum));
  TheoremReport th = check_theorem(s, t, at.a, at.b, at.c);
  v.check(th.holds, "theorem holds: " + th.describe_failure());
  v.note("wit " + num(composite) + " vs " + num(product) + ", wit+ " + num(plus) + " = " +
         num(plus_sum));
}

}  // namespace

Verdict mismatch_atomic() {
  Verdict v;
  Scenario sc = fixture("FIX_EPI1");
  mismatch(v, sc, "[ok]", "[m, m, p]", "[ok]");
  return v;
}

Verdict mismatch_exponential() {
  Verdict v;
  Scenario sc = fixture("FIX_EPI2");
  mismatch(v, sc, "[q, q]", "[q(q, q(q, q))]", "[q(q)]");
  return v;
}

Verdict representative_choice() {
  Verdict v;
  Scenario sc = fixture("FIX_REPR");
  TcgPtr b = sc.game("B");
  EventSet xb = sc.config("xb"), xp = sc.config("xb_prime");
  v.check(!is_canonical(*b, xb) && !oracle::canonical(*b, xb), "xb not canonical");
  v.check(is_canonical(*b, xp) && oracle::canonical(*b, xp), "xb_prime canonical");
  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  Atlases at = automatic_atlases(*s, *t);
  int cb = at.b.class_of(xb);
  v.check(cb == at.b.class_of(xp), "xb and xb_prime in one class");
  int cc = at.c.class_of(bit(t->b->es.find("ok[0]")));
  EventSet rc = at.c.rep(cc);
  Atlas with_xb = at.b.with_rep(xb), with_xp = at.b.with_rep(xp);
  auto over_xb = wit_plus(*t, with_xb, at.c, cb, cc);
  auto over_xp = wit_plus(*t, with_xp, at.c, cb, cc);
  v.check(over_xb.size() == 2 && oracle::wit_plus(*t, xb, rc) == 2,
          "two witnesses over xb, got " + num(over_xb.size()));
  v.check(over_xp.size() == 1 && oracle::wit_plus(*t, xp, rc) == 1,
          "one witness over xb_prime, got " + num(over_xp.size()));
  if (over_xp.size() == 1) {
    EventSet proj = t->proj_a(over_xp[0]);
    // Positive symmetries of the dual of B are the negative ones of B.
    std::size_t pos = oracle::symmetries(*b, Flavor::Neg, proj, xp).size();
    v.check(pos == 2, "two positive symmetries to xb_prime, oracle found " + num(pos));
    v.check(swit_plus(*t, with_xp, at.c, cb, cc).size() == 2, "two positive witnesses in swit+");
  }
  v.note("wit+ 2 over xb, 1 over xb_prime");
  return v;
}

Verdict non_representable() {
  Verdict v;
  Scenario sc = fixture("FIX_DEVISME");
  TcgPtr g = sc.game("dv");
  v.check(!is_representable(*g).representable, "library reports not representable");
  v.check(!oracle::representable(*g), "oracle reports not representable");
  const EventStructure& es = g->es;
  EventSet top = sc.config("top");
  ConfigIso f = ConfigIso::identity(es.size(), top);
  f.img[es.find("m1")] = es.find("m2");
  f.img[es.find("m2")] = es.find("m1");
  v.check(in_family(*g, Flavor::Full, f), "m swap is an endosymmetry");
  auto fs = all_factorizations(*g, f);
  v.check(fs.size() == 1 && fs[0].mid != top, "unique factorization through another config");
  std::size_t splits = 0;
  EventSet mid = 0;
  for (EventSet y : oracle::configurations(oracle::raw(es))) {
    for (const auto& n : oracle::symmetries(*g, Flavor::Neg, top, y))
      for (const auto& p : oracle::symmetries(*g, Flavor::Pos, y, top))
        if (compose(p, n) == f) {
          ++splits;
          mid = y;
        }
  }
  v.check(splits == 1 && mid != top, "oracle finds one factorization, not through top");
  if (!fs.empty()) v.note("factors through " + format_set(es, fs[0].mid));
  return v;
}

Verdict two_synchronisations() {
  Verdict v;
  Scenario sc = fixture("FIX_EX1");
  for (auto [sn, tn] : {std::pair{"sigma", "tau"}, std::pair{"sigma2", "tau2"}}) {
    StrategyPtr s = sc.strategy(sn), t = sc.strategy(tn);
    v.check(validate_strategy(*s).ok() && validate_strategy(*t).ok(),
            std::string(sn) + " and " + tn + " valid");
    Composition comp = compose(s, t);
    const Strategy& st = *comp.strategy;
    int n = st.es().size();
    v.check(n == 4, std::string(tn) + "." + sn + " has 4 events, got " + num(n));
    oracle::Raw r = oracle::raw(st.es());
    for (EventId e = 0; e < n; ++e) {
      for (EventId f = e + 1; f < n; ++f) {
        v.check(((r.conflict[e] >> f) & 1u) != 0, "outcome events pairwise conflicting");
        v.check(!oracle::symmetric(*st.s, Flavor::Full, bit(e), bit(f)),
                "outcome events pairwise non-symmetric");
      }
    }
  }
  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  EventSet xs = sc.config("sync_s"), xt = sc.config("sync_t");
  EventSet xb = s->proj_b(xs);
  v.check(t->proj_a(xt) == xb, "sync configurations agree on B");
  auto endos = oracle::symmetries(*s->b, Flavor::Full, xb, xb);
  v.check(endos.size() == 2, "x_B has two endosymmetries, got " + num(endos.size()));
  Composition comp = compose(s, t);
  std::vector<EventSet> outcomes;
  for (const auto& theta : endos) {
    try {
      SyncReport rep = weak_bipullback(*s, *t, xs, xt, theta);
      const SyncResult& res = rep.solutions.front();
      InteractionState state{res.ys, res.yt};
      v.check(comp.inter->contains(state), "synchronised state is an interaction state");
      if (comp.inter->contains(state)) outcomes.push_back(comp.config_of(state));
    } catch (const Error& e) {
      v.check(false, std::string("synchronisation: ") + e.what());
    }
  }
  v.check(outcomes.size() == 2 &&
              !oracle::symmetric(*comp.strategy->s, Flavor::Full, outcomes[0], outcomes[1]),
          "id and sw give non-symmetric outcomes");
  if (outcomes.size() == 2) {
    v.note("id gives " + format_set(comp.strategy->es(), outcomes[0]) + ", sw gives " +
           format_set(comp.strategy->es(), outcomes[1]));
  }
  return v;
}

Verdict counting_identities() {
  Verdict v;
  std::size_t triples = 0, pairs = 0, reps = 0, fibers = 0;
  for (const auto& p : fixture_pairs()) {
    Scenario sc = fixture(p.fixture);
    StrategyPtr s = sc.strategy(p.sigma), t = sc.strategy(p.tau);
    Atlases at = automatic_atlases(*s, *t);
    Composition comp = compose(s, t);
    std::string who = p.fixture + " " + p.tau + "." + p.sigma;
    PairCountReport pc = check_pair_counts(*s, *t, *comp.inter, at.a, at.b, at.c);
    v.check(pc.ok, "compatible pairs on " + who + ": " + pc.failure);
    triples += pc.triples;
    for (int a = 0; a < at.a.classes(); ++a) {
      std::size_t na = sym_count(*s->a, Flavor::Neg, at.a.rep(a));
      for (int c = 0; c < at.c.classes(); ++c) {
        std::size_t pc_ = sym_count(*t->b, Flavor::Pos, at.c.rep(c));
        for (int b = 0; b < at.b.classes(); ++b) {
          std::size_t lhs = swint_plus(*comp.inter, at.a, at.b, at.c, a, b, c).size();
          std::size_t mid = int_plus(*comp.inter, at.a, at.b, at.c, a, b, c).size();
          v.check(lhs == na * mid * pc_, "swint+ = Sym- x int+ x Sym+ on " + who);
        }
      }
    }
  }
  for (const auto& [who, st] : fixture_strategies()) {
    Atlas aa = Atlas::automatic(st->a), ab = Atlas::automatic(st->b);
    for (int a = 0; a < aa.classes(); ++a) {
      std::size_t na = sym_count(*st->a, Flavor::Neg, aa.rep(a));
      v.check(na == oracle::symmetries(*st->a, Flavor::Neg, aa.rep(a), aa.rep(a)).size(),
              "Sym- matches oracle on " + who);
      for (int b = 0; b < ab.classes(); ++b) {
        std::size_t pb = sym_count(*st->b, Flavor::Pos, ab.rep(b));
        std::size_t w = wit_plus(*st, aa, ab, a, b).size();
        std::size_t sw = swit_plus(*st, aa, ab, a, b).size();
        v.check(sw == na * w * pb, "swit+ = Sym- x wit+ x Sym+ on " + who);
        ++pairs;
      }
    }
    if (!is_representable(*st->game).representable) continue;
    Atlas amb = Atlas::automatic(st->game);
    for (int c = 0; c < amb.classes(); ++c) {
      FiberReport fr = check_swit_fibers(*st, amb.rep(c));
      v.check(fr.ok, "fibers of F on " + who + ": " + fr.failure);
      ++fibers;
    }
  }
  for (const auto& name : fixture_names()) {
    Scenario sc = fixture(name);
    std::set<const Tcg*> seen;
    for (const auto& [gn, g] : sc.games) {
      if (!seen.insert(g.get()).second) continue;
      for (const auto& cls : symmetry_classes(*g)) {
        for (EventSet x : cls.canonical_members) {
          std::size_t full = sym_count(*g, Flavor::Full, x);
          std::size_t np = sym_count(*g, Flavor::Neg, x) * sym_count(*g, Flavor::Pos, x);
          v.check(full == np, "|Sym| = |Sym-| |Sym+| on " + name + "/" + gn);
          ++reps;
        }
      }
    }
  }
  v.note(num(triples) + " class triples, " + num(pairs) + " class pairs, " + num(reps) +
         " canonical configurations, " + num(fibers) + " fibre checks");
  return v;
}

Verdict random_pairs(int want_free) {
  Verdict v;
  for (const auto& [name, g] : gen::game_pool())
    v.check(is_representable(*g).representable && g->es.size() <= 8,
            name + " representable and small");
  gen::PairStats st = gen::random_pairs(20261016u, want_free, want_free / 10, 100 * want_free);
  v.check(st.deadlock_free >= want_free,
          "deadlock-free pairs " + num(st.deadlock_free) + " < " + num(want_free));
  v.check(st.deadlocking >= want_free / 10, "deadlocking pairs " + num(st.deadlocking));
  v.check(st.theorem_failures == 0, "theorem failures " + num(st.theorem_failures));
  v.check(st.pair_count_failures == 0, "compatible pair failures " + num(st.pair_count_failures));
  v.check(st.pcov_failures == 0, "pcov failures " + num(st.pcov_failures));
  for (const auto& f : st.failures) v.note(f);
  Scenario sc = fixture("FIX_DEADLOCK");
  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  Atlases at = automatic_atlases(*s, *t);
  v.check(!no_deadlock(*s, *t).ok, "deadlock fixture deadlocks");
  v.check(check_pair_counts(*s, *t, *interaction(s, t), at.a, at.b, at.c).ok,
          "compatible pairs on the deadlock fixture");
  v.note(num(st.deadlock_free) + " deadlock-free and " + num(st.deadlocking) +
         " deadlocking pairs in " + num(st.attempts) + " draws");
  return v;
}

Verdict pcov_everywhere() {
  Verdict v;
  std::size_t n = 0;
  for (const auto& p : fixture_pairs()) {
    Scenario sc = fixture(p.fixture);
    StrategyPtr s = sc.strategy(p.sigma), t = sc.strategy(p.tau);
    Composition comp = compose(s, t);
    PcovReport pc = pcov_bijection(comp);
    std::string who = p.fixture + " " + p.tau + "." + p.sigma;
    v.check(pc.ok, "pcov on " + who + ": " + pc.failure);
    v.check(pc.interaction_count == pc.composition_count, "pcov cardinalities on " + who);
    if (comp.strategy->es().size() <= 16 && s->es().size() + t->es().size() <= 20) {
      oracle::Raw r = oracle::raw(comp.strategy->es());
      std::size_t composite = 0;
      for (EventSet x : oracle::configurations(r)) composite += oracle::plus_covered(r, x);
      std::size_t states = oracle::plus_covered_states(*s, *t);
      v.check(states == composite, "oracle +-covered counts agree on " + who);
      v.check(states == pc.interaction_count, "oracle interaction count on " + who);
    }
    ++n;
  }
  gen::PairStats st = gen::random_pairs(7u, 40, 0, 1000);
  v.check(st.pcov_failures == 0, "pcov on random pairs");
  v.note(num(n) + " fixture compositions, " + num(st.attempts) + " random draws");
  return v;
}

Verdict representability_preserved(std::uint32_t seed, int rounds) {
  Verdict v;
  std::mt19937 rng(seed);
  auto input = [&](int max_events) {
    for (;;) {
      TcgPtr g = gen::random_game(rng, max_events);
      if (is_representable(*g).representable) return g;
    }
  };
  auto negative_input = [&](int max_events) {
    for (;;) {
      TcgPtr g = input(max_events);
      if (is_negative(g->es) && g->es.size() > 0) return g;
    }
  };
  std::map<std::string, int> done;
  auto expect = [&](const std::string& op, const TcgPtr& g) {
    bool lib = is_representable(*g).representable;
    v.check(lib, op + " keeps representability");
    if (g->es.size() <= 7) v.check(oracle::representable(*g) == lib, op + " agrees with oracle");
    ++done[op];
  };
  for (int i = 0; i < rounds; ++i) {
    TcgPtr a = input(4), b = input(4);
    expect("dual", dual(a));
    expect("par", parallel(a, b));
    expect("shift_up", shift_up(a));
    expect("shift_down", shift_down(a));
    expect("sum", sum({a, b}));
    TcgPtr n = negative_input(3);
    expect("bang_ajm", bang_ajm(n, CopyBound::uniform(2)));
    expect("bang_ho", bang_ho(make_arena(gen::random_arena(rng, 3)), CopyBound::uniform(2)));
    TcgPtr m = negative_input(3), r = negative_input(3);
    if (count(r->es.minimal_events()) == 1) expect("arrow", linear_arrow(m, r));
  }
  std::string s;
  for (const auto& [op, k] : done) s += (s.empty() ? "" : " ") + op + "=" + num(k);
  v.note(s);
  return v;
}

Verdict multiset_classes() {
  Verdict v;
  EsSpec qa;
  EventId q = qa.add(Polarity::Negative, "q", "q");
  EventId a = qa.add(Polarity::Positive, "a", "a");
  qa.causality.emplace_back(q, a);
  std::vector<TcgPtr> bases = {
      single_event(Polarity::Negative, "q"),
      make_rigid_tcg(EventStructure::build(qa), "qa"),
      bang_ajm(single_event(Polarity::Negative, "q"), CopyBound::uniform(2)),
      bang_ho(make_arena(EventStructure::build(qa)), CopyBound::uniform(2)),
  };
  std::size_t checked = 0;
  for (const TcgPtr& n : bases) {
    int m = n->es.size();
    int nonempty = static_cast<int>(symmetry_classes(*n).size()) - 1;
    for (int k = 1; k <= 3 && k * m <= 12; ++k) {
      TcgPtr g = bang_ajm(n, CopyBound::uniform(k));
      std::map<std::vector<int>, std::set<int>> by_multiset;
      for (EventSet x : configurations(*g)) {
        std::vector<int> ms;
        for (int i = 0; i < k; ++i) {
          EventSet part = (x >> (i * m)) & ((EventSet{1} << m) - 1);
          if (part != 0) ms.push_back(class_index(*n, part));
        }
        std::sort(ms.begin(), ms.end());
        by_multiset[ms].insert(class_index(*g, x));
      }
      std::set<int> classes;
      bool injective = true;
      for (const auto& [ms, cls] : by_multiset) {
        if (cls.size() != 1) injective = false;
        classes.insert(*cls.begin());
      }
      std::size_t binom = 1;
      for (int i = 1; i <= k; ++i) binom = binom * (nonempty + i) / i;
      std::string who = n->name + " with k=" + num(k);
      v.check(injective, "multiset determines the class for " + who);
      v.check(classes.size() == symmetry_classes(*g).size(), "distinct multisets per class for " + who);
      v.check(by_multiset.size() == binom,
              "multisets " + num(by_multiset.size()) + " = C(m+k, k) " + num(binom) + " for " + who);
      v.check(g->es.size() > 6 || symmetry_classes(*g).size() == oracle::class_count(*g),
              "class count matches oracle for " + who);
      ++checked;
    }
  }
  v.note(num(checked) + " bounded exponentials");
  return v;
}

Verdict atlas_invariance() {
  Verdict v;
  std::size_t alternatives = 0;
  for (const auto& [who, st] : fixture_strategies()) {
    Atlas aa = Atlas::automatic(st->a), ab = Atlas::automatic(st->b);
    if (!aa.all_canonical() || !ab.all_canonical()) continue;
    WeightedRelation base = collapse(*st, aa, ab);
    auto vary = [&](const Atlas& atlas, bool on_a) {
      for (const auto& cls : symmetry_classes(*atlas.game())) {
        for (EventSet x : cls.canonical_members) {
          if (x == cls.chosen_rep) continue;
          Atlas alt = atlas.with_rep(x);
          WeightedRelation r = on_a ? collapse(*st, alt, ab) : collapse(*st, aa, alt);
          v.check(r.entries == base.entries, "collapse of " + who + " with another representative");
          ++alternatives;
          break;
        }
      }
    };
    vary(aa, true);
    vary(ab, false);
  }
  v.check(alternatives > 0, "some class has several canonical members");
  v.note(num(alternatives) + " alternative atlases");
  return v;
}

Verdict altsym_invariance() {
  Verdict v;
  Scenario sc = fixture("FIX_ALTSYM");
  StrategyPtr fix = sc.strategy("fix"), cross = sc.strategy("cross");
  v.check(validate_strategy(*fix).ok() && validate_strategy(*cross).ok(), "both symmetries valid");
  v.check(fix->sym().generators != cross->sym().generators, "symmetries differ");
  Atlas aa = Atlas::automatic(sc.game("one")), ag = Atlas::automatic(sc.game("G"));
  v.check(collapse(*fix, aa, ag) == collapse(*cross, aa, ag), "collapse agrees");
  for (int b = 0; b < ag.classes(); ++b) {
    v.check(oracle::wit_plus(*fix, 0, ag.rep(b)) == oracle::wit_plus(*cross, 0, ag.rep(b)),
            "oracle wit+ agrees");
  }
  return v;
}

Verdict structural() {
  Verdict v;
  for (auto [name, part] : {std::pair{"pcov", &pcov_everywhere},
                            std::pair{"multiset", &multiset_classes},
                            std::pair{"atlas", &atlas_invariance},
                            std::pair{"altsym", &altsym_invariance}}) {
    Verdict p = part();
    v.ok = v.ok && p.ok;
    v.note(std::string(name) + ": " + (p.ok ? "ok" : "FAIL") + (p.notes.empty() ? "" : " (" + p.summary() + ")"));
  }
  Verdict r = representability_preserved(11u, 12);
  v.ok = v.ok && r.ok;
  v.note(std::string("representability: ") + (r.ok ? "ok" : "FAIL") + " (" + r.summary() + ")");
  return v;
}

}  // namespace criteria
