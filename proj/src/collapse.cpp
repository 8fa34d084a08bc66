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

#include "cgame/collapse.hpp"

namespace cgame {

namespace {

std::size_t count_syms(const Tcg& g, Flavor f, EventSet x, EventSet y) {
  if (count(x) != count(y)) return 0;
  return enumerate_symmetries(g, f, x, y).size();
}

std::size_t group_size(const Tcg& g, Flavor f, EventSet x) {
  return endo_group(g, f, x).size();
}

template <typename T>
bool contains(const std::vector<T>& v, const T& t) {
  return std::find(v.begin(), v.end(), t) != v.end();
}

}  // namespace

Atlas Atlas::automatic(TcgPtr game, bool strict) {
  Atlas a;
  Representability r = is_representable(*game);
  if (strict && !r.representable) {
    throw Error(ErrorCode::NotRepresentable,
                game->name + " has " + std::to_string(r.classes_without_canonical.size()) +
                    " classes without a canonical member");
  }
  a.game_ = std::move(game);
  for (const auto& c : symmetry_classes(*a.game_)) a.reps_.push_back(c.chosen_rep);
  return a;
}

Atlas Atlas::with_rep(EventSet x) const {
  Atlas a = *this;
  a.reps_.at(class_of(x)) = x;
  return a;
}

int Atlas::class_of(EventSet x) const {
  int c = class_index(*game_, x);
  if (c < 0) {
    throw Error(ErrorCode::InvalidArgument,
                format_set(game_->es, x) + " is not a configuration of " + game_->name);
  }
  return c;
}

bool Atlas::canonical(int cls) const { return is_canonical(*game_, rep(cls)); }

bool Atlas::all_canonical() const {
  for (int c = 0; c < classes(); ++c)
    if (!canonical(c)) return false;
  return true;
}

std::optional<ConfigIso> Atlas::kappa(EventSet x, Flavor flavor) const {
  EventSet r = rep_for(x);
  if (x == r) return ConfigIso::identity(game_->es.size(), x);
  auto syms = enumerate_symmetries(*game_, flavor, x, r);
  if (syms.empty()) return std::nullopt;
  return *std::min_element(syms.begin(), syms.end());
}

ConfigIso Atlas::kappa(EventSet x) const { return *kappa(x, Flavor::Full); }

ConfigIso Atlas::transport(const ConfigIso& theta, EventSet x, EventSet y) const {
  return compose(inverse(kappa(y)), compose(theta, kappa(x)));
}

ENat operator+(ENat a, ENat b) {
  if (a.inf || b.inf) return ENat::infinity();
  return {false, a.n + b.n};
}

ENat operator*(ENat a, ENat b) {
  bool zero = (!a.inf && a.n == 0) || (!b.inf && b.n == 0);
  if (zero) return {};
  if (a.inf || b.inf) return ENat::infinity();
  return {false, a.n * b.n};
}

std::string ENat::str() const { return inf ? "inf" : std::to_string(n); }

std::vector<EventSet> wit(const Strategy& st, int cls_a, int cls_b) {
  std::vector<EventSet> out;
  for (const auto& c : symmetry_classes(*st.s)) {
    EventSet x = c.members.front();
    if (!is_plus_covered(st.es(), x)) continue;
    if (class_index(*st.a, st.proj_a(x)) != cls_a) continue;
    if (class_index(*st.b, st.proj_b(x)) != cls_b) continue;
    out.push_back(x);
  }
  return out;
}

std::vector<EventSet> wit_plus(const Strategy& st, const Atlas& aa,
                               const Atlas& ab, int cls_a, int cls_b) {
  std::vector<EventSet> out;
  EventSet ra = aa.rep(cls_a), rb = ab.rep(cls_b);
  for (EventSet x : configurations(*st.s)) {
    if (!is_plus_covered(st.es(), x)) continue;
    if (!are_symmetric(*st.a, Flavor::Neg, st.proj_a(x), ra)) continue;
    if (!are_symmetric(*st.b, Flavor::Pos, st.proj_b(x), rb)) continue;
    out.push_back(x);
  }
  return out;
}

std::vector<SWitness> swit_plus(const Strategy& st, const Atlas& aa,
                                const Atlas& ab, int cls_a, int cls_b) {
  std::vector<SWitness> out;
  EventSet ra = aa.rep(cls_a), rb = ab.rep(cls_b);
  for (EventSet x : wit_plus(st, aa, ab, cls_a, cls_b)) {
    auto tas = enumerate_symmetries(*st.a, Flavor::Neg, st.proj_a(x), ra);
    auto tbs = enumerate_symmetries(*st.b, Flavor::Pos, st.proj_b(x), rb);
    for (const auto& ta : tas)
      for (const auto& tb : tbs) out.push_back({ta, x, tb});
  }
  return out;
}

std::vector<PosWitness> swit(const Strategy& st, EventSet rep) {
  std::vector<PosWitness> out;
  for (EventSet x : configurations(*st.s)) {
    if (!is_plus_covered(st.es(), x)) continue;
    EventSet img = st.image(x);
    if (!are_symmetric(*st.game, Flavor::Pos, img, rep)) continue;
    for (auto& th : enumerate_symmetries(*st.game, Flavor::Full, img, rep))
      out.push_back({x, std::move(th)});
  }
  return out;
}

PosWitness swit_to_switplus(const Strategy& st, EventSet rep, const PosWitness& w) {
  const Tcg& g = *st.game;
  std::vector<std::pair<ConfigIso, ConfigIso>> splits;  // (neg, pos)
  for (auto& pos : enumerate_symmetries(g, Flavor::Pos, st.image(w.xs), rep)) {
    ConfigIso neg = compose(w.theta_pos, inverse(pos));
    if (in_family(g, Flavor::Neg, neg)) splits.emplace_back(std::move(neg), std::move(pos));
  }
  if (splits.empty()) {
    throw Error(ErrorCode::NoFactorization,
                format_iso(g.es, w.theta_pos) + " does not split through the representative");
  }
  if (splits.size() > 1) {
    throw Error(ErrorCode::NonUniqueFactorization,
                format_iso(g.es, w.theta_pos) + " splits " + std::to_string(splits.size()) +
                    " ways");
  }
  return act(st, splits.front().first, {w.xs, splits.front().second});
}

FiberReport check_swit_fibers(const Strategy& st, EventSet rep) {
  FiberReport r;
  const Tcg& g = *st.game;
  std::vector<PosWitness> targets;
  for (EventSet x : configurations(*st.s)) {
    if (!is_plus_covered(st.es(), x)) continue;
    for (auto& th : enumerate_symmetries(g, Flavor::Pos, st.image(x), rep))
      targets.push_back({x, std::move(th)});
  }
  r.codomain = targets.size();
  r.neg_group = group_size(g, Flavor::Neg, rep);
  std::vector<std::size_t> fiber(targets.size(), 0);
  auto domain = swit(st, rep);
  r.domain = domain.size();
  for (const auto& w : domain) {
    PosWitness v = swit_to_switplus(st, rep, w);
    auto it = std::find(targets.begin(), targets.end(), v);
    if (it == targets.end()) {
      r.ok = false;
      r.failure = "image of " + format_set(st.es(), w.xs) + " is not a witness";
      return r;
    }
    ++fiber[it - targets.begin()];
  }
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (fiber[i] != r.neg_group) {
      r.ok = false;
      r.failure = format_set(st.es(), targets[i].xs) + " has " + std::to_string(fiber[i]) +
                  " antecedents, expected " + std::to_string(r.neg_group);
      return r;
    }
  }
  return r;
}

std::vector<InteractionState> int_plus(const Interaction& in, const Atlas& aa,
                                       const Atlas& ab, const Atlas& ac,
                                       int cls_a, int cls_b, int cls_c) {
  std::vector<InteractionState> out;
  for (const auto& s : int_plus_ac(in, aa, ac, cls_a, cls_c)) {
    if (are_symmetric(*in.sigma->b, Flavor::Full, in.proj_b(s), ab.rep(cls_b))) {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<InteractionState> int_plus_ac(const Interaction& in, const Atlas& aa,
                                          const Atlas& ac, int cls_a, int cls_c) {
  std::vector<InteractionState> out;
  for (const auto& s : in.states) {
    if (!in.is_plus_covered(s)) continue;
    if (!are_symmetric(*in.sigma->a, Flavor::Neg, in.proj_a(s), aa.rep(cls_a))) continue;
    if (!are_symmetric(*in.tau->b, Flavor::Pos, in.proj_c(s), ac.rep(cls_c))) continue;
    out.push_back(s);
  }
  return out;
}

std::vector<SIntWitness> swint_plus(const Interaction& in, const Atlas& aa,
                                    const Atlas& ab, const Atlas& ac, int cls_a,
                                    int cls_b, int cls_c) {
  std::vector<SIntWitness> out;
  for (const auto& s : int_plus(in, aa, ab, ac, cls_a, cls_b, cls_c)) {
    auto tas = enumerate_symmetries(*in.sigma->a, Flavor::Neg, in.proj_a(s), aa.rep(cls_a));
    auto tcs = enumerate_symmetries(*in.tau->b, Flavor::Pos, in.proj_c(s), ac.rep(cls_c));
    for (const auto& ta : tas)
      for (const auto& tc : tcs) out.push_back({ta, s, tc});
  }
  return out;
}

ConfigIso link_b(const SWitness& ws, const SWitness& wt) {
  return compose(inverse(wt.theta_a), ws.theta_b);
}

std::vector<std::pair<SWitness, SWitness>> compatible_pairs(
    const Strategy& sigma, const Strategy& tau, const std::vector<SWitness>& ws,
    const std::vector<SWitness>& wt) {
  std::vector<std::pair<SWitness, SWitness>> out;
  for (const auto& s : ws) {
    for (const auto& t : wt) {
      if (s.theta_b.dst != t.theta_a.dst) continue;
      if (is_secured(sigma, tau, s.xs, t.xs, link_b(s, t))) out.emplace_back(s, t);
    }
  }
  return out;
}

UpsilonImage upsilon(const Strategy& sigma, const Strategy& tau, const Atlas& ab,
                     const SWitness& ws, const SWitness& wt) {
  const Tcg& ga = *sigma.a;
  const Tcg& gc = *tau.b;
  SyncReport sync = weak_bipullback(sigma, tau, ws.xs, wt.xs, link_b(ws, wt));
  std::vector<UpsilonImage> found;
  for (const auto& sol : sync.solutions) {
    ConfigIso omega = sigma.push(sol.theta_s);
    ConfigIso nu = tau.push(inverse(sol.theta_t));
    ConfigIso psi_a = compose(ws.theta_a, inverse(part_a(sigma, omega)));
    if (!in_family(ga, Flavor::Neg, psi_a)) continue;
    ConfigIso psi_c = compose(wt.theta_b, inverse(part_b(tau, nu)));
    if (!in_family(gc, Flavor::Pos, psi_c)) continue;
    ConfigIso big_theta = compose(part_b(sigma, omega), inverse(ws.theta_b));
    ConfigIso phi = compose(ab.kappa(big_theta.dst), big_theta);
    found.push_back({{psi_a, {sol.ys, sol.yt}, psi_c}, phi});
  }
  if (found.empty()) {
    throw Error(ErrorCode::NoSolution, "no polarised synchronisation of " +
                                           format_set(sigma.es(), ws.xs) + " and " +
                                           format_set(tau.es(), wt.xs));
  }
  if (found.size() > 1) {
    throw Error(ErrorCode::NonUnique, std::to_string(found.size()) +
                                          " polarised synchronisations of " +
                                          format_set(sigma.es(), ws.xs) + " and " +
                                          format_set(tau.es(), wt.xs));
  }
  return found.front();
}

std::pair<SWitness, SWitness> upsilon_inverse(const Strategy& sigma,
                                              const Strategy& tau, const Atlas& ab,
                                              const UpsilonImage& img) {
  const InteractionState& y = img.witness.state;
  EventSet yb = sigma.proj_b(y.xs);
  ConfigIso big_theta_inv = inverse(compose(inverse(ab.kappa(yb)), img.phi));

  std::vector<SWitness> ss;
  for (const auto& rho : symmetries_from(*sigma.s, Flavor::Full, y.xs)) {
    ConfigIso omega = sigma.push(inverse(rho));
    ConfigIso ta = compose(img.witness.theta_a, part_a(sigma, omega));
    if (!in_family(*sigma.a, Flavor::Neg, ta)) continue;
    ConfigIso tb = compose(big_theta_inv, part_b(sigma, omega));
    if (!in_family(*sigma.b, Flavor::Pos, tb)) continue;
    ss.push_back({ta, rho.dst, tb});
  }
  std::vector<SWitness> ts;
  for (const auto& rho : symmetries_from(*tau.s, Flavor::Full, y.xt)) {
    ConfigIso nu = tau.push(inverse(rho));
    ConfigIso tb = compose(big_theta_inv, part_a(tau, nu));
    if (!in_family(*tau.a, Flavor::Neg, tb)) continue;
    ConfigIso tc = compose(img.witness.theta_c, part_b(tau, nu));
    if (!in_family(*tau.b, Flavor::Pos, tc)) continue;
    ts.push_back({tb, rho.dst, tc});
  }
  if (ss.size() != 1 || ts.size() != 1) {
    throw Error(ss.empty() || ts.empty() ? ErrorCode::NoSolution : ErrorCode::NonUnique,
                "inverse synchronisation has " + std::to_string(ss.size()) + " and " +
                    std::to_string(ts.size()) + " solutions");
  }
  return {ss.front(), ts.front()};
}

UpsilonReport check_upsilon(const Strategy& sigma, const Strategy& tau,
                            const Interaction& in, const Atlas& aa, const Atlas& ab,
                            const Atlas& ac, int cls_a, int cls_b, int cls_c) {
  UpsilonReport r;
  auto pairs = compatible_pairs(sigma, tau, swit_plus(sigma, aa, ab, cls_a, cls_b),
                                swit_plus(tau, ab, ac, cls_b, cls_c));
  auto wints = swint_plus(in, aa, ab, ac, cls_a, cls_b, cls_c);
  auto sym_b = endo_group(*ab.game(), Flavor::Full, ab.rep(cls_b)).elements;
  r.domain = pairs.size();
  r.codomain = wints.size() * sym_b.size();
  auto fail = [](const std::string& why) {
    throw Error(ErrorCode::BijectionFailure, why);
  };
  std::vector<UpsilonImage> images;
  for (const auto& p : pairs) {
    UpsilonImage img = upsilon(sigma, tau, ab, p.first, p.second);
    std::string where = format_set(sigma.es(), p.first.xs) + " | " +
                        format_set(tau.es(), p.second.xs);
    if (!contains(wints, img.witness) || !contains(sym_b, img.phi)) {
      fail("image of " + where + " lies outside the codomain");
    }
    if (contains(images, img)) fail("two pairs share the image of " + where);
    if (!(upsilon_inverse(sigma, tau, ab, img) == p)) {
      fail("inverse does not return " + where);
    }
    images.push_back(img);
    r.table.emplace_back(p, std::move(img));
  }
  for (const auto& w : wints) {
    for (const auto& phi : sym_b) {
      UpsilonImage img{w, phi};
      auto p = upsilon_inverse(sigma, tau, ab, img);
      if (!contains(pairs, p) || !(upsilon(sigma, tau, ab, p.first, p.second) == img)) {
        fail("round trip fails from " + format_set(in.sigma->es(), w.state.xs) + " | " +
             format_set(in.tau->es(), w.state.xt) + " with " +
             format_iso(ab.game()->es, phi));
      }
    }
  }
  return r;
}

PairCountReport check_pair_counts(const Strategy& sigma, const Strategy& tau,
                                  const Interaction& in, const Atlas& aa,
                                  const Atlas& ab, const Atlas& ac) {
  PairCountReport r;
  for (int b = 0; b < ab.classes(); ++b) {
    std::size_t sym_b = group_size(*ab.game(), Flavor::Full, ab.rep(b));
    for (int a = 0; a < aa.classes(); ++a) {
      auto ws = swit_plus(sigma, aa, ab, a, b);
      for (int c = 0; c < ac.classes(); ++c) {
        auto wt = swit_plus(tau, ab, ac, b, c);
        std::size_t lhs = ws.empty() || wt.empty() ? 0 : compatible_pairs(sigma, tau, ws, wt).size();
        std::size_t rhs = swint_plus(in, aa, ab, ac, a, b, c).size() * sym_b;
        if (lhs == 0 && rhs == 0) continue;
        ++r.triples;
        if (lhs != rhs && r.ok) {
          r.ok = false;
          std::ostringstream os;
          os << "classes (" << a << ", " << b << ", " << c << "): " << lhs
             << " compatible pairs, " << rhs << " expected";
          r.failure = os.str();
        }
      }
    }
  }
  return r;
}

WeightedRelation collapse(const Strategy& st, const Atlas& aa, const Atlas& ab,
                          const Limits& limits) {
  WeightedRelation m;
  for (int i = 0; i < aa.classes(); ++i) m.rows.push_back(aa.rep(i));
  for (int j = 0; j < ab.classes(); ++j) m.cols.push_back(ab.rep(j));
  m.entries.assign(m.rows.size(), std::vector<ENat>(m.cols.size()));
  for (EventSet x : configurations(*st.s)) {
    if (!is_plus_covered(st.es(), x)) continue;
    EventSet xa = st.proj_a(x), xb = st.proj_b(x);
    int i = aa.class_of(xa), j = ab.class_of(xb);
    if (!are_symmetric(*st.a, Flavor::Neg, xa, m.rows[i])) continue;
    if (!are_symmetric(*st.b, Flavor::Pos, xb, m.cols[j])) continue;
    ENat& e = m.entries[i][j];
    if (!e.inf && ++e.n > limits.config_cap) e = ENat::infinity();
  }
  return m;
}

WeightedRelation matrix_compose(const WeightedRelation& r, const WeightedRelation& s) {
  if (r.cols != s.rows) {
    throw Error(ErrorCode::DimensionMismatch,
                "inner classes differ: " + std::to_string(r.cols.size()) + " vs " +
                    std::to_string(s.rows.size()));
  }
  WeightedRelation m;
  m.rows = r.rows;
  m.cols = s.cols;
  m.entries.assign(m.rows.size(), std::vector<ENat>(m.cols.size()));
  for (std::size_t a = 0; a < m.rows.size(); ++a)
    for (std::size_t b = 0; b < r.cols.size(); ++b)
      for (std::size_t c = 0; c < m.cols.size(); ++c)
        m.entries[a][c] = m.entries[a][c] + r.entries[a][b] * s.entries[b][c];
  return m;
}

namespace {

// Per +-covered configuration: its classes and the number of polarised
// symmetries to the representatives.
struct WitRow {
  int ca = 0, cb = 0;
  std::size_t neg_a = 0, pos_b = 0;
};

std::vector<WitRow> wit_rows(const Strategy& st, const Atlas& aa, const Atlas& ab) {
  std::vector<WitRow> rows;
  for (EventSet x : configurations(*st.s)) {
    if (!is_plus_covered(st.es(), x)) continue;
    WitRow w;
    EventSet xa = st.proj_a(x), xb = st.proj_b(x);
    w.ca = aa.class_of(xa);
    w.cb = ab.class_of(xb);
    w.neg_a = count_syms(*st.a, Flavor::Neg, xa, aa.rep(w.ca));
    w.pos_b = count_syms(*st.b, Flavor::Pos, xb, ab.rep(w.cb));
    if (w.neg_a > 0 && w.pos_b > 0) rows.push_back(w);
  }
  return rows;
}

struct IntRow {
  int ca = 0, cb = 0, cc = 0;
  std::size_t neg_a = 0, pos_c = 0;
  bool in_b = false;
};

std::vector<IntRow> int_rows(const Interaction& in, const Atlas& aa, const Atlas& ab,
                             const Atlas& ac) {
  std::vector<IntRow> rows;
  for (const auto& s : in.states) {
    if (!in.is_plus_covered(s)) continue;
    IntRow w;
    EventSet xa = in.proj_a(s), xb = in.proj_b(s), xc = in.proj_c(s);
    w.ca = aa.class_of(xa);
    w.cb = ab.class_of(xb);
    w.cc = ac.class_of(xc);
    w.neg_a = count_syms(*in.sigma->a, Flavor::Neg, xa, aa.rep(w.ca));
    w.pos_c = count_syms(*in.tau->b, Flavor::Pos, xc, ac.rep(w.cc));
    w.in_b = are_symmetric(*in.sigma->b, Flavor::Full, xb, ab.rep(w.cb));
    if (w.neg_a > 0 && w.pos_c > 0) rows.push_back(w);
  }
  return rows;
}

const char* step_name(int k) {
  switch (k) {
    case 5: return "pcov bijection";
    case 6: return "partition of interactions";
    case 7: return "symmetries on interactions";
    case 8: return "main bijection";
    case 9: return "symmetries on witnesses";
    case 10: return "canonical representative";
    case 11: return "matrix product";
    default: return "?";
  }
}

}  // namespace

std::string TheoremReport::describe_failure() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    if (e.first_break == 0) continue;
    os << "classes (" << e.cls_a << ", " << e.cls_c << "): step " << e.first_break << " ("
       << step_name(e.first_break) << ") gives " << e.eq[e.first_break] << " after "
       << e.eq[e.first_break - 1] << "; chain";
    for (int k = 4; k <= 11; ++k) os << ' ' << e.eq[k];
    return os.str();
  }
  return {};
}

TheoremReport check_theorem(const StrategyPtr& sigma, const StrategyPtr& tau,
                            const Atlas& aa, const Atlas& ab, const Atlas& ac) {
  TheoremReport r;
  r.deadlock_free = no_deadlock(*sigma, *tau).ok;
  r.b_representable = is_representable(*ab.game()).representable;
  Composition comp = compose(sigma, tau);
  const Interaction& in = *comp.inter;

  auto rs = wit_rows(*sigma, aa, ab);
  auto rt = wit_rows(*tau, ab, ac);
  auto rc = wit_rows(*comp.strategy, aa, ac);
  auto ri = int_rows(in, aa, ab, ac);
  WeightedRelation prod = matrix_compose(collapse(*sigma, aa, ab), collapse(*tau, ab, ac));

  const int nb = ab.classes();
  std::vector<std::int64_t> sym_b(nb), pos_b(nb), neg_b(nb);
  for (int b = 0; b < nb; ++b) {
    sym_b[b] = group_size(*ab.game(), Flavor::Full, ab.rep(b));
    pos_b[b] = group_size(*ab.game(), Flavor::Pos, ab.rep(b));
    neg_b[b] = group_size(*ab.game(), Flavor::Neg, ab.rep(b));
  }

  for (int a = 0; a < aa.classes(); ++a) {
    std::int64_t neg_a = group_size(*aa.game(), Flavor::Neg, aa.rep(a));
    for (int c = 0; c < ac.classes(); ++c) {
      std::int64_t pos_c = group_size(*ac.game(), Flavor::Pos, ac.rep(c));
      TheoremEntry e;
      e.cls_a = a;
      e.cls_c = c;
      std::int64_t n4 = 0, n5 = 0;
      for (const auto& w : rc)
        if (w.ca == a && w.cb == c) ++n4;
      std::vector<std::int64_t> n6(nb), n7(nb), ws(nb), wt(nb), sws(nb), swt(nb);
      for (const auto& w : ri) {
        if (w.ca != a || w.cc != c) continue;
        ++n5;
        if (!w.in_b) continue;
        ++n6[w.cb];
        n7[w.cb] += static_cast<std::int64_t>(w.neg_a * w.pos_c);
      }
      for (const auto& w : rs) {
        if (w.ca != a) continue;
        ++ws[w.cb];
        sws[w.cb] += static_cast<std::int64_t>(w.neg_a * w.pos_b);
      }
      for (const auto& w : rt) {
        if (w.cb != c) continue;
        ++wt[w.ca];
        swt[w.ca] += static_cast<std::int64_t>(w.neg_a * w.pos_b);
      }
      e.eq[4] = n4;
      e.eq[5] = n5;
      for (int b = 0; b < nb; ++b) {
        e.eq[6] += n6[b];
        e.eq[7] += Rational(n7[b], neg_a * pos_c);
        e.eq[8] += Rational(sws[b] * swt[b], neg_a * sym_b[b] * pos_c);
        e.eq[9] += Rational(pos_b[b] * neg_b[b], sym_b[b]) * (ws[b] * wt[b]);
        e.eq[10] += ws[b] * wt[b];
      }
      ENat p = prod.at(a, c);
      e.eq[11] = p.inf ? -1 : static_cast<std::int64_t>(p.n);
      for (int k = 5; k <= 11; ++k) {
        if (e.eq[k] != e.eq[k - 1]) {
          e.first_break = k;
          r.holds = false;
          break;
        }
      }
      if (e.eq[4] == Rational(0) && e.eq[11] == Rational(0) && e.first_break == 0) continue;
      r.entries.push_back(e);
    }
  }
  return r;
}

WitReport check_wit_vs_witplus(const StrategyPtr& sigma, const StrategyPtr& tau,
                               const Atlas& aa, const Atlas& ab, const Atlas& ac) {
  WitReport r;
  Composition comp = compose(sigma, tau);
  TheoremReport th = check_theorem(sigma, tau, aa, ab, ac);
  r.plus_agrees = th.holds;
  for (int a = 0; a < aa.classes(); ++a) {
    for (int c = 0; c < ac.classes(); ++c) {
      WitComparison w;
      w.cls_a = a;
      w.cls_c = c;
      w.composite_classes = wit(*comp.strategy, a, c).size();
      w.composite_plus = wit_plus(*comp.strategy, aa, ac, a, c).size();
      for (int b = 0; b < ab.classes(); ++b) {
        w.product_sum += wit(*sigma, a, b).size() * wit(*tau, b, c).size();
        w.product_plus_sum += wit_plus(*sigma, aa, ab, a, b).size() *
                              wit_plus(*tau, ab, ac, b, c).size();
      }
      if (w.composite_classes == 0 && w.product_sum == 0 && w.composite_plus == 0) continue;
      if (w.composite_classes != w.product_sum) r.classes_mismatch = true;
      r.rows.push_back(w);
    }
  }
  auto scan = [&](const Strategy& st, const Atlas& x, const Atlas& y) {
    for (EventSet s : configurations(*st.s)) {
      if (!is_plus_covered(st.es(), s)) continue;
      EventSet xa = st.proj_a(s), xb = st.proj_b(s);
      EventSet ra = x.rep_for(xa), rb = y.rep_for(xb);
      if (!are_symmetric(*st.a, Flavor::Neg, xa, ra)) continue;
      if (!are_symmetric(*st.b, Flavor::Pos, xb, rb)) continue;
      if (xa != ra || xb != rb) r.noncanonical_witness = true;
    }
  };
  scan(*sigma, aa, ab);
  scan(*tau, ab, ac);
  return r;
}

}  // namespace cgame
