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
#include <fstream>
#include <functional>
#include <sstream>

#include "cgame/commands.hpp"
#include "cgame/fixtures.hpp"

namespace cgame {

namespace {

std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++n;
  return n;
}

class Table {
 public:
  explicit Table(std::vector<std::string> head) { rows_.push_back(std::move(head)); }
  void row(std::vector<std::string> r) { rows_.push_back(std::move(r)); }
  bool empty() const { return rows_.size() == 1; }

  std::string str() const {
    std::vector<std::size_t> w;
    for (const auto& r : rows_) {
      if (w.size() < r.size()) w.resize(r.size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], display_width(r[i]));
    }
    std::ostringstream os;
    for (const auto& r : rows_) {
      std::string line;
      for (std::size_t i = 0; i < r.size(); ++i) {
        line += r[i];
        if (i + 1 < r.size()) line += std::string(w[i] - display_width(r[i]) + 2, ' ');
      }
      os << "  " << line << '\n';
    }
    return os.str();
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

std::string rat_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string eq_str(const Rational& r) { return r < Rational(0) ? "inf" : rat_str(r); }

// Label of e with the multiset of its subtrees inside x, "q(a, a)".
std::string render_tree(const EventStructure& es, EventSet x, EventId e) {
  std::vector<std::string> kids;
  for_each_event(es.succs(e) & x, [&](EventId c) { kids.push_back(render_tree(es, x, c)); });
  std::sort(kids.begin(), kids.end());
  std::string s = es.label(e);
  if (kids.empty()) return s;
  s += "(";
  for (std::size_t i = 0; i < kids.size(); ++i) s += (i ? ", " : "") + kids[i];
  return s + ")";
}

// Collects assertions of a repro run.
struct Claims {
  CommandResult out;
  std::string fixture;

  void add(const std::string& claim, bool ok, const std::string& detail) {
    out.text += pass_fail(ok) + "  " + claim;
    if (!detail.empty()) out.text += " (" + detail + ")";
    out.text += '\n';
    out.records.push_back({{"cmd", "repro"},
                           {"fixture", fixture},
                           {"claim", claim},
                           {"result", pass_fail(ok)},
                           {"detail", detail}});
    if (!ok) out.exit_code = kExitCheckFailed;
  }
};

struct Triple {
  Atlas a, b, c;
};

Triple atlases(const Scenario& sc, const Strategy& sigma, const Strategy& tau,
               const CommandOptions& opt,
               const std::map<std::string, EventSet>& extra = {}) {
  return {make_atlas(sc, sigma.a, opt, extra), make_atlas(sc, sigma.b, opt, extra),
          make_atlas(sc, tau.b, opt, extra)};
}

}  // namespace

void CommandResult::merge(const CommandResult& other) {
  exit_code = std::max(exit_code, other.exit_code);
  text += other.text;
  records.insert(records.end(), other.records.begin(), other.records.end());
}

std::string rebound_scenario(const Scenario& sc, int k) {
  Scenario copy = sc;
  std::function<void(Expr&)> walk = [&](Expr& e) {
    if (e.call && (e.head == "bang_ajm" || e.head == "bang_ho") && e.args.size() == 2) {
      e.args[1] = Expr{std::to_string(k), {}, false};
    }
    for (auto& a : e.args) walk(a);
  };
  for (auto& g : copy.game_decls)
    if (g.is_expr) walk(g.expr);
  return print_scenario(copy);
}

Scenario load_scenario(const std::string& source, const CommandOptions& opt) {
  Scenario sc = is_fixture(source) ? fixture(source) : load_scenario_file(source);
  if (opt.bound) {
    if (*opt.bound < 1) throw Error(ErrorCode::InvalidArgument, "bound must be positive");
    sc = parse_scenario(rebound_scenario(sc, *opt.bound));
  }
  return sc;
}

std::string describe_class(const Atlas& atlas, int cls) {
  const EventStructure& es = atlas.game()->es;
  EventSet x = atlas.rep(cls);
  std::vector<std::string> trees;
  for_each_event(x, [&](EventId e) {
    if ((es.preds(e) & x) == 0) trees.push_back(render_tree(es, x, e));
  });
  std::sort(trees.begin(), trees.end());
  std::string s = "#" + std::to_string(cls) + " ";
  if (trees.empty()) return s + "∅";
  s += "[";
  for (std::size_t i = 0; i < trees.size(); ++i) s += (i ? ", " : "") + trees[i];
  return s + "]";
}

Atlas make_atlas(const Scenario& sc, const TcgPtr& game, const CommandOptions& opt,
                 const std::map<std::string, EventSet>& extra) {
  Atlas atlas = Atlas::automatic(game, opt.strict);
  for (const auto* m : {&opt.reps, &extra}) {
    for (const auto& [name, x] : *m)
      if (sc.game(name) == game) atlas = atlas.with_rep(x);
  }
  return atlas;
}

std::pair<std::string, EventSet> parse_rep_override(const Scenario& sc,
                                                    const std::string& word) {
  auto eq = word.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == word.size()) {
    throw Error(ErrorCode::InvalidArgument, "expected GAME=CONFIG, got '" + word + "'");
  }
  std::string g = word.substr(0, eq), c = word.substr(eq + 1);
  sc.game(g);
  const ConfigDecl& d = sc.config_decl(c);
  if (sc.games.count(d.owner) == 0 || sc.game(d.owner) != sc.game(g)) {
    throw Error(ErrorCode::InvalidArgument, "configuration " + c + " is not on game " + g);
  }
  return {g, sc.config(c)};
}

std::map<std::string, EventSet> load_atlas_file(const Scenario& sc, const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::map<std::string, EventSet> out;
  std::string line;
  int no = 0;
  while (std::getline(f, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ss(line);
    std::vector<std::string> words;
    for (std::string w; ss >> w;) words.push_back(w);
    if (words.empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorCode::ParseError, path + ": line " + std::to_string(no) + ": " + msg);
    };
    if (words.size() < 3 || (words[1] != "=" && words[1] != ":")) {
      fail("expected 'G = config' or 'G : events'");
    }
    if (sc.games.count(words[0]) == 0) fail("unknown game " + words[0]);
    if (words[1] == "=") {
      if (words.size() != 3) fail("expected a single configuration name");
      try {
        out[words[0]] = parse_rep_override(sc, words[0] + "=" + words[2]).second;
      } catch (const Error& e) {
        fail(e.what());
      }
      continue;
    }
    const EventStructure& es = sc.game(words[0])->es;
    EventSet x = 0;
    for (std::size_t i = 2; i < words.size(); ++i) {
      EventId e = es.find(words[i]);
      if (e < 0) fail("unknown event " + words[i]);
      x |= bit(e);
    }
    if (!es.is_configuration(x)) fail("not a configuration of " + words[0]);
    out[words[0]] = x;
  }
  return out;
}

CommandResult cmd_validate(const Scenario& sc, const std::vector<std::string>& names,
                           const CommandOptions& opt) {
  CommandResult r;
  std::vector<std::string> games, strategies;
  if (names.empty()) {
    for (const auto& [kind, i] : sc.decl_order) {
      if (kind == 'G') games.push_back(sc.game_decls[i].name);
      if (kind == 'S') strategies.push_back(sc.strategy_decls[i].name);
    }
  }
  for (const auto& n : names) {
    if (sc.games.count(n)) {
      games.push_back(n);
    } else {
      sc.strategy(n);
      strategies.push_back(n);
    }
  }
  auto record = [&](const std::string& kind, const std::string& name,
                    const std::string& check, bool ok, const std::string& detail,
                    bool counts) {
    r.records.push_back({{"cmd", "validate"},
                         {"kind", kind},
                         {"name", name},
                         {"check", check},
                         {"result", pass_fail(ok)},
                         {"detail", detail}});
    if (!ok && counts) r.exit_code = kExitCheckFailed;
  };
  Table t({"kind", "name", "check", "result", "detail"});
  auto row = [&](const std::string& kind, const std::string& name, const std::string& check,
                 bool ok, const std::string& detail, bool counts) {
    t.row({kind, name, check, pass_fail(ok), detail});
    record(kind, name, check, ok, detail, counts);
  };
  for (const auto& n : games) {
    TcgPtr g = sc.game(n);
    FamilyReport fam = check_family_axioms(*g, opt.limits);
    row("game", n, "family axioms", fam.ok, fam.violation, true);
    FamilyReport pol = check_polar_intersection(*g, opt.limits);
    row("game", n, "polar intersection", pol.ok, pol.violation, true);
    FamilyReport fac = check_factorization(*g, opt.limits);
    row("game", n, "factorization", fac.ok, fac.violation, true);
    Representability rep = is_representable(*g);
    std::string detail;
    if (!rep.representable) {
      detail = "classes without canonical member:";
      for (int c : rep.classes_without_canonical) detail += " " + std::to_string(c);
    } else {
      detail = std::to_string(symmetry_classes(*g).size()) + " classes";
    }
    row("game", n, "representable", rep.representable, detail, opt.strict);
  }
  for (const auto& n : strategies) {
    StrategyPtr st = sc.strategy(n);
    StrategyReport rep = validate_strategy(*st, opt.limits);
    std::string detail;
    for (const auto& i : rep.issues) detail += (detail.empty() ? "" : "; ") + i.axiom + ": " + i.message;
    if (rep.ok()) detail = std::to_string(st->es().size()) + " events";
    row("strategy", n, "axioms", rep.ok(), detail, true);
  }
  r.text = "validate" + std::string(opt.strict ? " (strict)" : "") + "\n" + t.str();
  r.records.push_back({{"cmd", "validate"}, {"exit", std::to_string(r.exit_code)}});
  return r;
}

CommandResult cmd_classes(const Scenario& sc, const std::string& game,
                          const CommandOptions& opt) {
  CommandResult r;
  TcgPtr g = sc.game(game);
  Atlas atlas = make_atlas(sc, g, opt);
  const auto& classes = symmetry_classes(*g);
  Table t({"class", "size", "representative", "canonical", "|Sym|", "|Sym-|", "|Sym+|"});
  for (int c = 0; c < atlas.classes(); ++c) {
    EventSet x = atlas.rep(c);
    std::string full = std::to_string(endo_group(*g, Flavor::Full, x).size());
    std::string neg = std::to_string(endo_group(*g, Flavor::Neg, x).size());
    std::string pos = std::to_string(endo_group(*g, Flavor::Pos, x).size());
    std::string desc = describe_class(atlas, c);
    std::string size = std::to_string(classes[c].members.size());
    std::string canon = yes_no(atlas.canonical(c));
    t.row({desc, size, format_set(g->es, x), canon, full, neg, pos});
    r.records.push_back({{"cmd", "classes"},
                         {"game", game},
                         {"class", std::to_string(c)},
                         {"description", desc},
                         {"members", size},
                         {"rep", format_set(g->es, x)},
                         {"canonical", canon},
                         {"sym", full},
                         {"sym_neg", neg},
                         {"sym_pos", pos}});
  }
  r.text = "classes of " + game + ": " + std::to_string(atlas.classes()) + "\n" + t.str();
  return r;
}

CommandResult cmd_canonical(const Scenario& sc, const std::string& game,
                            const std::string& config, const CommandOptions&) {
  CommandResult r;
  TcgPtr g = sc.game(game);
  EventSet x = parse_rep_override(sc, game + "=" + config).second;
  bool canon = is_canonical(*g, x);
  EndoGroup full = endo_group(*g, Flavor::Full, x);
  std::size_t neg = endo_group(*g, Flavor::Neg, x).size();
  std::size_t pos = endo_group(*g, Flavor::Pos, x).size();
  std::ostringstream os;
  os << "canonical " << game << ' ' << config << " = " << format_set(g->es, x) << '\n';
  os << "  class " << class_index(*g, x) << ", |Sym| = " << full.size() << ", |Sym-| = " << neg
     << ", |Sym+| = " << pos << '\n';
  os << "  canonical: " << yes_no(canon) << '\n';
  Record rec{{"cmd", "canonical"},
             {"game", game},
             {"config", config},
             {"canonical", yes_no(canon)},
             {"sym", std::to_string(full.size())},
             {"sym_neg", std::to_string(neg)},
             {"sym_pos", std::to_string(pos)}};
  for (const auto& f : full.elements) {
    auto fs = all_factorizations(*g, f);
    if (fs.size() == 1 && fs[0].mid == x) continue;
    os << "  endosymmetry " << format_iso(g->es, f) << '\n';
    if (fs.empty()) {
      os << "    no factorization\n";
      rec.push_back({"witness", "none"});
    } else {
      for (const auto& fa : fs) os << "    factors through " << format_set(g->es, fa.mid) << '\n';
      rec.push_back({"witness", format_iso(g->es, f)});
      rec.push_back({"through", format_set(g->es, fs[0].mid)});
    }
    break;
  }
  r.text = os.str();
  r.records.push_back(std::move(rec));
  return r;
}

namespace {

CommandResult collapse_table(const Scenario& sc, const Strategy& st, const std::string& what,
                             const CommandOptions& opt) {
  CommandResult r;
  Atlas aa = make_atlas(sc, st.a, opt), ab = make_atlas(sc, st.b, opt);
  WeightedRelation m = collapse(st, aa, ab, opt.limits);
  auto heading = [&](const TcgPtr& g, const char* fallback) {
    for (const auto& [name, game] : sc.games)
      if (game == g) return name + " class";
    return std::string(fallback);
  };
  Table t({heading(st.a, "source class"), heading(st.b, "target class"), "weight"});
  for (int a = 0; a < aa.classes(); ++a) {
    for (int b = 0; b < ab.classes(); ++b) {
      ENat v = m.at(a, b);
      if (!v.inf && v.n == 0) continue;
      t.row({describe_class(aa, a), describe_class(ab, b), v.str()});
      r.records.push_back({{"cmd", "collapse"},
                           {"strategy", what},
                           {"row", std::to_string(a)},
                           {"col", std::to_string(b)},
                           {"row_class", describe_class(aa, a)},
                           {"col_class", describe_class(ab, b)},
                           {"weight", v.str()}});
    }
  }
  std::ostringstream os;
  os << "collapse of " << what << ": " << aa.classes() << " x " << ab.classes()
     << " classes, nonzero entries below\n";
  if (!aa.all_canonical() || !ab.all_canonical()) os << "  warning: non-canonical representatives\n";
  r.text = os.str() + t.str();
  return r;
}

}  // namespace

CommandResult cmd_collapse(const Scenario& sc, const std::string& strategy,
                           const CommandOptions& opt) {
  return collapse_table(sc, *sc.strategy(strategy), strategy, opt);
}

CommandResult cmd_compose(const Scenario& sc, const std::string& sigma,
                          const std::string& tau, const CommandOptions& opt) {
  CommandResult r;
  StrategyPtr s = sc.strategy(sigma), t = sc.strategy(tau);
  Composition comp = compose(s, t, opt.limits);
  const Strategy& st = *comp.strategy;
  PcovReport pc = pcov_bijection(comp);
  DeadlockReport dl = no_deadlock(*s, *t, opt.limits);
  std::ostringstream os;
  std::string name = tau + "." + sigma;
  os << "compose " << name << '\n';
  os << "  interaction states: " << comp.inter->states.size() << '\n';
  os << "  composite events: " << st.es().size() << ", configurations: "
     << configurations(*st.s).size() << '\n';
  Table ev({"event", "polarity", "plays"});
  for (EventId e = 0; e < st.es().size(); ++e) {
    EventId l = st.label[e];
    std::string plays = l < st.a_size() ? "A:" + st.a->es.name(l)
                                        : "B:" + st.b->es.name(l - st.a_size());
    ev.row({st.es().name(e), std::string(1, polarity_char(st.es().polarity(e))), plays});
  }
  os << ev.str();
  std::size_t conflicts = st.es().minimal_conflicts().size();
  os << "  minimal conflicts: " << conflicts << '\n';
  os << "  +-covered bijection: " << pass_fail(pc.ok) << " (" << pc.interaction_count
     << " interactions, " << pc.composition_count << " configurations)";
  if (!pc.ok) os << ": " << pc.failure;
  os << '\n';
  os << "  deadlock free: " << yes_no(dl.ok) << '\n';
  if (!pc.ok) r.exit_code = kExitCheckFailed;
  r.text = os.str();
  r.records.push_back({{"cmd", "compose"},
                       {"sigma", sigma},
                       {"tau", tau},
                       {"states", std::to_string(comp.inter->states.size())},
                       {"events", std::to_string(st.es().size())},
                       {"configurations", std::to_string(configurations(*st.s).size())},
                       {"minimal_conflicts", std::to_string(conflicts)},
                       {"pcov", pass_fail(pc.ok)},
                       {"deadlock_free", yes_no(dl.ok)}});
  return r;
}

namespace {

CommandResult theorem_report(const Scenario& sc, const std::string& sigma,
                             const std::string& tau, const CommandOptions& opt,
                             const std::map<std::string, EventSet>& extra) {
  CommandResult r;
  StrategyPtr s = sc.strategy(sigma), t = sc.strategy(tau);
  Triple at = atlases(sc, *s, *t, opt, extra);
  TheoremReport th = check_theorem(s, t, at.a, at.b, at.c);
  std::ostringstream os;
  os << "check-theorem " << sigma << ' ' << tau;
  for (const auto& [g, x] : extra) os << ' ' << g << '=' << format_set(sc.game(g)->es, x);
  os << '\n';
  os << "  deadlock free: " << yes_no(th.deadlock_free)
     << ", B representable: " << yes_no(th.b_representable)
     << ", B atlas canonical: " << yes_no(at.b.all_canonical()) << '\n';
  Table tb({"A class", "C class", "eq4", "eq5", "eq6", "eq7", "eq8", "eq9", "eq10", "eq11",
            "break"});
  for (const auto& e : th.entries) {
    std::vector<std::string> row{describe_class(at.a, e.cls_a), describe_class(at.c, e.cls_c)};
    Record rec{{"cmd", "check-theorem"},
               {"sigma", sigma},
               {"tau", tau},
               {"cls_a", std::to_string(e.cls_a)},
               {"cls_c", std::to_string(e.cls_c)}};
    for (int k = 4; k <= 11; ++k) {
      row.push_back(eq_str(e.eq[k]));
      rec.push_back({"eq" + std::to_string(k), eq_str(e.eq[k])});
    }
    row.push_back(e.first_break ? std::to_string(e.first_break) : "-");
    rec.push_back({"break", std::to_string(e.first_break)});
    tb.row(std::move(row));
    r.records.push_back(std::move(rec));
  }
  os << tb.str();
  os << "  verdict: " << pass_fail(th.holds);
  if (!th.holds) os << ", " << th.describe_failure();
  os << '\n';
  r.text = os.str();
  r.records.push_back({{"cmd", "check-theorem"},
                       {"sigma", sigma},
                       {"tau", tau},
                       {"deadlock_free", yes_no(th.deadlock_free)},
                       {"verdict", pass_fail(th.holds)},
                       {"failure", th.describe_failure()}});
  if (!th.holds) r.exit_code = kExitCheckFailed;
  return r;
}

}  // namespace

CommandResult cmd_check_theorem(const Scenario& sc, const std::string& sigma,
                                const std::string& tau, const CommandOptions& opt) {
  return theorem_report(sc, sigma, tau, opt, {});
}

CommandResult cmd_wit(const Scenario& sc, const std::string& sigma, const std::string& tau,
                      const CommandOptions& opt) {
  CommandResult r;
  StrategyPtr s = sc.strategy(sigma), t = sc.strategy(tau);
  Triple at = atlases(sc, *s, *t, opt);
  WitReport w = check_wit_vs_witplus(s, t, at.a, at.b, at.c);
  Table tb({"A class", "C class", "wit", "sum wit.wit", "wit+", "sum wit+.wit+"});
  for (const auto& row : w.rows) {
    tb.row({describe_class(at.a, row.cls_a), describe_class(at.c, row.cls_c),
            std::to_string(row.composite_classes), std::to_string(row.product_sum),
            std::to_string(row.composite_plus), std::to_string(row.product_plus_sum)});
    r.records.push_back({{"cmd", "wit"},
                         {"sigma", sigma},
                         {"tau", tau},
                         {"cls_a", std::to_string(row.cls_a)},
                         {"cls_c", std::to_string(row.cls_c)},
                         {"wit", std::to_string(row.composite_classes)},
                         {"wit_product", std::to_string(row.product_sum)},
                         {"wit_plus", std::to_string(row.composite_plus)},
                         {"wit_plus_product", std::to_string(row.product_plus_sum)}});
  }
  std::ostringstream os;
  os << "wit " << sigma << ' ' << tau << '\n' << tb.str();
  os << "  symmetry-class witnesses compose: " << yes_no(!w.classes_mismatch) << '\n';
  os << "  wit+ compose: " << yes_no(w.plus_agrees) << '\n';
  r.text = os.str();
  r.records.push_back({{"cmd", "wit"},
                       {"classes_mismatch", yes_no(w.classes_mismatch)},
                       {"plus_agrees", yes_no(w.plus_agrees)}});
  return r;
}

CommandResult cmd_deadlock(const Scenario& sc, const std::string& sigma,
                           const std::string& tau, const CommandOptions& opt) {
  CommandResult r;
  StrategyPtr s = sc.strategy(sigma), t = sc.strategy(tau);
  DeadlockReport dl = no_deadlock(*s, *t, opt.limits);
  Triple at = atlases(sc, *s, *t, opt);
  Composition comp = compose(s, t, opt.limits);
  PairCountReport pc = check_pair_counts(*s, *t, *comp.inter, at.a, at.b, at.c);
  std::ostringstream os;
  os << "deadlock " << sigma << ' ' << tau << '\n';
  os << "  deadlock free: " << yes_no(dl.ok) << '\n';
  if (!dl.ok) {
    os << "  unsecured pair: " << format_set(s->es(), dl.xs) << " / "
       << format_set(t->es(), dl.xt);
    if (dl.theta_b) os << " through " << format_iso(s->b->es, *dl.theta_b);
    os << '\n';
  }
  os << "  compatible pairs = interactions x |Sym(B)|: " << pass_fail(pc.ok) << " ("
     << pc.triples << " triples)";
  if (!pc.ok) os << ": " << pc.failure;
  os << '\n';
  if (!pc.ok) r.exit_code = kExitCheckFailed;
  r.text = os.str();
  r.records.push_back({{"cmd", "deadlock"},
                       {"sigma", sigma},
                       {"tau", tau},
                       {"deadlock_free", yes_no(dl.ok)},
                       {"pair_counts", pass_fail(pc.ok)},
                       {"triples", std::to_string(pc.triples)}});
  return r;
}

namespace {

// Composite events pairwise conflicting and pairwise non-symmetric.
void outcome_claims(Claims& cl, const Scenario& sc, const std::string& sigma,
                    const std::string& tau) {
  Composition comp = compose(sc.strategy(sigma), sc.strategy(tau));
  const Strategy& st = *comp.strategy;
  int n = st.es().size();
  bool conflict = true, distinct = true;
  for (EventId e = 0; e < n; ++e) {
    for (EventId f = e + 1; f < n; ++f) {
      if (!st.es().in_conflict(e, f)) conflict = false;
      if (are_symmetric(*st.s, Flavor::Full, bit(e), bit(f))) distinct = false;
    }
  }
  std::string who = tau + "." + sigma;
  cl.add(who + " has 4 events", n == 4, std::to_string(n) + " events");
  cl.add(who + " events pairwise conflicting", conflict, "");
  cl.add(who + " events pairwise non-symmetric", distinct, "");
}

void theorem_claim(Claims& cl, const Scenario& sc, const std::string& sigma,
                   const std::string& tau, bool expect) {
  StrategyPtr s = sc.strategy(sigma), t = sc.strategy(tau);
  Atlas aa = Atlas::automatic(s->a), ab = Atlas::automatic(s->b), ac = Atlas::automatic(t->b);
  TheoremReport th = check_theorem(s, t, aa, ab, ac);
  std::string claim = "theorem " + std::string(expect ? "holds" : "fails") + " for " + tau +
                      "." + sigma;
  cl.add(claim, th.holds == expect, th.holds ? "" : th.describe_failure());
}

void validate_claim(Claims& cl, const Scenario& sc, const std::string& name) {
  StrategyReport rep = validate_strategy(*sc.strategy(name));
  cl.add(name + " is a strategy", rep.ok(),
         rep.ok() ? "" : rep.issues[0].axiom + ": " + rep.issues[0].message);
}

void repro_sync(Claims& cl, const Scenario& sc) {
  for (const char* n : {"sigma", "tau", "sigma2", "tau2"}) validate_claim(cl, sc, n);
  outcome_claims(cl, sc, "sigma", "tau");
  outcome_claims(cl, sc, "sigma2", "tau2");

  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  EventSet xs = sc.config("sync_s"), xt = sc.config("sync_t");
  EventSet xb = s->proj_b(xs);
  cl.add("sync_s and sync_t agree on B", t->proj_a(xt) == xb, format_set(s->b->es, xb));
  Composition comp = compose(s, t);
  std::vector<ConfigIso> isos;
  for (const auto& f : endo_group(*s->b, Flavor::Full, xb).elements) isos.push_back(f);
  cl.add("x_B has exactly the symmetries id and sw", isos.size() == 2,
         std::to_string(isos.size()) + " endosymmetries");
  std::vector<EventSet> outcomes;
  for (const auto& theta : isos) {
    std::string which = theta.is_identity() ? "id" : "sw";
    try {
      SyncReport rep = weak_bipullback(*s, *t, xs, xt, theta);
      const SyncResult& res = rep.solutions.front();
      InteractionState state{res.ys, res.yt};
      bool reach = comp.inter->contains(state);
      EventSet out = reach ? comp.config_of(state) : 0;
      outcomes.push_back(out);
      cl.add("synchronisation through " + which + " succeeds", reach,
             format_set(comp.strategy->es(), out));
    } catch (const Error& e) {
      cl.add("synchronisation through " + which + " succeeds", false, e.what());
    }
  }
  bool differ = outcomes.size() == 2 &&
                !are_symmetric(*comp.strategy->s, Flavor::Full, outcomes[0], outcomes[1]);
  cl.add("id and sw give non-symmetric outcomes", differ, "");
  theorem_claim(cl, sc, "sigma", "tau", true);
  theorem_claim(cl, sc, "sigma2", "tau2", true);
}

void repro_repr(Claims& cl, const Scenario& sc) {
  TcgPtr b = sc.game("B");
  EventSet xb = sc.config("xb"), xp = sc.config("xb_prime");
  cl.add("xb is not canonical", !is_canonical(*b, xb), "");
  cl.add("xb_prime is canonical", is_canonical(*b, xp), "");
  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  Atlas ab = Atlas::automatic(b), ac = Atlas::automatic(t->b), aa = Atlas::automatic(s->a);
  int cb = ab.class_of(xb);
  int cc = ac.class_of(bit(t->b->es.find("ok[0]")));
  Atlas with_xb = ab.with_rep(xb), with_xp = ab.with_rep(xp);
  std::size_t n_xb = wit_plus(*t, with_xb, ac, cb, cc).size();
  std::size_t n_xp = wit_plus(*t, with_xp, ac, cb, cc).size();
  cl.add("tau has exactly two witnesses over xb", n_xb == 2, std::to_string(n_xb));
  cl.add("tau has exactly one witness over xb_prime", n_xp == 1, std::to_string(n_xp));
  auto sw = swit_plus(*t, with_xp, ac, cb, cc);
  cl.add("two positive symmetries from that witness to xb_prime", sw.size() == 2,
         std::to_string(sw.size()));
  TheoremReport good = check_theorem(s, t, aa, ab, ac);
  cl.add("theorem holds with canonical representatives", good.holds, good.describe_failure());
  TheoremReport bad = check_theorem(s, t, aa, with_xb, ac);
  bool at_canon = false;
  for (const auto& e : bad.entries)
    if (e.first_break == 10) at_canon = true;
  cl.add("with xb as representative the chain breaks at the canonical step",
         !bad.holds && at_canon, bad.describe_failure());
}

void repro_nonrep(Claims& cl, const Scenario& sc) {
  TcgPtr g = sc.game("dv");
  cl.add("dv is not representable", !is_representable(*g).representable, "");
  EventSet top = sc.config("top");
  const EventStructure& es = g->es;
  ConfigIso f = ConfigIso::identity(es.size(), top);
  f.img[es.find("m1")] = es.find("m2");
  f.img[es.find("m2")] = es.find("m1");
  cl.add("the swap of m1 and m2 fixing p1 is an endosymmetry",
         in_family(*g, Flavor::Full, f), format_iso(es, f));
  auto fs = all_factorizations(*g, f);
  bool moves = fs.size() == 1 && fs[0].mid != top;
  cl.add("its unique factorization passes through another configuration", moves,
         fs.size() == 1 ? format_set(es, fs[0].mid) : std::to_string(fs.size()) + " factorizations");
  cl.add("top is not canonical", !is_canonical(*g, top), "");
}

int find_class(const Atlas& atlas, const std::string& desc) {
  for (int c = 0; c < atlas.classes(); ++c) {
    std::string d = describe_class(atlas, c);
    if (d.substr(d.find(' ') + 1) == desc) return c;
  }
  return -1;
}

// Class witnesses of the composite at (want_a, want_c) against the single
// mediating class want_b.
void mismatch_claims(Claims& cl, const Scenario& sc, const std::string& want_a,
                     const std::string& want_b, const std::string& want_c) {
  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  validate_claim(cl, sc, "sigma");
  validate_claim(cl, sc, "tau");
  Atlas aa = Atlas::automatic(s->a), ab = Atlas::automatic(s->b), ac = Atlas::automatic(t->b);
  int a = find_class(aa, want_a), c = find_class(ac, want_c);
  cl.add("classes " + want_a + " and " + want_c + " exist", a >= 0 && c >= 0, "");
  if (a < 0 || c < 0) return;
  Composition comp = compose(s, t);
  std::size_t composite = wit(*comp.strategy, a, c).size();
  cl.add("composite has 2 class witnesses", composite == 2, std::to_string(composite));
  std::vector<int> mediating;
  std::size_t ws = 0, wt = 0, plus_sum = 0;
  for (int b = 0; b < ab.classes(); ++b) {
    std::size_t x = wit(*s, a, b).size(), y = wit(*t, b, c).size();
    plus_sum += wit_plus(*s, aa, ab, a, b).size() * wit_plus(*t, ab, ac, b, c).size();
    if (x * y == 0) continue;
    mediating.push_back(b);
    ws = x;
    wt = y;
  }
  std::string med;
  for (int b : mediating) med += (med.empty() ? "" : ", ") + describe_class(ab, b);
  cl.add("unique mediating class " + want_b,
         mediating.size() == 1 && find_class(ab, want_b) == mediating[0], med);
  cl.add("sigma and tau have 1 class witness each there", ws == 1 && wt == 1,
         std::to_string(ws) + " and " + std::to_string(wt));
  std::size_t plus = wit_plus(*comp.strategy, aa, ac, a, c).size();
  cl.add("wit+ counts agree", plus == plus_sum,
         std::to_string(plus) + " = " + std::to_string(plus_sum));
  theorem_claim(cl, sc, "sigma", "tau", true);
}

void repro_copycat(Claims& cl, const Scenario& sc) {
  for (const char* n : {"cc_qa", "cc_bo", "cc_boo", "cc_ho"}) {
    validate_claim(cl, sc, n);
    Composition comp = compose(sc.strategy(n), sc.strategy(n));
    cl.add(std::string("+-covered bijection for ") + n + "." + n, pcov_bijection(comp).ok, "");
    theorem_claim(cl, sc, n, n, true);
  }
}

void repro_deadlock(Claims& cl, const Scenario& sc) {
  StrategyPtr s = sc.strategy("sigma"), t = sc.strategy("tau");
  validate_claim(cl, sc, "sigma");
  validate_claim(cl, sc, "tau");
  cl.add("the pair deadlocks", !no_deadlock(*s, *t).ok, "");
  Atlas aa = Atlas::automatic(s->a), ab = Atlas::automatic(s->b), ac = Atlas::automatic(t->b);
  Composition comp = compose(s, t);
  PairCountReport pc = check_pair_counts(*s, *t, *comp.inter, aa, ab, ac);
  cl.add("compatible pairs still count interactions", pc.ok, pc.failure);
  theorem_claim(cl, sc, "sigma", "tau", false);
}

void repro_altsym(Claims& cl, const Scenario& sc) {
  validate_claim(cl, sc, "fix");
  validate_claim(cl, sc, "cross");
  Atlas aa = Atlas::automatic(sc.game("one")), ag = Atlas::automatic(sc.game("G"));
  bool same = collapse(*sc.strategy("fix"), aa, ag) == collapse(*sc.strategy("cross"), aa, ag);
  cl.add("collapse independent of the strategy symmetry", same, "");
  theorem_claim(cl, sc, "fix", "cc", true);
  theorem_claim(cl, sc, "cross", "cc", true);
}

}  // namespace

CommandResult cmd_repro(const std::string& name, const CommandOptions&) {
  Claims cl;
  cl.fixture = name;
  Scenario sc = fixture(name);
  cl.out.text = "repro " + name + "\n";
  if (name == "FIX_EX1") {
    repro_sync(cl, sc);
  } else if (name == "FIX_REPR") {
    repro_repr(cl, sc);
  } else if (name == "FIX_DEVISME") {
    repro_nonrep(cl, sc);
  } else if (name == "FIX_EPI1") {
    mismatch_claims(cl, sc, "[ok]", "[m, m, p]", "[ok]");
  } else if (name == "FIX_EPI2") {
    mismatch_claims(cl, sc, "[q, q]", "[q(q, q(q, q))]", "[q(q)]");
  } else if (name == "FIX_COPYCAT") {
    repro_copycat(cl, sc);
  } else if (name == "FIX_DEADLOCK") {
    repro_deadlock(cl, sc);
  } else if (name == "FIX_ALTSYM") {
    repro_altsym(cl, sc);
  }
  cl.out.records.push_back(
      {{"cmd", "repro"}, {"fixture", name}, {"exit", std::to_string(cl.out.exit_code)}});
  return cl.out;
}

CommandResult run_command(const Scenario& sc, const std::vector<std::string>& words,
                          const CommandOptions& opt) {
  CommandResult r;
  auto usage = [&](const std::string& msg) {
    r.exit_code = kExitUsage;
    r.text = "error: " + msg + "\n";
    r.records.push_back({{"error", "usage"}, {"message", msg}});
    return r;
  };
  if (words.empty()) return usage("empty command");
  const std::string& cmd = words[0];
  auto need = [&](std::size_t lo, std::size_t hi) {
    return words.size() >= lo + 1 && words.size() <= hi + 1;
  };
  try {
    if (cmd == "validate") return cmd_validate(sc, {words.begin() + 1, words.end()}, opt);
    if (cmd == "classes" && need(1, 1)) return cmd_classes(sc, words[1], opt);
    if (cmd == "canonical" && need(2, 2)) return cmd_canonical(sc, words[1], words[2], opt);
    if (cmd == "collapse" && need(1, 2)) {
      if (words.size() == 2) return cmd_collapse(sc, words[1], opt);
      Composition comp = compose(sc.strategy(words[1]), sc.strategy(words[2]), opt.limits);
      return collapse_table(sc, *comp.strategy, words[2] + "." + words[1], opt);
    }
    if (cmd == "compose" && need(2, 2)) return cmd_compose(sc, words[1], words[2], opt);
    if (cmd == "check-theorem" && words.size() >= 3) {
      std::map<std::string, EventSet> extra;
      for (std::size_t i = 3; i < words.size(); ++i) extra.insert(parse_rep_override(sc, words[i]));
      return theorem_report(sc, words[1], words[2], opt, extra);
    }
    if (cmd == "wit" && need(2, 2)) return cmd_wit(sc, words[1], words[2], opt);
    if (cmd == "deadlock" && need(2, 2)) return cmd_deadlock(sc, words[1], words[2], opt);
  } catch (const Error& e) {
    bool use = e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::ParseError;
    r.exit_code = use ? kExitUsage : kExitCheckFailed;
    r.text = "error: " + std::string(error_code_name(e.code())) + ": " + e.what() + "\n";
    r.records.push_back({{"error", error_code_name(e.code())}, {"message", e.what()}});
    return r;
  }
  std::string line;
  for (const auto& w : words) line += (line.empty() ? "" : " ") + w;
  return usage("bad command '" + line + "'");
}

CommandResult cmd_run(const Scenario& sc, const CommandOptions& opt) {
  CommandResult r;
  for (const auto& c : sc.commands) {
    std::string line;
    for (const auto& w : c.words) line += (line.empty() ? "" : " ") + w;
    r.text += "> " + line + "\n";
    CommandResult one = run_command(sc, c.words, opt);
    r.merge(one);
  }
  return r;
}

std::string format_records(const std::vector<Record>& records) {
  std::ostringstream os;
  for (const auto& rec : records) {
    bool first = true;
    for (const auto& [k, v] : rec) {
      if (!first) os << ' ';
      first = false;
      os << k << '=';
      bool quote = v.empty() || v.find_first_of(" \"=\t") != std::string::npos;
      if (!quote) {
        os << v;
        continue;
      }
      os << '"';
      for (char c : v) {
        if (c == '"' || c == '\\') os << '\\';
        os << c;
      }
      os << '"';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace cgame
