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
#include <cctype>
#include <fstream>
#include <sstream>

#include "cgame/scenario.hpp"

namespace cgame {

namespace {

struct Token {
  std::string text;
  int col = 0;  // 1-based
};

[[noreturn]] void parse_error(int line, int col, const std::string& msg) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] == '#') break;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    out.push_back({s.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

class ExprParser {
 public:
  ExprParser(const std::string& s, int line, int col0) : s_(s), line_(line), pos_(col0 - 1) {}

  Expr parse_all() {
    Expr e = parse();
    skip();
    if (pos_ < s_.size() && s_[pos_] != '#') fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  int line_;
  std::size_t pos_;

  [[noreturn]] void fail(const std::string& msg) const {
    parse_error(line_, static_cast<int>(pos_) + 1, msg);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  static bool atom_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-' ||
           c == '.' || c == '\'';
  }

  Expr parse() {
    skip();
    if (pos_ >= s_.size()) fail("expression expected");
    Expr e;
    if (s_[pos_] == '[') {
      std::size_t close = s_.find(']', pos_);
      if (close == std::string::npos) fail("unterminated list");
      for (std::size_t k = pos_; k <= close; ++k)
        if (!std::isspace(static_cast<unsigned char>(s_[k]))) e.head += s_[k];
      pos_ = close + 1;
      return e;
    }
    std::size_t start = pos_;
    while (pos_ < s_.size() && atom_char(s_[pos_])) ++pos_;
    if (pos_ == start) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    e.head = s_.substr(start, pos_ - start);
    skip();
    if (pos_ < s_.size() && s_[pos_] == '(') {
      e.call = true;
      ++pos_;
      skip();
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return e;
      }
      while (true) {
        e.args.push_back(parse());
        skip();
        if (pos_ >= s_.size()) fail("missing ')'");
        if (s_[pos_] == ')') {
          ++pos_;
          break;
        }
        if (s_[pos_] != ',') fail("expected ',' or ')'");
        ++pos_;
      }
    }
    return e;
  }
};

SymDecl::Kind sym_kind(const Token& t, int line, bool strategy) {
  if (t.text == "all" && !strategy) return SymDecl::Kind::All;
  if (t.text == "identity") return SymDecl::Kind::Identity;
  if (t.text == "generators") return SymDecl::Kind::Generators;
  if (t.text == "induced" && strategy) return SymDecl::Kind::Induced;
  parse_error(line, t.col, "unknown symmetry kind '" + t.text + "'");
}

const char* sym_kind_name(SymDecl::Kind k) {
  switch (k) {
    case SymDecl::Kind::All: return "all";
    case SymDecl::Kind::Identity: return "identity";
    case SymDecl::Kind::Generators: return "generators";
    case SymDecl::Kind::Induced: return "induced";
  }
  return "?";
}

SymDecl* flavor_slot(GameDecl& g, const Token& t, int line) {
  if (t.text == "full") return &g.full;
  if (t.text == "pos") return &g.pos;
  if (t.text == "neg") return &g.neg;
  parse_error(line, t.col, "unknown flavor '" + t.text + "'");
}

void expect_args(const std::vector<Token>& toks, std::size_t n, int line) {
  if (toks.size() != n) {
    int col = toks.size() > n ? toks[n].col : toks.back().col;
    parse_error(line, col, "'" + toks[0].text + "' takes " + std::to_string(n - 1) +
                               " arguments");
  }
}

// Wraps construction errors with the declaration line.
template <typename F>
auto at_line(int line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), "line " + std::to_string(line) + ": " + e.what());
  }
}

std::map<std::string, EventId> index_names(const std::vector<EventDecl>& evs, int line) {
  std::map<std::string, EventId> ids;
  for (std::size_t i = 0; i < evs.size(); ++i) {
    if (!ids.emplace(evs[i].name, static_cast<EventId>(i)).second) {
      parse_error(line, 1, "duplicate event '" + evs[i].name + "'");
    }
  }
  return ids;
}

EventId lookup(const std::map<std::string, EventId>& ids, const std::string& n, int line) {
  auto it = ids.find(n);
  if (it == ids.end()) parse_error(line, 1, "unknown event '" + n + "'");
  return it->second;
}

SymmetrySpec build_sym(const SymDecl& d, const std::map<std::string, EventId>& ids, int n,
                       int line) {
  switch (d.kind) {
    case SymDecl::Kind::All: return SymmetrySpec::all();
    case SymDecl::Kind::Identity: return SymmetrySpec::identity_only(n);
    case SymDecl::Kind::Induced: break;
    case SymDecl::Kind::Generators: {
      std::vector<std::vector<EventId>> gens;
      for (const auto& g : d.generators) {
        if (static_cast<int>(g.size()) != n) {
          parse_error(line, 1, "generator has " + std::to_string(g.size()) + " images for " +
                                   std::to_string(n) + " events");
        }
        std::vector<EventId> m;
        for (const auto& img : g) m.push_back(img == "_" ? -1 : lookup(ids, img, line));
        gens.push_back(std::move(m));
      }
      return SymmetrySpec::generated(std::move(gens));
    }
  }
  throw Error(ErrorCode::InvalidArgument, "induced symmetry outside a strategy");
}

CopyBound bound_of(const Expr& e, int line) {
  auto num = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      int k = std::stoi(s, &used);
      if (used != s.size() || k < 0) throw std::invalid_argument(s);
      return k;
    } catch (const std::exception&) {
      parse_error(line, 1, "bad copy bound '" + s + "'");
    }
  };
  if (e.call) parse_error(line, 1, "copy bound expected");
  if (e.head.front() != '[') return CopyBound::uniform(num(e.head));
  CopyBound b;
  std::stringstream ss(e.head.substr(1, e.head.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) b.per_depth.push_back(num(part));
  if (b.per_depth.empty()) parse_error(line, 1, "empty copy bound");
  return b;
}

TcgPtr eval(const Expr& e, const std::map<std::string, TcgPtr>& games, int line) {
  auto arity = [&](std::size_t n) {
    if (e.args.size() != n) {
      parse_error(line, 1, e.head + " takes " + std::to_string(n) + " arguments");
    }
  };
  auto sub = [&](std::size_t i) { return eval(e.args[i], games, line); };
  if (!e.call) {
    if (e.head == "empty") return empty_game();
    auto it = games.find(e.head);
    if (it == games.end()) parse_error(line, 1, "unknown game '" + e.head + "'");
    return it->second;
  }
  if (e.head == "single") {
    arity(2);
    const std::string& p = e.args[0].head;
    if (p != "+" && p != "-") parse_error(line, 1, "polarity must be + or -");
    return single_event(p == "+" ? Polarity::Positive : Polarity::Negative, e.args[1].head);
  }
  if (e.head == "dual") return arity(1), dual(sub(0));
  if (e.head == "par") return arity(2), parallel(sub(0), sub(1));
  if (e.head == "shift_up") return arity(1), shift_up(sub(0));
  if (e.head == "shift_down") return arity(1), shift_down(sub(0));
  if (e.head == "arrow") return arity(2), linear_arrow(sub(0), sub(1));
  if (e.head == "bang_ajm") return arity(2), bang_ajm(sub(0), bound_of(e.args[1], line));
  if (e.head == "bang_ho") {
    arity(2);
    return bang_ho(make_arena(sub(0)->es), bound_of(e.args[1], line));
  }
  if (e.head == "sum") {
    std::vector<TcgPtr> parts;
    for (std::size_t i = 0; i < e.args.size(); ++i) parts.push_back(sub(i));
    return sum(parts);
  }
  parse_error(line, 1, "unknown construction '" + e.head + "'");
}

TcgPtr build_game(const GameDecl& d, const std::map<std::string, TcgPtr>& games) {
  if (d.is_expr) return eval(d.expr, games, d.line);
  auto ids = index_names(d.events, d.line);
  EsSpec spec;
  for (const auto& ev : d.events) {
    spec.add(ev.polarity_or_role == "+" ? Polarity::Positive : Polarity::Negative,
             ev.label_or_target, ev.name);
  }
  for (const auto& [x, y] : d.causal)
    spec.causality.emplace_back(lookup(ids, x, d.line), lookup(ids, y, d.line));
  for (const auto& [x, y] : d.conflict)
    spec.conflict.emplace_back(lookup(ids, x, d.line), lookup(ids, y, d.line));
  int n = spec.size();
  EventStructure es = EventStructure::build(spec);
  return make_tcg(std::move(es), build_sym(d.full, ids, n, d.line),
                  build_sym(d.pos, ids, n, d.line), build_sym(d.neg, ids, n, d.line), d.name);
}

StrategyPtr build_strategy(const StrategyDecl& d, const Scenario& sc) {
  if (!d.copycat_of.empty()) return copycat(sc.game(d.copycat_of));
  TcgPtr a = sc.game(d.a), b = sc.game(d.b);
  auto ids = index_names(d.events, d.line);
  EsSpec spec;
  std::vector<EventId> label;
  for (const auto& ev : d.events) {
    const std::string& t = ev.label_or_target;
    bool on_a = t.rfind("A:", 0) == 0;
    if (!on_a && t.rfind("B:", 0) != 0) {
      parse_error(d.line, 1, "target '" + t + "' must start with A: or B:");
    }
    const TcgPtr& g = on_a ? a : b;
    EventId e = g->es.find(t.substr(2));
    if (e < 0) parse_error(d.line, 1, "no event '" + t.substr(2) + "' in " + (on_a ? d.a : d.b));
    Polarity p = on_a ? flip(g->es.polarity(e)) : g->es.polarity(e);
    spec.add(p, ev.polarity_or_role, ev.name);
    label.push_back(on_a ? e : e + a->es.size());
  }
  for (const auto& [x, y] : d.causal)
    spec.causality.emplace_back(lookup(ids, x, d.line), lookup(ids, y, d.line));
  for (const auto& [x, y] : d.conflict)
    spec.conflict.emplace_back(lookup(ids, x, d.line), lookup(ids, y, d.line));
  std::optional<SymmetrySpec> sym;
  if (d.sym.kind != SymDecl::Kind::Induced) {
    sym = build_sym(d.sym, ids, spec.size(), d.line);
  }
  return make_strategy(d.name, EventStructure::build(spec), a, b, std::move(label),
                       std::move(sym));
}

EventSet build_config(const ConfigDecl& d, const Scenario& sc) {
  const EventStructure* es = nullptr;
  if (sc.games.count(d.owner)) {
    es = &sc.games.at(d.owner)->es;
  } else if (sc.strategies.count(d.owner)) {
    es = &sc.strategies.at(d.owner)->es();
  } else {
    parse_error(d.line, 1, "unknown game or strategy '" + d.owner + "'");
  }
  EventSet x = 0;
  for (const auto& n : d.events) {
    EventId e = es->find(n);
    if (e < 0) parse_error(d.line, 1, "no event '" + n + "' in " + d.owner);
    x |= bit(e);
  }
  if (!es->is_configuration(x)) {
    parse_error(d.line, 1, d.name + " is not a configuration of " + d.owner);
  }
  return x;
}

void check_fresh(const Scenario& sc, const std::string& name, int line, int col) {
  if (sc.games.count(name) || sc.strategies.count(name) || sc.configs.count(name)) {
    parse_error(line, col, "'" + name + "' is already declared");
  }
}

}  // namespace

std::string format_expr(const Expr& e) {
  if (!e.call) return e.head;
  std::string out = e.head + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) out += ", ";
    out += format_expr(e.args[i]);
  }
  return out + ")";
}

TcgPtr Scenario::game(const std::string& name) const {
  auto it = games.find(name);
  if (it == games.end()) throw Error(ErrorCode::InvalidArgument, "unknown game '" + name + "'");
  return it->second;
}

StrategyPtr Scenario::strategy(const std::string& name) const {
  auto it = strategies.find(name);
  if (it == strategies.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown strategy '" + name + "'");
  }
  return it->second;
}

EventSet Scenario::config(const std::string& name) const {
  auto it = configs.find(name);
  if (it == configs.end()) {
    throw Error(ErrorCode::InvalidArgument, "unknown configuration '" + name + "'");
  }
  return it->second;
}

const ConfigDecl& Scenario::config_decl(const std::string& name) const {
  for (const auto& c : config_decls)
    if (c.name == name) return c;
  throw Error(ErrorCode::InvalidArgument, "unknown configuration '" + name + "'");
}

Scenario parse_scenario(const std::string& text) {
  Scenario sc;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  GameDecl* game = nullptr;
  StrategyDecl* strat = nullptr;
  int open_line = 0;

  while (std::getline(in, raw)) {
    ++line;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& kw = toks[0].text;

    if (game || strat) {
      if (kw == "END") {
        expect_args(toks, 1, line);
        if (game) {
          check_fresh(sc, game->name, game->line, 1);
          sc.games[game->name] = at_line(game->line, [&] { return build_game(*game, sc.games); });
        } else {
          check_fresh(sc, strat->name, strat->line, 1);
          sc.strategies[strat->name] =
              at_line(strat->line, [&] { return build_strategy(*strat, sc); });
        }
        game = nullptr;
        strat = nullptr;
        continue;
      }
      auto& events = game ? game->events : strat->events;
      if (kw == "event") {
        if (game) {
          if (toks.size() != 3 && toks.size() != 4) {
            parse_error(line, toks[0].col, "event takes a name, a polarity and a label");
          }
          if (toks[2].text != "+" && toks[2].text != "-") {
            parse_error(line, toks[2].col, "polarity must be + or -");
          }
          events.push_back({toks[1].text, toks[2].text,
                            toks.size() == 4 ? toks[3].text : toks[1].text});
        } else {
          expect_args(toks, 4, line);
          events.push_back({toks[1].text, toks[2].text, toks[3].text});
        }
      } else if (kw == "causal" || kw == "conflict") {
        expect_args(toks, 3, line);
        for (std::size_t i = 1; i <= 2; ++i) {
          bool known = std::any_of(events.begin(), events.end(),
                                   [&](const EventDecl& d) { return d.name == toks[i].text; });
          if (!known) parse_error(line, toks[i].col, "unknown event '" + toks[i].text + "'");
        }
        auto& pairs = game ? (kw == "causal" ? game->causal : game->conflict)
                           : (kw == "causal" ? strat->causal : strat->conflict);
        pairs.emplace_back(toks[1].text, toks[2].text);
      } else if (kw == "symmetry") {
        if (game) {
          expect_args(toks, 3, line);
          flavor_slot(*game, toks[1], line)->kind = sym_kind(toks[2], line, false);
        } else {
          expect_args(toks, 2, line);
          strat->sym.kind = sym_kind(toks[1], line, true);
        }
      } else if (kw == "generator") {
        std::size_t first = game ? 2 : 1;
        if (toks.size() < first) parse_error(line, toks[0].col, "generator needs a flavor");
        SymDecl* slot = game ? flavor_slot(*game, toks[1], line) : &strat->sym;
        if (slot->kind != SymDecl::Kind::Generators) {
          parse_error(line, toks[0].col, "declare 'generators' before listing generators");
        }
        std::vector<std::string> imgs;
        for (std::size_t i = first; i < toks.size(); ++i) imgs.push_back(toks[i].text);
        slot->generators.push_back(std::move(imgs));
      } else {
        parse_error(line, toks[0].col, "unknown directive '" + kw + "'");
      }
      continue;
    }

    if (kw == "GAME") {
      if (toks.size() < 2) parse_error(line, toks[0].col, "GAME needs a name");
      GameDecl d;
      d.name = toks[1].text;
      d.line = line;
      if (toks.size() == 2) {
        sc.game_decls.push_back(std::move(d));
        sc.decl_order.emplace_back('G', static_cast<int>(sc.game_decls.size()) - 1);
        game = &sc.game_decls.back();
        open_line = line;
        continue;
      }
      if (toks[2].text != "=" || toks.size() < 4) {
        parse_error(line, toks[2].col, "expected '= expression'");
      }
      d.is_expr = true;
      d.expr = ExprParser(raw, line, toks[3].col).parse_all();
      check_fresh(sc, d.name, line, toks[1].col);
      sc.games[d.name] = at_line(line, [&] { return build_game(d, sc.games); });
      sc.game_decls.push_back(std::move(d));
      sc.decl_order.emplace_back('G', static_cast<int>(sc.game_decls.size()) - 1);
    } else if (kw == "STRATEGY") {
      if (toks.size() >= 4 && toks[2].text == "=") {
        Expr e = ExprParser(raw, line, toks[3].col).parse_all();
        if (e.head != "copycat" || !e.call || e.args.size() != 1 || e.args[0].call) {
          parse_error(line, toks[3].col, "expected copycat(G)");
        }
        StrategyDecl d;
        d.name = toks[1].text;
        d.copycat_of = e.args[0].head;
        d.a = d.b = d.copycat_of;
        d.line = line;
        check_fresh(sc, d.name, line, toks[1].col);
        sc.strategies[d.name] = at_line(line, [&] { return build_strategy(d, sc); });
        sc.strategy_decls.push_back(std::move(d));
        sc.decl_order.emplace_back('S', static_cast<int>(sc.strategy_decls.size()) - 1);
        continue;
      }
      // STRATEGY name : a -> b
      if (toks.size() != 6 || toks[2].text != ":" || toks[4].text != "->") {
        parse_error(line, toks[0].col, "expected 'STRATEGY name : A -> B'");
      }
      StrategyDecl d;
      d.name = toks[1].text;
      d.a = toks[3].text;
      d.b = toks[5].text;
      d.line = line;
      sc.strategy_decls.push_back(std::move(d));
      sc.decl_order.emplace_back('S', static_cast<int>(sc.strategy_decls.size()) - 1);
      strat = &sc.strategy_decls.back();
      open_line = line;
    } else if (kw == "CONFIG") {
      // CONFIG name = owner : events...
      if (toks.size() < 5 || toks[2].text != "=" || toks[4].text != ":") {
        parse_error(line, toks[0].col, "expected 'CONFIG name = owner : events'");
      }
      ConfigDecl d;
      d.name = toks[1].text;
      d.owner = toks[3].text;
      d.line = line;
      for (std::size_t i = 5; i < toks.size(); ++i) d.events.push_back(toks[i].text);
      check_fresh(sc, d.name, line, toks[1].col);
      sc.configs[d.name] = build_config(d, sc);
      sc.config_decls.push_back(std::move(d));
      sc.decl_order.emplace_back('C', static_cast<int>(sc.config_decls.size()) - 1);
    } else if (kw == "RUN") {
      if (toks.size() < 2) parse_error(line, toks[0].col, "RUN needs a command");
      Command c;
      c.line = line;
      for (std::size_t i = 1; i < toks.size(); ++i) c.words.push_back(toks[i].text);
      sc.commands.push_back(std::move(c));
    } else {
      parse_error(line, toks[0].col, "unknown section '" + kw + "'");
    }
  }
  if (game || strat) parse_error(open_line, 1, "missing END");
  return sc;
}

std::string print_scenario(const Scenario& s) {
  std::ostringstream os;
  auto pairs = [&](const char* kw, const NamePairs& ps) {
    for (const auto& [x, y] : ps) os << "  " << kw << ' ' << x << ' ' << y << '\n';
  };
  auto gens = [&](const char* prefix, const SymDecl& d) {
    for (const auto& g : d.generators) {
      os << "  generator" << prefix;
      for (const auto& img : g) os << ' ' << img;
      os << '\n';
    }
  };
  bool first = true;
  for (auto [kind, i] : s.decl_order) {
    if (!first) os << '\n';
    first = false;
    if (kind == 'G') {
      const GameDecl& g = s.game_decls[i];
      if (g.is_expr) {
        os << "GAME " << g.name << " = " << format_expr(g.expr) << '\n';
        continue;
      }
      os << "GAME " << g.name << '\n';
      for (const auto& e : g.events)
        os << "  event " << e.name << ' ' << e.polarity_or_role << ' ' << e.label_or_target << '\n';
      pairs("causal", g.causal);
      pairs("conflict", g.conflict);
      const std::pair<const char*, const SymDecl*> slots[] = {
          {"full", &g.full}, {"pos", &g.pos}, {"neg", &g.neg}};
      for (auto [fl, d] : slots) {
        if (d->kind == SymDecl::Kind::Identity) continue;
        os << "  symmetry " << fl << ' ' << sym_kind_name(d->kind) << '\n';
        gens((std::string(" ") + fl).c_str(), *d);
      }
      os << "END\n";
    } else if (kind == 'S') {
      const StrategyDecl& d = s.strategy_decls[i];
      if (!d.copycat_of.empty()) {
        os << "STRATEGY " << d.name << " = copycat(" << d.copycat_of << ")\n";
        continue;
      }
      os << "STRATEGY " << d.name << " : " << d.a << " -> " << d.b << '\n';
      for (const auto& e : d.events)
        os << "  event " << e.name << ' ' << e.polarity_or_role << ' ' << e.label_or_target << '\n';
      pairs("causal", d.causal);
      pairs("conflict", d.conflict);
      if (d.sym.kind != SymDecl::Kind::Induced) {
        os << "  symmetry " << sym_kind_name(d.sym.kind) << '\n';
        gens("", d.sym);
      }
      os << "END\n";
    } else {
      const ConfigDecl& c = s.config_decls[i];
      os << "CONFIG " << c.name << " = " << c.owner << " :";
      for (const auto& e : c.events) os << ' ' << e;
      os << '\n';
    }
  }
  if (!s.commands.empty()) os << '\n';
  for (const auto& c : s.commands) {
    os << "RUN";
    for (const auto& w : c.words) os << ' ' << w;
    os << '\n';
  }
  return os.str();
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_scenario(ss.str());
}

}  // namespace cgame
