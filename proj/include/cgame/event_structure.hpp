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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cgame {

using EventId = int;
// Sets of events are bitmasks; a structure holds at most kMaxEvents events.
using EventSet = std::uint64_t;
inline constexpr int kMaxEvents = 64;

enum class Polarity : std::uint8_t { Positive, Negative };

inline Polarity flip(Polarity p) {
  return p == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
}
inline char polarity_char(Polarity p) {
  return p == Polarity::Positive ? '+' : '-';
}

enum class ErrorCode {
  InvalidArgument,
  SizeLimitExceeded,
  CycleDetected,
  NonCoveringEdge,
  ConflictNotInherited,
  NotNegative,
  NotForestial,
  ArityMismatch,
  DimensionMismatch,
  NotRepresentable,
  NoFactorization,
  NonUniqueFactorization,
  NoSolution,
  NonUnique,
  AmbiguousBeyondSymmetry,
  BijectionFailure,
  TheoremViolation,
  ParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Caps guarding brute-force enumerations.
struct Limits {
  std::size_t config_cap = std::size_t{1} << 20;
  std::size_t iso_cap = std::size_t{1} << 20;
};

inline EventSet bit(EventId e) { return EventSet{1} << e; }
inline bool has(EventSet s, EventId e) { return (s >> e) & 1u; }
inline int count(EventSet s) { return std::popcount(s); }
inline EventId lowest(EventSet s) { return std::countr_zero(s); }
std::vector<EventId> members(EventSet s);

// Lexicographic order on sorted id sequences; a proper prefix is smaller.
bool lex_less(EventSet a, EventSet b);

template <typename F>
void for_each_event(EventSet s, F&& f) {
  while (s != 0) {
    EventId e = std::countr_zero(s);
    s &= s - 1;
    f(e);
  }
}

// Declared (unclosed) description of an event structure.
struct EsSpec {
  std::vector<Polarity> polarity;
  std::vector<std::string> label;
  std::vector<std::string> name;
  std::vector<std::pair<EventId, EventId>> causality;
  std::vector<std::pair<EventId, EventId>> conflict;

  EventId add(Polarity p, std::string lbl, std::string nm = {});
  int size() const { return static_cast<int>(polarity.size()); }
};

struct EsIssue {
  ErrorCode kind;
  std::vector<EventId> witnesses;
  std::string message;
};

struct EsReport {
  std::vector<EsIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Checks acyclicity, that every edge is a covering pair, and that the declared
// conflict is closed under causal extension.
EsReport validate_es(const EsSpec& spec);

class EventStructure {
 public:
  EventStructure() = default;

  // Closes conflict upward, reduces causality to covering edges. Throws on a
  // cycle, a self-conflict or more than kMaxEvents events.
  static EventStructure build(const EsSpec& spec);

  int size() const { return static_cast<int>(polarity_.size()); }
  EventSet all() const;
  Polarity polarity(EventId e) const { return polarity_[e]; }
  const std::string& label(EventId e) const { return label_[e]; }
  const std::string& name(EventId e) const { return name_[e]; }

  EventSet below(EventId e) const { return below_[e]; }  // strict
  EventSet above(EventId e) const { return above_[e]; }  // strict
  EventSet preds(EventId e) const { return preds_[e]; }  // immediate
  EventSet succs(EventId e) const { return succs_[e]; }  // immediate
  EventSet conflicts(EventId e) const { return conflict_[e]; }
  bool leq(EventId a, EventId b) const { return a == b || has(below_[b], a); }
  bool lt(EventId a, EventId b) const { return has(below_[b], a); }
  bool in_conflict(EventId a, EventId b) const { return has(conflict_[a], b); }

  EventSet positive_events() const { return positive_; }
  EventSet negative_events() const { return all() & ~positive_; }
  EventSet minimal_events() const;

  const std::vector<std::pair<EventId, EventId>>& edges() const {
    return edges_;
  }
  // Conflicts not inherited from a smaller pair, a < b.
  std::vector<std::pair<EventId, EventId>> minimal_conflicts() const;

  bool is_configuration(EventSet x) const;
  EventSet down_closure(EventSet x) const;
  // Events sorted by (depth, id); every event follows its predecessors.
  const std::vector<EventId>& topological_order() const { return topo_; }

  // Returns -1 when absent.
  EventId find(const std::string& nm) const;
  EsSpec spec() const;

 private:
  std::vector<Polarity> polarity_;
  std::vector<std::string> label_;
  std::vector<std::string> name_;
  std::vector<EventSet> below_, above_, preds_, succs_, conflict_;
  std::vector<std::pair<EventId, EventId>> edges_;
  std::vector<EventId> topo_;
  EventSet positive_ = 0;
};

struct Configuration {
  const EventStructure* es = nullptr;
  EventSet events = 0;
};

// All configurations in lex_less order, starting with the empty one.
std::vector<EventSet> enumerate_configurations(const EventStructure& es,
                                               const Limits& limits = {});

EventSet maximal_events(const EventStructure& es, EventSet x);
bool is_plus_covered(const EventStructure& es, EventSet x);

inline EventSet maximal_events(const Configuration& x) {
  return maximal_events(*x.es, x.events);
}
inline bool is_plus_covered(const Configuration& x) {
  return is_plus_covered(*x.es, x.events);
}

// "{a, b[1]}" using event names.
std::string format_set(const EventStructure& es, EventSet x);

}  // namespace cgame
