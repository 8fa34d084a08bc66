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

#include "cgame/event_structure.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cgame {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::NonCoveringEdge: return "NonCoveringEdge";
    case ErrorCode::ConflictNotInherited: return "ConflictNotInherited";
    case ErrorCode::NotNegative: return "NotNegative";
    case ErrorCode::NotForestial: return "NotForestial";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::NoFactorization: return "NoFactorization";
    case ErrorCode::NonUniqueFactorization: return "NonUniqueFactorization";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NonUnique: return "NonUnique";
    case ErrorCode::AmbiguousBeyondSymmetry: return "AmbiguousBeyondSymmetry";
    case ErrorCode::BijectionFailure: return "BijectionFailure";
    case ErrorCode::TheoremViolation: return "TheoremViolation";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::vector<EventId> members(EventSet s) {
  std::vector<EventId> out;
  out.reserve(count(s));
  for_each_event(s, [&](EventId e) { out.push_back(e); });
  return out;
}

bool lex_less(EventSet a, EventSet b) {
  if (a == b) return false;
  EventSet d = a ^ b;
  int p = std::countr_zero(d);
  // Both sequences agree below p; the one holding p continues with p.
  if (has(a, p)) return (b >> p) != 0;
  return (a >> p) == 0;
}

EventId EsSpec::add(Polarity p, std::string lbl, std::string nm) {
  polarity.push_back(p);
  if (nm.empty()) nm = lbl;
  label.push_back(std::move(lbl));
  name.push_back(std::move(nm));
  return static_cast<EventId>(polarity.size()) - 1;
}

namespace {

bool ids_ok(const EsSpec& spec, std::vector<EsIssue>* issues) {
  int n = spec.size();
  bool ok = true;
  auto check = [&](const std::pair<EventId, EventId>& e) {
    if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) {
      ok = false;
      if (issues) {
        issues->push_back({ErrorCode::InvalidArgument, {e.first, e.second},
                           "edge refers to an unknown event"});
      }
    }
  };
  for (const auto& e : spec.causality) check(e);
  for (const auto& e : spec.conflict) check(e);
  return ok;
}

// Returns events on a cycle (empty if acyclic); fills strict-below sets.
std::vector<EventId> closure(int n,
                             const std::vector<std::pair<EventId, EventId>>& edges,
                             std::vector<EventSet>* below,
                             std::vector<EventId>* order) {
  std::vector<std::vector<EventId>> out(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : edges) {
    out[a].push_back(b);
    ++indeg[b];
  }
  std::vector<EventId> queue;
  for (int e = 0; e < n; ++e)
    if (indeg[e] == 0) queue.push_back(e);
  below->assign(n, 0);
  order->clear();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    EventId a = queue[i];
    order->push_back(a);
    for (EventId b : out[a]) {
      (*below)[b] |= (*below)[a] | bit(a);
      if (--indeg[b] == 0) queue.push_back(b);
    }
  }
  if (static_cast<int>(order->size()) == n) return {};
  // Walk backwards from a leftover event until an event repeats.
  std::vector<std::vector<EventId>> in(n);
  for (auto [a, b] : edges) in[b].push_back(a);
  EventId start = -1;
  for (int e = 0; e < n; ++e)
    if (indeg[e] > 0) start = e;
  std::vector<int> pos(n, -1);
  std::vector<EventId> path;
  EventId cur = start;
  while (pos[cur] < 0) {
    pos[cur] = static_cast<int>(path.size());
    path.push_back(cur);
    EventId next = -1;
    for (EventId p : in[cur])
      if (indeg[p] > 0) next = p;
    cur = next;
  }
  std::vector<EventId> cycle(path.begin() + pos[cur], path.end());
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

EsReport validate_es(const EsSpec& spec) {
  EsReport report;
  int n = spec.size();
  if (n > kMaxEvents) {
    report.issues.push_back(
        {ErrorCode::SizeLimitExceeded, {}, "more than 64 events"});
    return report;
  }
  if (!ids_ok(spec, &report.issues)) return report;
  std::vector<EventSet> below;
  std::vector<EventId> order;
  auto cycle = closure(n, spec.causality, &below, &order);
  if (!cycle.empty()) {
    report.issues.push_back({ErrorCode::CycleDetected, cycle,
                             "causality contains a cycle"});
    return report;
  }
  for (auto [a, b] : spec.causality) {
    for (EventId c = 0; c < n; ++c) {
      if (has(below[b], c) && has(below[c], a)) {
        report.issues.push_back({ErrorCode::NonCoveringEdge, {a, c, b},
                                 "edge is implied by a longer chain"});
        break;
      }
    }
  }
  std::vector<EventSet> declared(n, 0);
  for (auto [a, b] : spec.conflict) {
    declared[a] |= bit(b);
    declared[b] |= bit(a);
  }
  for (EventId a = 0; a < n; ++a) {
    if (has(declared[a], a)) {
      report.issues.push_back(
          {ErrorCode::ConflictNotInherited, {a}, "event in conflict with itself"});
    }
  }
  for (EventId a = 0; a < n; ++a) {
    for_each_event(declared[a], [&](EventId b) {
      if (a > b) return;
      for (EventId c = 0; c < n; ++c) {
        if (has(below[c], b) && !has(declared[a], c)) {
          report.issues.push_back({ErrorCode::ConflictNotInherited, {a, b, c},
                                   "conflict not inherited along causality"});
          return;
        }
        if (has(below[c], a) && !has(declared[b], c)) {
          report.issues.push_back({ErrorCode::ConflictNotInherited, {b, a, c},
                                   "conflict not inherited along causality"});
          return;
        }
      }
    });
  }
  return report;
}

EventStructure EventStructure::build(const EsSpec& spec) {
  int n = spec.size();
  if (n > kMaxEvents) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "event structure has " + std::to_string(n) + " events (max 64)");
  }
  if (static_cast<int>(spec.label.size()) != n ||
      static_cast<int>(spec.name.size()) != n) {
    throw Error(ErrorCode::InvalidArgument, "label/name arrays mismatch");
  }
  if (!ids_ok(spec, nullptr)) {
    throw Error(ErrorCode::InvalidArgument, "edge refers to an unknown event");
  }
  EventStructure es;
  es.polarity_ = spec.polarity;
  es.label_ = spec.label;
  es.name_ = spec.name;
  for (int e = 0; e < n; ++e) {
    if (es.name_[e].empty()) es.name_[e] = "e" + std::to_string(e);
    if (es.polarity_[e] == Polarity::Positive) es.positive_ |= bit(e);
  }
  std::vector<EventId> order;
  auto cycle = closure(n, spec.causality, &es.below_, &order);
  if (!cycle.empty()) {
    std::ostringstream msg;
    msg << "causality cycle through";
    for (EventId e : cycle) msg << ' ' << es.name_[e];
    throw Error(ErrorCode::CycleDetected, msg.str());
  }
  es.above_.assign(n, 0);
  for (EventId b = 0; b < n; ++b)
    for_each_event(es.below_[b], [&](EventId a) { es.above_[a] |= bit(b); });
  es.preds_.assign(n, 0);
  es.succs_.assign(n, 0);
  for (EventId b = 0; b < n; ++b) {
    for_each_event(es.below_[b], [&](EventId a) {
      if ((es.above_[a] & es.below_[b]) == 0) {
        es.preds_[b] |= bit(a);
        es.succs_[a] |= bit(b);
        es.edges_.emplace_back(a, b);
      }
    });
  }
  std::sort(es.edges_.begin(), es.edges_.end());
  es.conflict_.assign(n, 0);
  for (auto [a, b] : spec.conflict) {
    EventSet up_a = es.above_[a] | bit(a);
    EventSet up_b = es.above_[b] | bit(b);
    if (up_a & up_b) {
      throw Error(ErrorCode::ConflictNotInherited,
                  "conflict between causally related events " + es.name_[a] +
                      " and " + es.name_[b]);
    }
    for_each_event(up_a, [&](EventId c) { es.conflict_[c] |= up_b; });
    for_each_event(up_b, [&](EventId d) { es.conflict_[d] |= up_a; });
  }
  std::vector<int> depth(n, 0);
  for (EventId e : order)
    for_each_event(es.preds_[e],
                   [&](EventId p) { depth[e] = std::max(depth[e], depth[p] + 1); });
  es.topo_.resize(n);
  for (int e = 0; e < n; ++e) es.topo_[e] = e;
  std::stable_sort(es.topo_.begin(), es.topo_.end(),
                   [&](EventId a, EventId b) { return depth[a] < depth[b]; });
  return es;
}

EventSet EventStructure::all() const {
  int n = size();
  return n == 64 ? ~EventSet{0} : (EventSet{1} << n) - 1;
}

EventSet EventStructure::minimal_events() const {
  EventSet out = 0;
  for (int e = 0; e < size(); ++e)
    if (below_[e] == 0) out |= bit(e);
  return out;
}

std::vector<std::pair<EventId, EventId>> EventStructure::minimal_conflicts() const {
  std::vector<std::pair<EventId, EventId>> out;
  for (EventId a = 0; a < size(); ++a) {
    for_each_event(conflict_[a], [&](EventId b) {
      if (b <= a) return;
      // Minimal iff no strict predecessor of either side is already in conflict.
      bool inherited = false;
      for_each_event(below_[a], [&](EventId c) {
        if (has(conflict_[c], b)) inherited = true;
      });
      for_each_event(below_[b], [&](EventId c) {
        if (has(conflict_[c], a)) inherited = true;
      });
      if (!inherited) out.emplace_back(a, b);
    });
  }
  return out;
}

bool EventStructure::is_configuration(EventSet x) const {
  if (x & ~all()) return false;
  bool ok = true;
  for_each_event(x, [&](EventId e) {
    if ((below_[e] & ~x) != 0 || (conflict_[e] & x) != 0) ok = false;
  });
  return ok;
}

EventSet EventStructure::down_closure(EventSet x) const {
  EventSet out = x;
  for_each_event(x, [&](EventId e) { out |= below_[e]; });
  return out;
}

EventId EventStructure::find(const std::string& nm) const {
  for (int e = 0; e < size(); ++e)
    if (name_[e] == nm) return e;
  return -1;
}

EsSpec EventStructure::spec() const {
  EsSpec s;
  s.polarity = polarity_;
  s.label = label_;
  s.name = name_;
  s.causality = edges_;
  s.conflict = minimal_conflicts();
  return s;
}

std::vector<EventSet> enumerate_configurations(const EventStructure& es,
                                               const Limits& limits) {
  std::vector<EventSet> out;
  const auto& order = es.topological_order();
  int n = es.size();
  // Include/exclude each event in topological order; every leaf is distinct.
  struct Frame {
    int i;
    EventSet cur;
  };
  std::vector<Frame> stack{{0, 0}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.i == n) {
      out.push_back(f.cur);
      if (out.size() > limits.config_cap) {
        throw Error(ErrorCode::SizeLimitExceeded,
                    "configuration count exceeds cap " +
                        std::to_string(limits.config_cap));
      }
      continue;
    }
    EventId e = order[f.i];
    stack.push_back({f.i + 1, f.cur});
    if ((es.preds(e) & ~f.cur) == 0 && (es.conflicts(e) & f.cur) == 0) {
      stack.push_back({f.i + 1, f.cur | bit(e)});
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

EventSet maximal_events(const EventStructure& es, EventSet x) {
  EventSet out = 0;
  for_each_event(x, [&](EventId e) {
    if ((es.above(e) & x) == 0) out |= bit(e);
  });
  return out;
}

bool is_plus_covered(const EventStructure& es, EventSet x) {
  return (maximal_events(es, x) & es.negative_events()) == 0;
}

std::string format_set(const EventStructure& es, EventSet x) {
  std::string out = "{";
  bool first = true;
  for_each_event(x, [&](EventId e) {
    if (!first) out += ", ";
    first = false;
    out += es.name(e);
  });
  out += "}";
  return out;
}

}  // namespace cgame
