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

#include <string>
#include <vector>

#include "cgame/symmetry.hpp"

namespace cgame {

// A forest-shaped, conflict-free event structure.
struct Arena {
  EventStructure es;
};
// Throws NotForestial.
Arena make_arena(const EventStructure& es);

// Number of copy indices per nesting depth; depths past the end reuse the
// last entry.
struct CopyBound {
  std::vector<int> per_depth;

  static CopyBound uniform(int k);
  int at(int depth) const;
};

TcgPtr empty_game();
TcgPtr single_event(Polarity p, const std::string& label,
                    const std::string& name = {});

TcgPtr dual(const TcgPtr& a);
TcgPtr parallel(const TcgPtr& a, const TcgPtr& b);
// Copies named "<name>[i]". Throws NotNegative.
TcgPtr bang_ajm(const TcgPtr& n, const CopyBound& bound);
// Events are arena paths with one copy index per move, named
// "<move>(i1,...,id)" and labelled by the last move.
TcgPtr bang_ho(const Arena& a, const CopyBound& bound);
TcgPtr shift_up(const TcgPtr& a);
TcgPtr shift_down(const TcgPtr& a);
TcgPtr sum(const std::vector<TcgPtr>& parts);
// M dualised and placed under the unique minimal event of N. Throws
// NotNegative, or ArityMismatch when N has several minimal events.
TcgPtr linear_arrow(const TcgPtr& m, const TcgPtr& n);

// True when every minimal event is negative.
bool is_negative(const EventStructure& es);

// Family built from independent blocks [offset, offset + size); events in no
// block are fixed.
struct SpecPart {
  int offset = 0;
  int size = 0;
  SymmetrySpec spec;
};
SymmetrySpec lift_parts(const std::string& node, std::vector<SpecPart> parts);
// Restriction of f to [offset, offset + size), reindexed from 0.
ConfigIso project_iso(const ConfigIso& f, int offset, int size);

}  // namespace cgame
