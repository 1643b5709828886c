// Copyright 2026 The pirlab authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <span>
#include <vector>

#include "pirlab/field.h"
#include "pirlab/lincomb.h"

namespace pirlab {

struct Equation {
  LinComb lhs;
  Element rhs = 0;
};

struct SolveResult {
  bool feasible = false;
  // Filled only when feasible.
  std::map<SymbolRef, Element> values;
  // Targets whose unit vector is outside the row span of the left-hand sides.
  std::vector<SymbolRef> unreachable;
};

// Recovers each target symbol if and only if its unit vector lies in the row
// span of the equations' coefficient vectors over GF(q). Feasibility depends
// only on the left-hand sides.
SolveResult solve_targets(std::span<const Equation> equations,
                          std::span<const SymbolRef> targets,
                          const FieldSpec& field);

// Rank test alone: the targets not recoverable from these rows.
std::vector<SymbolRef> unreachable_targets(std::span<const LinComb> rows,
                                           std::span<const SymbolRef> targets,
                                           const FieldSpec& field);

}  // namespace pirlab
