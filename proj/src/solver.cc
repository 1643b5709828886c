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

#include "pirlab/solver.h"

#include <algorithm>

namespace pirlab {

namespace {

// Dense row-reduced echelon form over GF(q) with one augmented column.
struct Reduced {
  std::vector<SymbolRef> columns;
  std::vector<std::vector<Element>> rows;  // width columns.size() + 1
  std::vector<int> pivot_row;              // per column, -1 if free
};

Reduced reduce(std::span<const LinComb> lhs, std::span<const Element> rhs,
               std::span<const SymbolRef> targets, const FieldSpec& field) {
  Reduced r;
  for (const auto& comb : lhs) {
    for (const auto& [ref, c] : comb.terms()) r.columns.push_back(ref);
  }
  r.columns.insert(r.columns.end(), targets.begin(), targets.end());
  std::sort(r.columns.begin(), r.columns.end());
  r.columns.erase(std::unique(r.columns.begin(), r.columns.end()),
                  r.columns.end());
  const std::size_t width = r.columns.size();
  auto col_of = [&](SymbolRef ref) {
    return static_cast<std::size_t>(
        std::lower_bound(r.columns.begin(), r.columns.end(), ref) -
        r.columns.begin());
  };

  r.rows.assign(lhs.size(), std::vector<Element>(width + 1, 0));
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    for (const auto& [ref, c] : lhs[i].terms()) {
      r.rows[i][col_of(ref)] = c % field.q();
    }
    r.rows[i][width] = rhs.empty() ? 0 : rhs[i] % field.q();
  }

  r.pivot_row.assign(width, -1);
  std::size_t next = 0;
  for (std::size_t col = 0; col < width && next < r.rows.size(); ++col) {
    std::size_t pick = next;
    while (pick < r.rows.size() && r.rows[pick][col] == 0) ++pick;
    if (pick == r.rows.size()) continue;
    std::swap(r.rows[pick], r.rows[next]);
    auto& prow = r.rows[next];
    const Element scale = field.inv(prow[col]);
    for (auto& v : prow) v = field.mul(v, scale);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      if (i == next || r.rows[i][col] == 0) continue;
      const Element f = r.rows[i][col];
      for (std::size_t j = 0; j <= width; ++j) {
        r.rows[i][j] = field.sub(r.rows[i][j], field.mul(f, prow[j]));
      }
    }
    r.pivot_row[col] = static_cast<int>(next);
    ++next;
  }
  return r;
}

// In RREF, e_t is in the row span iff column t has a pivot and that pivot's
// row has no other nonzero coefficient.
int isolating_row(const Reduced& r, SymbolRef target) {
  const auto it =
      std::lower_bound(r.columns.begin(), r.columns.end(), target);
  const auto col = static_cast<std::size_t>(it - r.columns.begin());
  const int row = r.pivot_row[col];
  if (row < 0) return -1;
  const auto& vals = r.rows[row];
  for (std::size_t j = 0; j < r.columns.size(); ++j) {
    if (j != col && vals[j] != 0) return -1;
  }
  return row;
}

}  // namespace

SolveResult solve_targets(std::span<const Equation> equations,
                          std::span<const SymbolRef> targets,
                          const FieldSpec& field) {
  std::vector<LinComb> lhs;
  std::vector<Element> rhs;
  lhs.reserve(equations.size());
  rhs.reserve(equations.size());
  for (const auto& eq : equations) {
    lhs.push_back(eq.lhs);
    rhs.push_back(eq.rhs);
  }
  const Reduced r = reduce(lhs, rhs, targets, field);
  SolveResult out;
  for (const auto& t : targets) {
    const int row = isolating_row(r, t);
    if (row < 0) {
      out.unreachable.push_back(t);
    } else {
      out.values[t] = r.rows[row][r.columns.size()];
    }
  }
  out.feasible = out.unreachable.empty();
  if (!out.feasible) out.values.clear();
  return out;
}

std::vector<SymbolRef> unreachable_targets(std::span<const LinComb> rows,
                                           std::span<const SymbolRef> targets,
                                           const FieldSpec& field) {
  const Reduced r = reduce(rows, {}, targets, field);
  std::vector<SymbolRef> out;
  for (const auto& t : targets) {
    if (isolating_row(r, t) < 0) out.push_back(t);
  }
  return out;
}

}  // namespace pirlab
