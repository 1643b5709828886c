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

#include <vector>

#include "pirlab/graph.h"
#include "pirlab/privacy.h"
#include "pirlab/rational.h"

namespace pirlab::testing {

struct Cell {
  PrivacySetting setting;
  GraphKind kind;
  int n;
};

// Every (setting, N) pair the schemes are expected to serve, N capped at
// max_n (cyclic two-sided goes one further when max_n allows).
inline std::vector<Cell> scheme_grid(int max_n) {
  std::vector<Cell> cells;
  const auto path = GraphKind::kPath;
  const auto cyc = GraphKind::kCycle;
  for (int n = 4; n <= std::min(max_n, 10); ++n) {
    cells.push_back({PrivacySetting::path_modified_edge(), path, n});
  }
  for (int n = 5; n <= std::min(max_n, 10); ++n) {
    for (int h = 1; h <= n - 2; ++h) {
      cells.push_back({PrivacySetting::path_one_sided(h), path, n});
    }
    for (int h = 1; h <= n - 3; ++h) {
      cells.push_back({PrivacySetting::path_two_sided(h), path, n});
    }
    for (int h = 0; h <= n - 3; ++h) {
      cells.push_back({PrivacySetting::path_two_sided_mod_edge(h), path, n});
    }
    cells.push_back({PrivacySetting::cyclic_first_neighbor(), cyc, n});
    for (int i = 2; i <= n - 3; ++i) {
      if (n >= 6) {
        cells.push_back({PrivacySetting::cyclic_ith_neighbor(i), cyc, n});
      }
    }
    for (int h = 0; h <= n - 3; ++h) {
      cells.push_back({PrivacySetting::cyclic_one_sided(h), cyc, n});
    }
  }
  for (int n = 5; n <= std::min(max_n, 11); ++n) {
    for (int h = 0; h <= (n - 3) / 2; ++h) {
      cells.push_back({PrivacySetting::cyclic_two_sided(h), cyc, n});
    }
  }
  return cells;
}

// Closed forms written out independently of capacity.cc.
inline Rational expected_rate(const Cell& c) {
  const std::int64_t n = c.n;
  const std::int64_t p = c.setting.param;
  switch (c.setting.rule) {
    case PrivacyRule::kPathModifiedEdge:
      return Rational(n - 1, 2 * n - 3);
    case PrivacyRule::kPathOneSidedH: {
      // (h+2)(h+1)/2 + 3h + 5 + (h+4)(N-h-3)
      const std::int64_t den =
          (p + 2) * (p + 1) / 2 + 3 * p + 5 + (p + 4) * (n - p - 3);
      return Rational(2 * (n - 1), den);
    }
    case PrivacyRule::kPathTwoSidedH:
    case PrivacyRule::kPathTwoSidedHModEdge:
      return Rational(2 * (n - 1), (p + 2) * (2 * n - p - 3));
    case PrivacyRule::kCyclicFirstNeighbor:
      return Rational(2, 5);
    case PrivacyRule::kCyclicIthNeighbor:
      return Rational(1, 3);
    case PrivacyRule::kCyclicOneSidedH:
      return Rational(2, p + 4);
    case PrivacyRule::kCyclicTwoSidedH:
      return Rational(1, p + 2);
  }
  return Rational(0);
}

}  // namespace pirlab::testing
