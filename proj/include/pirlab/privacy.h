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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "pirlab/graph.h"

namespace pirlab {

enum class PrivacyRule {
  kPathModifiedEdge,
  kPathOneSidedH,
  kPathTwoSidedH,
  kPathTwoSidedHModEdge,
  kCyclicFirstNeighbor,
  kCyclicIthNeighbor,
  kCyclicOneSidedH,
  kCyclicTwoSidedH,
};

// A named privacy-requirement rule plus its integer parameter (h or i).
// Rules without a parameter carry 0.
struct PrivacySetting {
  PrivacyRule rule = PrivacyRule::kPathModifiedEdge;
  int param = 0;

  static PrivacySetting path_modified_edge() {
    return {PrivacyRule::kPathModifiedEdge, 0};
  }
  static PrivacySetting path_one_sided(int h) {
    return {PrivacyRule::kPathOneSidedH, h};
  }
  static PrivacySetting path_two_sided(int h) {
    return {PrivacyRule::kPathTwoSidedH, h};
  }
  static PrivacySetting path_two_sided_mod_edge(int h) {
    return {PrivacyRule::kPathTwoSidedHModEdge, h};
  }
  static PrivacySetting cyclic_first_neighbor() {
    return {PrivacyRule::kCyclicFirstNeighbor, 0};
  }
  static PrivacySetting cyclic_ith_neighbor(int i) {
    return {PrivacyRule::kCyclicIthNeighbor, i};
  }
  static PrivacySetting cyclic_one_sided(int h) {
    return {PrivacyRule::kCyclicOneSidedH, h};
  }
  static PrivacySetting cyclic_two_sided(int h) {
    return {PrivacyRule::kCyclicTwoSidedH, h};
  }

  bool operator==(const PrivacySetting&) const = default;
};

GraphKind required_kind(PrivacyRule rule);
bool has_param(PrivacyRule rule);
// 'h' or 'i'; '\0' for parameterless rules.
char param_letter(PrivacyRule rule);

// Stable CLI-facing name, e.g. "two-sided-cycle".
std::string rule_name(PrivacyRule rule);
std::string describe(const PrivacySetting& setting);

// Inclusive parameter range accepted by the schemes on N servers, or nullopt
// for parameterless rules. The range may be empty (lo > hi).
std::optional<std::pair<int, int>> param_range(PrivacyRule rule, int n);

// Throws KindMismatchError or RangeError when the setting cannot run on the
// graph. Rejections at the top of the i-th neighbor and cyclic one-sided
// ranges, and first-neighbor on C_4, name the open question they come from.
void validate(const PrivacySetting& setting, const StorageGraph& graph);

using PrivacySets = std::map<int, std::set<int>>;

// P_n for every server n.
PrivacySets privacy_sets(const PrivacySetting& setting,
                         const StorageGraph& graph);

// {n : k in P_n}.
std::set<int> servers_requiring_privacy(const PrivacySetting& setting,
                                        const StorageGraph& graph, int message);

}  // namespace pirlab
