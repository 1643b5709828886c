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

#include "pirlab/privacy.h"

#include <algorithm>

#include "pirlab/errors.h"

namespace pirlab {

namespace {

// Indices lo..hi taken mod N; spans longer than N just cover everything.
std::set<int> cyclic_span(const StorageGraph& g, int lo, int hi) {
  std::set<int> out;
  for (int x = lo; x <= hi; ++x) out.insert(g.wrap(x));
  return out;
}

std::set<int> path_span(int lo, int hi) {
  std::set<int> out;
  for (int x = lo; x <= hi; ++x) out.insert(x);
  return out;
}

}  // namespace

GraphKind required_kind(PrivacyRule rule) {
  switch (rule) {
    case PrivacyRule::kPathModifiedEdge:
    case PrivacyRule::kPathOneSidedH:
    case PrivacyRule::kPathTwoSidedH:
    case PrivacyRule::kPathTwoSidedHModEdge:
      return GraphKind::kPath;
    default:
      return GraphKind::kCycle;
  }
}

bool has_param(PrivacyRule rule) { return param_letter(rule) != '\0'; }

char param_letter(PrivacyRule rule) {
  switch (rule) {
    case PrivacyRule::kPathModifiedEdge:
    case PrivacyRule::kCyclicFirstNeighbor:
      return '\0';
    case PrivacyRule::kCyclicIthNeighbor:
      return 'i';
    default:
      return 'h';
  }
}

std::string rule_name(PrivacyRule rule) {
  switch (rule) {
    case PrivacyRule::kPathModifiedEdge:
      return "modified-edge";
    case PrivacyRule::kPathOneSidedH:
      return "one-sided-path";
    case PrivacyRule::kPathTwoSidedH:
      return "two-sided-path";
    case PrivacyRule::kPathTwoSidedHModEdge:
      return "two-sided-path-mod-edge";
    case PrivacyRule::kCyclicFirstNeighbor:
      return "first-neighbor";
    case PrivacyRule::kCyclicIthNeighbor:
      return "ith-neighbor";
    case PrivacyRule::kCyclicOneSidedH:
      return "one-sided-cycle";
    case PrivacyRule::kCyclicTwoSidedH:
      return "two-sided-cycle";
  }
  return "unknown";
}

std::string describe(const PrivacySetting& setting) {
  std::string out = rule_name(setting.rule);
  if (has_param(setting.rule)) {
    out += "(";
    out += param_letter(setting.rule);
    out += "=" + std::to_string(setting.param) + ")";
  }
  return out;
}

std::optional<std::pair<int, int>> param_range(PrivacyRule rule, int n) {
  switch (rule) {
    case PrivacyRule::kPathModifiedEdge:
    case PrivacyRule::kCyclicFirstNeighbor:
      return std::nullopt;
    case PrivacyRule::kPathOneSidedH:
      return std::pair{1, n - 2};
    case PrivacyRule::kPathTwoSidedH:
      return std::pair{1, n - 3};
    case PrivacyRule::kPathTwoSidedHModEdge:
      return std::pair{0, n - 3};
    case PrivacyRule::kCyclicIthNeighbor:
      return std::pair{2, n - 3};
    case PrivacyRule::kCyclicOneSidedH:
      return std::pair{0, n - 3};
    case PrivacyRule::kCyclicTwoSidedH:
      return std::pair{0, (n - 3) / 2};
  }
  return std::nullopt;
}

void validate(const PrivacySetting& setting, const StorageGraph& graph) {
  const int n = graph.n_servers();
  if (required_kind(setting.rule) != graph.kind()) {
    throw KindMismatchError(rule_name(setting.rule) + " needs a " +
                            to_string(required_kind(setting.rule)) +
                            " graph, got " + graph.name());
  }
  if (setting.rule == PrivacyRule::kCyclicFirstNeighbor && n < 5) {
    throw RangeError(
        "first-neighbor needs N >= 5: its five-server retrieval arc does not "
        "fit on " +
        graph.name() + " (open question: minimum cycle size)");
  }
  const auto range = param_range(setting.rule, n);
  if (!range) return;
  const int p = setting.param;
  if (p >= range->first && p <= range->second) return;

  const std::string letter(1, param_letter(setting.rule));
  std::string msg = rule_name(setting.rule) + " on " + graph.name() +
                    " needs " + letter + " in [" +
                    std::to_string(range->first) + ", " +
                    std::to_string(range->second) + "], got " + letter +
                    " = " + std::to_string(p);
  if (setting.rule == PrivacyRule::kCyclicIthNeighbor && p == n - 2) {
    msg +=
        "; i = N-2 is unsupported (open question: the dummy servers collide "
        "with the retrieval arc and the colliding server's view depends on "
        "theta)";
  } else if (setting.rule == PrivacyRule::kCyclicOneSidedH && p == n - 2) {
    msg +=
        "; h = N-2 is unsupported (open question: every P_n = [N] and the arc "
        "of h+4 servers wraps the cycle twice)";
  }
  throw RangeError(msg);
}

PrivacySets privacy_sets(const PrivacySetting& setting,
                         const StorageGraph& graph) {
  validate(setting, graph);
  const int n = graph.n_servers();
  const int k = graph.n_messages();
  const int p = setting.param;
  PrivacySets sets;

  auto path_two_sided = [&](int s) {
    return path_span(std::max(1, s - p - 1), std::min(s + p, k));
  };

  for (int s = 1; s <= n; ++s) {
    std::set<int> ps;
    switch (setting.rule) {
      case PrivacyRule::kPathModifiedEdge:
        if (s == 1) {
          ps = graph.stores(2);
        } else if (s == n) {
          ps = graph.stores(n - 1);
        } else {
          ps = graph.stores(s);
        }
        break;
      case PrivacyRule::kPathOneSidedH:
        ps = path_span(std::max(1, s - 1), std::min(s + p, k));
        break;
      case PrivacyRule::kPathTwoSidedH:
        ps = path_two_sided(s);
        break;
      case PrivacyRule::kPathTwoSidedHModEdge:
        ps = path_two_sided(s == 1 ? 2 : (s == n ? n - 1 : s));
        break;
      case PrivacyRule::kCyclicFirstNeighbor: {
        ps = graph.stores(s);
        const auto& next = graph.stores(graph.wrap(s + 1));
        ps.insert(next.begin(), next.end());
        break;
      }
      case PrivacyRule::kCyclicIthNeighbor: {
        ps = graph.stores(s);
        const auto& other = graph.stores(graph.wrap(s + p));
        ps.insert(other.begin(), other.end());
        break;
      }
      case PrivacyRule::kCyclicOneSidedH:
        ps = cyclic_span(graph, s - 1, s + p);
        break;
      case PrivacyRule::kCyclicTwoSidedH:
        ps = cyclic_span(graph, s - p - 1, s + p);
        break;
    }
    sets.emplace(s, std::move(ps));
  }
  return sets;
}

std::set<int> servers_requiring_privacy(const PrivacySetting& setting,
                                        const StorageGraph& graph,
                                        int message) {
  if (message < 1 || message > graph.n_messages()) {
    throw RangeError("message " + std::to_string(message) + " outside [1, " +
                     std::to_string(graph.n_messages()) + "]");
  }
  std::set<int> out;
  for (const auto& [server, ps] : privacy_sets(setting, graph)) {
    if (ps.count(message)) out.insert(server);
  }
  return out;
}

}  // namespace pirlab
