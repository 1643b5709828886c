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

#include "pirlab/plan.h"

#include <algorithm>
#include <string>

#include "pirlab/errors.h"

namespace pirlab {

int QueryPlan::download_count() const {
  int total = 0;
  for (const auto& q : queries) total += static_cast<int>(q.size());
  return total;
}

std::set<int> QueryPlan::contacted_servers() const {
  std::set<int> out;
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (!queries[i].empty()) out.insert(static_cast<int>(i) + 1);
  }
  return out;
}

void check_locality(const StorageGraph& graph, const QueryPlan& plan) {
  for (int s = 1; s <= graph.n_servers(); ++s) {
    for (const auto& comb : plan.at(s)) {
      for (const auto& [ref, c] : comb.terms()) {
        if (!graph.stores(s, ref.msg)) {
          throw LocalityError("server " + std::to_string(s) +
                              " asked for W" + std::to_string(ref.msg) +
                              " which it does not store");
        }
      }
    }
  }
}

QueryPlan window_retrieve(const StorageGraph& graph, const Arc& arc,
                          int theta, const PermutationProfile& profile) {
  const int n = graph.n_servers();
  const bool path = !graph.is_cycle();
  const int len = arc.length;
  if (theta < 1 || theta > graph.n_messages()) {
    throw PlanError("theta " + std::to_string(theta) + " outside [1, " +
                    std::to_string(graph.n_messages()) + "]");
  }
  if (profile.n_messages() != graph.n_messages() ||
      profile.length() != kSymbolsPerMessage) {
    throw PlanError("permutation profile does not match the graph");
  }
  if (len < 3) throw PlanError("arc shorter than 3 servers");
  if (path && (arc.start < 1 || arc.start + len - 1 > n)) {
    throw PlanError("arc leaves the path");
  }
  if (!path && (arc.start < 1 || arc.start > n || len > n + 1)) {
    throw PlanError("arc longer than the cycle allows");
  }

  int pos_theta = theta - arc.start;
  if (!path) pos_theta = ((pos_theta % n) + n) % n;
  const int special = pos_theta + 1;
  const bool theta_is_left_edge = path && arc.start == 1 && theta == 1;
  const bool special_is_right_edge =
      path && special == len - 1 && arc.start + len - 1 == n;
  if ((pos_theta < 1 && !theta_is_left_edge) || pos_theta >= len) {
    throw PlanError("theta is not inside the arc");
  }
  if (special > len - 2 && !special_is_right_edge) {
    throw PlanError("theta+1 is not inside the arc");
  }

  const int next = graph.wrap(theta + 1);
  // Logical symbol of W_theta requested from server theta; the other one
  // goes to server theta+1.
  const int sym_at_theta = graph.holders(theta).second == next ? 1 : 2;
  const int sym_at_next = 3 - sym_at_theta;
  auto ref = [&](int msg, int logical) {
    return SymbolRef{msg, profile.apply(msg, logical)};
  };
  auto first = [&](int msg) {
    return ref(msg, msg == theta ? sym_at_theta : 1);
  };

  QueryPlan plan;
  plan.theta = theta;
  plan.arc = arc;
  plan.queries.assign(n, {});
  for (int p = 0; p < len; ++p) {
    const int s = graph.wrap(arc.start + p);
    const int prev = graph.wrap(s - 1);
    LinComb comb;
    if (p == special) {
      if (special_is_right_edge) {
        comb.add(ref(theta, sym_at_next));
      } else {
        comb.add(ref(theta, sym_at_next)).add(first(next));
      }
    } else if (p == 0) {
      comb.add(first(s));
    } else if (p == len - 1) {
      comb.add(first(prev));
    } else {
      comb.add(first(prev)).add(first(s));
    }
    plan.queries[s - 1].push_back(std::move(comb));
  }
  for (auto& q : plan.queries) std::sort(q.begin(), q.end());
  check_locality(graph, plan);
  return plan;
}

namespace {

Arc span_arc(int lo, int hi) { return Arc{lo, hi - lo + 1}; }

ArcChoice path_arc(const PrivacySetting& setting, const StorageGraph& graph,
                   int theta) {
  const int n = graph.n_servers();
  const int h = setting.param;
  switch (setting.rule) {
    case PrivacyRule::kPathModifiedEdge:
      if (theta == 1) return {span_arc(1, 3), {}};
      if (theta == n - 1) return {span_arc(n - 2, n), {}};
      return {span_arc(theta - 1, theta + 2), {}};
    case PrivacyRule::kPathOneSidedH:
      if (theta <= std::min(h + 1, n - 2)) return {span_arc(1, theta + 2), {}};
      if (theta <= n - 2) return {span_arc(theta - h - 1, theta + 2), {}};
      return {span_arc(std::max(1, n - h - 2), n), {}};
    case PrivacyRule::kPathTwoSidedH:
    case PrivacyRule::kPathTwoSidedHModEdge: {
      // The servers that must not learn theta, widened by one anchor server
      // on each side where the path allows it.
      const auto need = servers_requiring_privacy(setting, graph, theta);
      const int lo = *need.begin();
      const int hi = *need.rbegin();
      if (hi - lo + 1 != static_cast<int>(need.size())) {
        throw PlanError("privacy servers for theta are not contiguous");
      }
      return {span_arc(std::max(1, lo - 1), std::min(n, hi + 1)), {}};
    }
    default:
      break;
  }
  throw KindMismatchError(rule_name(setting.rule) + " is not a path rule");
}

ArcChoice cycle_arc(const PrivacySetting& setting, const StorageGraph& graph,
                    int theta) {
  const int p = setting.param;
  auto arc = [&](int lo, int hi) {
    return Arc{graph.wrap(lo), hi - lo + 1};
  };
  switch (setting.rule) {
    case PrivacyRule::kCyclicFirstNeighbor:
      return {arc(theta - 2, theta + 2), {}};
    case PrivacyRule::kCyclicIthNeighbor:
      if (p == 2) return {arc(theta - 3, theta + 2), {}};
      return {arc(theta - 1, theta + 2),
              {graph.wrap(theta - p), graph.wrap(theta - p + 1)}};
    case PrivacyRule::kCyclicOneSidedH:
      return {arc(theta - p - 1, theta + 2), {}};
    case PrivacyRule::kCyclicTwoSidedH:
      return {arc(theta - p - 1, theta + p + 2), {}};
    default:
      break;
  }
  throw KindMismatchError(rule_name(setting.rule) + " is not a cycle rule");
}

}  // namespace

ArcChoice select_arc(const PrivacySetting& setting, const StorageGraph& graph,
                     int theta) {
  validate(setting, graph);
  if (theta < 1 || theta > graph.n_messages()) {
    throw RangeError("theta must be in [1, " +
                     std::to_string(graph.n_messages()) + "], got " +
                     std::to_string(theta));
  }
  return graph.is_cycle() ? cycle_arc(setting, graph, theta)
                          : path_arc(setting, graph, theta);
}

QueryPlan plan_with(const StorageGraph& graph, const ArcChoice& choice,
                    int theta, const PermutationProfile& profile) {
  QueryPlan plan = window_retrieve(graph, choice.arc, theta, profile);
  for (int d : choice.dummies) {
    auto& q = plan.queries[d - 1];
    if (!q.empty()) {
      throw PlanError("dummy server " + std::to_string(d) +
                      " overlaps the retrieval arc");
    }
    const int prev = graph.wrap(d - 1);
    q.push_back(LinComb(SymbolRef{prev, profile.apply(prev, 1)})
                    .add(SymbolRef{d, profile.apply(d, 1)}));
  }
  plan.dummy_servers = choice.dummies;
  check_locality(graph, plan);
  return plan;
}

QueryPlan plan_for(const PrivacySetting& setting, const StorageGraph& graph,
                   int theta, const PermutationProfile& profile) {
  return plan_with(graph, select_arc(setting, graph, theta), theta, profile);
}

}  // namespace pirlab
