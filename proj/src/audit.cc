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

#include "pirlab/audit.h"

#include <future>
#include <string>

#include "pirlab/errors.h"
#include "pirlab/solver.h"

namespace pirlab {

namespace {

using Tally = std::map<Query, std::uint64_t>;

// Runs fn(theta) for every theta concurrently and returns the results in
// theta order.
template <typename Fn>
auto per_theta(int n_messages, Fn fn) {
  using Result = decltype(fn(1));
  std::vector<std::future<Result>> jobs;
  jobs.reserve(n_messages);
  for (int theta = 1; theta <= n_messages; ++theta) {
    jobs.push_back(std::async(std::launch::async, fn, theta));
  }
  std::vector<Result> out;
  out.reserve(n_messages);
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

// tallies[n - 1] for one theta.
std::vector<Tally> tally_views(const Planner& planner,
                               const StorageGraph& graph, int theta) {
  std::vector<Tally> views(graph.n_servers());
  for_each_profile(graph.n_messages(), kSymbolsPerMessage,
                   [&](const PermutationProfile& profile) {
                     const QueryPlan plan = planner(theta, profile);
                     for (int s = 1; s <= graph.n_servers(); ++s) {
                       ++views[s - 1][plan.at(s)];
                     }
                   });
  return views;
}

QueryDistribution normalize(const Tally& tally, std::uint64_t total) {
  QueryDistribution dist;
  for (const auto& [query, count] : tally) {
    dist[query] = Rational(static_cast<std::int64_t>(count),
                           static_cast<std::int64_t>(total));
  }
  return dist;
}

Rational prob(const QueryDistribution& d, const Query& q) {
  const auto it = d.find(q);
  return it == d.end() ? Rational(0) : it->second;
}

}  // namespace

Planner default_planner(const PrivacySetting& setting,
                        const StorageGraph& graph) {
  std::vector<ArcChoice> choices;
  for (int theta = 1; theta <= graph.n_messages(); ++theta) {
    choices.push_back(select_arc(setting, graph, theta));
  }
  return [graph, choices = std::move(choices)](
             int theta, const PermutationProfile& profile) {
    if (theta < 1 || theta > graph.n_messages()) {
      throw RangeError("theta must be in [1, " +
                       std::to_string(graph.n_messages()) + "]");
    }
    return plan_with(graph, choices[theta - 1], theta, profile);
  };
}

Planner without_special_permutation(Planner planner,
                                    const StorageGraph& graph) {
  return [planner = std::move(planner), graph](
             int theta, const PermutationProfile& profile) {
    QueryPlan plan = planner(theta, profile);
    auto& q = plan.queries[graph.wrap(theta + 1) - 1];
    for (auto& comb : q) {
      LinComb pinned;
      for (const auto& [ref, c] : comb.terms()) {
        pinned.add(ref.msg == theta ? SymbolRef{theta, 1} : ref, c);
      }
      comb = pinned;
    }
    return plan;
  };
}

QueryDistribution query_distribution(const Planner& planner,
                                     const StorageGraph& graph, int server,
                                     int theta) {
  graph.stores(server);
  Tally tally;
  for_each_profile(graph.n_messages(), kSymbolsPerMessage,
                   [&](const PermutationProfile& profile) {
                     ++tally[planner(theta, profile).at(server)];
                   });
  return normalize(tally,
                   profile_count(graph.n_messages(), kSymbolsPerMessage));
}

QueryDistribution query_distribution(const PrivacySetting& setting,
                                     const StorageGraph& graph, int server,
                                     int theta) {
  return query_distribution(default_planner(setting, graph), graph, server,
                            theta);
}

PrivacyReport audit_privacy(const Planner& planner, const StorageGraph& graph,
                            const PrivacySets& sets) {
  const std::uint64_t total =
      profile_count(graph.n_messages(), kSymbolsPerMessage);
  const auto tallies = per_theta(graph.n_messages(), [&](int theta) {
    return tally_views(planner, graph, theta);
  });

  PrivacyReport report;
  for (const auto& [server, ps] : sets) {
    std::vector<int> thetas(ps.begin(), ps.end());
    // Equality is transitive, so comparing against the first theta of P_n
    // decides the whole set; every pair is still reported when it differs.
    for (std::size_t a = 0; a < thetas.size(); ++a) {
      for (std::size_t b = a + 1; b < thetas.size(); ++b) {
        ++report.comparisons;
        const auto da = normalize(tallies[thetas[a] - 1][server - 1], total);
        const auto db = normalize(tallies[thetas[b] - 1][server - 1], total);
        if (da == db) continue;
        std::map<Query, int> support;
        for (const auto& [q, p] : da) support[q];
        for (const auto& [q, p] : db) support[q];
        for (const auto& [q, unused] : support) {
          const Rational pa = prob(da, q);
          const Rational pb = prob(db, q);
          if (pa != pb) {
            report.violations.push_back(
                {server, thetas[a], thetas[b], q, pa, pb});
            break;
          }
        }
      }
    }
  }
  return report;
}

PrivacyReport audit_privacy(const PrivacySetting& setting,
                            const StorageGraph& graph) {
  return audit_privacy(default_planner(setting, graph), graph,
                       privacy_sets(setting, graph));
}

DecodabilityReport check_decodability(const Planner& planner,
                                      const StorageGraph& graph,
                                      const FieldSpec& field) {
  const auto per = per_theta(graph.n_messages(), [&](int theta) {
    DecodabilityReport part;
    std::uint64_t index = 0;
    for_each_profile(
        graph.n_messages(), kSymbolsPerMessage,
        [&](const PermutationProfile& profile) {
          const QueryPlan plan = planner(theta, profile);
          std::vector<LinComb> rows;
          for (const auto& q : plan.queries) {
            rows.insert(rows.end(), q.begin(), q.end());
          }
          const std::vector<SymbolRef> targets{{theta, 1}, {theta, 2}};
          auto missing = unreachable_targets(rows, targets, field);
          if (!missing.empty()) {
            part.failures.push_back({theta, index, std::move(missing)});
          }
          ++part.plans_checked;
          ++index;
        });
    return part;
  });
  DecodabilityReport report;
  for (auto& part : per) {
    report.plans_checked += part.plans_checked;
    report.failures.insert(report.failures.end(), part.failures.begin(),
                           part.failures.end());
  }
  return report;
}

DecodabilityReport check_decodability(const PrivacySetting& setting,
                                      const StorageGraph& graph,
                                      const FieldSpec& field) {
  return check_decodability(default_planner(setting, graph), graph, field);
}

RateReport measure_rate(const Planner& planner, const StorageGraph& graph) {
  const auto counts = per_theta(graph.n_messages(), [&](int theta) {
    int count = -1;
    for_each_profile(graph.n_messages(), kSymbolsPerMessage,
                     [&](const PermutationProfile& profile) {
                       const int d = planner(theta, profile).download_count();
                       if (count >= 0 && d != count) {
                         throw PlanError("download count for theta = " +
                                         std::to_string(theta) +
                                         " depends on the profile");
                       }
                       count = d;
                     });
    return count;
  });
  RateReport report;
  report.per_theta_download = counts;
  for (int d : counts) report.total_download += d;
  report.rate = Rational(graph.n_messages() * kSymbolsPerMessage,
                         report.total_download);
  return report;
}

RateReport measure_rate(const PrivacySetting& setting,
                        const StorageGraph& graph) {
  return measure_rate(default_planner(setting, graph), graph);
}

}  // namespace pirlab
