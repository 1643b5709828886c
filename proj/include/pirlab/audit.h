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

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "pirlab/field.h"
#include "pirlab/graph.h"
#include "pirlab/lincomb.h"
#include "pirlab/plan.h"
#include "pirlab/privacy.h"
#include "pirlab/rational.h"

namespace pirlab {

// Any scheme under audit: theta and the user's private profile in, plan out.
using Planner =
    std::function<QueryPlan(int theta, const PermutationProfile& profile)>;

// plan_for with the per-theta arc choice computed once.
Planner default_planner(const PrivacySetting& setting,
                        const StorageGraph& graph);

// Negative control: the planner's plan with the special server's W_theta term
// pinned to raw symbol 1, i.e. the permutation dropped there.
Planner without_special_permutation(Planner planner,
                                    const StorageGraph& graph);

// Exact law of the complete query a server receives (null included), over
// all (L!)^K equally likely permutation profiles.
using QueryDistribution = std::map<Query, Rational>;

QueryDistribution query_distribution(const Planner& planner,
                                     const StorageGraph& graph, int server,
                                     int theta);
QueryDistribution query_distribution(const PrivacySetting& setting,
                                     const StorageGraph& graph, int server,
                                     int theta);

struct PrivacyViolation {
  int server = 0;
  int theta_a = 0;
  int theta_b = 0;
  Query witness;
  Rational prob_a;
  Rational prob_b;

  Rational gap() const { return prob_a - prob_b; }
};

struct PrivacyReport {
  std::vector<PrivacyViolation> violations;
  // (server, theta-pair) comparisons performed.
  std::uint64_t comparisons = 0;

  bool pass() const { return violations.empty(); }
};

// For every server n and every pair in P_n, the query distributions must be
// equal as exact rationals. One violation is recorded per failing
// (server, pair), witnessed by the first differing query value.
PrivacyReport audit_privacy(const Planner& planner, const StorageGraph& graph,
                            const PrivacySets& sets);
PrivacyReport audit_privacy(const PrivacySetting& setting,
                            const StorageGraph& graph);

struct DecodabilityFailure {
  int theta = 0;
  std::uint64_t profile_index = 0;  // position in for_each_profile order
  std::vector<SymbolRef> unreachable;
};

struct DecodabilityReport {
  std::vector<DecodabilityFailure> failures;
  std::uint64_t plans_checked = 0;

  bool pass() const { return failures.empty(); }
};

// Rank test: for every theta and every profile, both symbols of W_theta lie
// in the span of the plan's combinations over GF(q).
DecodabilityReport check_decodability(const Planner& planner,
                                      const StorageGraph& graph,
                                      const FieldSpec& field);
DecodabilityReport check_decodability(const PrivacySetting& setting,
                                      const StorageGraph& graph,
                                      const FieldSpec& field = FieldSpec(2));

struct RateReport {
  std::vector<int> per_theta_download;  // index theta - 1
  int total_download = 0;
  Rational rate;
};

// D_theta counted in field symbols; throws PlanError if a count varies with
// the profile. rate = K * L / sum D_theta.
RateReport measure_rate(const Planner& planner, const StorageGraph& graph);
RateReport measure_rate(const PrivacySetting& setting,
                        const StorageGraph& graph);

}  // namespace pirlab
