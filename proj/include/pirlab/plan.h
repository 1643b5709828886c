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

#include <set>
#include <vector>

#include "pirlab/graph.h"
#include "pirlab/lincomb.h"
#include "pirlab/permutation.h"
#include "pirlab/privacy.h"

namespace pirlab {

// Every built-in scheme splits messages into two symbols.
inline constexpr int kSymbolsPerMessage = 2;

// A contiguous run of `length` servers starting at `start`. On a cycle the
// run may wrap, and length N+1 puts both ends on the same physical server.
struct Arc {
  int start = 1;
  int length = 0;

  int end(const StorageGraph& g) const { return g.wrap(start + length - 1); }
  bool operator==(const Arc&) const = default;
};

struct QueryPlan {
  int theta = 0;
  // queries[n - 1] is what server n receives; an empty list is the null query.
  std::vector<Query> queries;
  Arc arc;
  std::set<int> dummy_servers;

  const Query& at(int server) const { return queries.at(server - 1); }
  // Number of linear combinations, i.e. downloaded field symbols.
  int download_count() const;
  std::set<int> contacted_servers() const;

  bool operator==(const QueryPlan&) const = default;
};

// One retrieval window. With a the arc start and b its end:
//   server a receives the clean symbol W_a(1),
//   interior servers m receive W_{m-1}(1) + W_m(1),
//   server theta+1 receives W_theta(2) + W_{theta+1}(1),
//   server b receives the clean symbol W_{b-1}(1).
// Path edges: with a = theta = 1 the clean symbol at server 1 is the first
// information symbol, and with theta+1 = b = N server N receives W_{N-1}(2).
// The second symbol of W_theta always goes to the higher-numbered of its two
// holders (on a cycle, theta = N therefore swaps the roles of W_N's symbols).
// Symbol indices pass through `profile` before emission. Throws PlanError if
// theta does not sit inside the arc as described.
QueryPlan window_retrieve(const StorageGraph& graph, const Arc& arc,
                          int theta, const PermutationProfile& profile);

struct ArcChoice {
  Arc arc;
  std::set<int> dummies;
};

// The retrieval window (and dummy servers) the setting uses for theta.
ArcChoice select_arc(const PrivacySetting& setting, const StorageGraph& graph,
                     int theta);

// window_retrieve on choice.arc plus the dummy queries.
QueryPlan plan_with(const StorageGraph& graph, const ArcChoice& choice,
                    int theta, const PermutationProfile& profile);

// Full query plan: the selected window plus a chain-shaped sum
// W_{n-1}(1) + W_n(1) at each dummy server. Reads no message contents.
QueryPlan plan_for(const PrivacySetting& setting, const StorageGraph& graph,
                   int theta, const PermutationProfile& profile);

// Throws LocalityError if any comb at server n names a message outside I_n.
void check_locality(const StorageGraph& graph, const QueryPlan& plan);

}  // namespace pirlab
