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

#include "pirlab/retrieval.h"

#include <string>

#include "pirlab/errors.h"
#include "pirlab/solver.h"

namespace pirlab {

std::vector<Element> answer(const StorageGraph& graph, int server,
                            const Query& query, const MessageStore& store,
                            const FieldSpec& field) {
  std::vector<Element> out;
  out.reserve(query.size());
  for (const auto& comb : query) {
    for (const auto& [ref, c] : comb.terms()) {
      if (!graph.stores(server, ref.msg)) {
        throw LocalityError("server " + std::to_string(server) +
                            " does not store W" + std::to_string(ref.msg));
      }
    }
    out.push_back(evaluate(comb, store, field));
  }
  return out;
}

Answers answer_all(const StorageGraph& graph, const QueryPlan& plan,
                   const MessageStore& store, const FieldSpec& field) {
  Answers out(graph.n_servers());
  for (int s = 1; s <= graph.n_servers(); ++s) {
    out[s - 1] = answer(graph, s, plan.at(s), store, field);
  }
  return out;
}

std::vector<SymbolRef> decode_targets(const QueryPlan& plan) {
  std::vector<SymbolRef> out;
  for (int j = 1; j <= kSymbolsPerMessage; ++j) out.push_back({plan.theta, j});
  return out;
}

std::vector<Element> decode(const QueryPlan& plan, const Answers& answers,
                            const FieldSpec& field) {
  if (answers.size() != plan.queries.size()) {
    throw PlanError("answer count does not match the plan");
  }
  std::vector<Equation> eqs;
  for (std::size_t s = 0; s < plan.queries.size(); ++s) {
    const auto& q = plan.queries[s];
    if (answers[s].size() != q.size()) {
      throw PlanError("server " + std::to_string(s + 1) + " returned " +
                      std::to_string(answers[s].size()) + " symbols for " +
                      std::to_string(q.size()) + " combinations");
    }
    for (std::size_t j = 0; j < q.size(); ++j) {
      eqs.push_back({q[j], answers[s][j]});
    }
  }
  const auto targets = decode_targets(plan);
  const SolveResult res = solve_targets(eqs, targets, field);
  if (!res.feasible) {
    std::string missing;
    for (const auto& t : res.unreachable) {
      if (!missing.empty()) missing += ", ";
      missing += LinComb(t).to_string();
    }
    throw PlanError("theta = " + std::to_string(plan.theta) +
                    " not decodable: " + missing + " unreachable");
  }
  std::vector<Element> out;
  for (const auto& t : targets) out.push_back(res.values.at(t));
  return out;
}

}  // namespace pirlab
