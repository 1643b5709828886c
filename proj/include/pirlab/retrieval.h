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

#include "pirlab/field.h"
#include "pirlab/graph.h"
#include "pirlab/plan.h"
#include "pirlab/store.h"

namespace pirlab {

using Answers = std::vector<std::vector<Element>>;  // answers[n - 1]

struct Transcript {
  QueryPlan plan;
  Answers answers;
  std::vector<Element> decoded;
};

// What server `server` returns for `query`: one field element per comb, empty
// for the null query. Throws LocalityError if a comb names a message outside
// I_server, even when `store` happens to hold it.
std::vector<Element> answer(const StorageGraph& graph, int server,
                            const Query& query, const MessageStore& store,
                            const FieldSpec& field);

// Answers from every server against one full store.
Answers answer_all(const StorageGraph& graph, const QueryPlan& plan,
                   const MessageStore& store, const FieldSpec& field);

// The raw symbols of W_theta to recover.
std::vector<SymbolRef> decode_targets(const QueryPlan& plan);

// Recovers W_theta (stored symbol order) by telescoping the chain sums, done
// as one exact solve. Throws PlanError when a symbol is not decodable.
std::vector<Element> decode(const QueryPlan& plan, const Answers& answers,
                            const FieldSpec& field);

}  // namespace pirlab
