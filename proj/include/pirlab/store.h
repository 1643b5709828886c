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
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pirlab/field.h"
#include "pirlab/lincomb.h"

namespace pirlab {

// Message contents, message id -> L field elements in raw storage order.
// A server's shard is a MessageStore holding only its own messages.
class MessageStore {
 public:
  MessageStore() = default;
  explicit MessageStore(int length) : length_(length) {}

  // Uniform contents for messages 1..n_messages.
  static MessageStore random(int n_messages, int length,
                             const FieldSpec& field, std::mt19937_64& rng);

  int length() const { return length_; }

  // Throws RangeError on wrong length or out-of-field values.
  void put(int msg, std::vector<Element> symbols, const FieldSpec& field);

  bool contains(int msg) const { return contents_.count(msg) > 0; }
  const std::vector<Element>& message(int msg) const;
  Element at(SymbolRef ref) const;

  MessageStore restricted_to(const std::set<int>& messages) const;

  const std::map<int, std::vector<Element>>& contents() const {
    return contents_;
  }

  bool operator==(const MessageStore&) const = default;

 private:
  int length_ = 0;
  std::map<int, std::vector<Element>> contents_;
};

// Sum of coeff * symbol over GF(q). Throws LocalityError when a term names a
// message or symbol the store does not hold.
Element evaluate(const LinComb& comb, const MessageStore& store,
                 const FieldSpec& field);

}  // namespace pirlab
