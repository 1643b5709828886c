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

#include "pirlab/store.h"

#include <string>

#include "pirlab/errors.h"

namespace pirlab {

MessageStore MessageStore::random(int n_messages, int length,
                                  const FieldSpec& field,
                                  std::mt19937_64& rng) {
  MessageStore store(length);
  for (int k = 1; k <= n_messages; ++k) {
    std::vector<Element> symbols(length);
    for (auto& s : symbols) s = static_cast<Element>(rng() % field.q());
    store.put(k, std::move(symbols), field);
  }
  return store;
}

void MessageStore::put(int msg, std::vector<Element> symbols,
                       const FieldSpec& field) {
  if (static_cast<int>(symbols.size()) != length_) {
    throw RangeError("message " + std::to_string(msg) + " has " +
                     std::to_string(symbols.size()) + " symbols, expected " +
                     std::to_string(length_));
  }
  for (Element s : symbols) {
    if (s >= field.q()) {
      throw RangeError("symbol value " + std::to_string(s) +
                       " outside GF(" + std::to_string(field.q()) + ")");
    }
  }
  contents_[msg] = std::move(symbols);
}

const std::vector<Element>& MessageStore::message(int msg) const {
  const auto it = contents_.find(msg);
  if (it == contents_.end()) {
    throw LocalityError("message W" + std::to_string(msg) + " not held");
  }
  return it->second;
}

Element MessageStore::at(SymbolRef ref) const {
  const auto& m = message(ref.msg);
  if (ref.sym < 1 || ref.sym > static_cast<int>(m.size())) {
    throw LocalityError("symbol W" + std::to_string(ref.msg) + "[" +
                        std::to_string(ref.sym) + "] out of range");
  }
  return m[ref.sym - 1];
}

MessageStore MessageStore::restricted_to(
    const std::set<int>& messages) const {
  MessageStore out(length_);
  for (int k : messages) {
    const auto it = contents_.find(k);
    if (it != contents_.end()) out.contents_.emplace(k, it->second);
  }
  return out;
}

Element evaluate(const LinComb& comb, const MessageStore& store,
                 const FieldSpec& field) {
  Element acc = 0;
  for (const auto& [ref, c] : comb.terms()) {
    acc = field.add(acc, field.mul(c % field.q(), store.at(ref)));
  }
  return acc;
}

}  // namespace pirlab
