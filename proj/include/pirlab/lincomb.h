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

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pirlab/field.h"

namespace pirlab {

// Symbol `sym` (1-based, raw storage index) of message `msg`.
struct SymbolRef {
  int msg = 0;
  int sym = 0;
  auto operator<=>(const SymbolRef&) const = default;
};

// A linear combination of message symbols with nonzero coefficients, kept in
// canonical (msg, sym) order.
class LinComb {
 public:
  LinComb() = default;
  explicit LinComb(SymbolRef ref, Element coeff = 1) { add(ref, coeff); }

  // Adds coeff * ref. Terms whose coefficient reduces to zero are dropped, so
  // the field is needed only when coefficients may wrap.
  LinComb& add(SymbolRef ref, Element coeff = 1);
  LinComb& add(SymbolRef ref, Element coeff, const FieldSpec& field);

  const std::map<SymbolRef, Element>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // "W1[2]+W2[1]"; coefficients other than 1 get a "c*" prefix.
  std::string to_string() const;
  // Letter aliases: W1[2] -> "a2". Falls back to to_string() past 26 messages.
  std::string to_alias_string() const;

  auto operator<=>(const LinComb&) const = default;

 private:
  std::map<SymbolRef, Element> terms_;
};

LinComb operator+(LinComb lhs, const LinComb& rhs);

// Inverse of LinComb::to_string. Accepts any term order and canonicalizes.
// Throws ParseError.
LinComb parse_lincomb(std::string_view text);

// A server's complete received query. Empty means the null query.
using Query = std::vector<LinComb>;

std::string query_to_string(const Query& query);

}  // namespace pirlab
