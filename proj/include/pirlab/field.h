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

namespace pirlab {

using Element = std::uint32_t;

// Prime field GF(q). Every scheme here uses coefficient-one sums, so GF(2)
// is the default; larger q shows the constructions are field independent.
class FieldSpec {
 public:
  // Throws ParameterError unless q is a prime below 2^16.
  explicit FieldSpec(std::uint32_t q = 2);

  std::uint32_t q() const { return q_; }

  Element add(Element a, Element b) const { return (a + b) % q_; }
  Element sub(Element a, Element b) const { return (a + q_ - b) % q_; }
  Element neg(Element a) const { return (q_ - a) % q_; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((std::uint64_t{a} * b) % q_);
  }
  // a must be nonzero.
  Element inv(Element a) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t n);

}  // namespace pirlab
