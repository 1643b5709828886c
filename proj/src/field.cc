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

#include "pirlab/field.h"

#include <string>

#include "pirlab/errors.h"

namespace pirlab {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q >= (1u << 16) || !is_prime(q)) {
    throw ParameterError("field modulus q must be a prime below 65536, got " +
                         std::to_string(q));
  }
}

Element FieldSpec::inv(Element a) const {
  // Fermat: a^(q-2).
  Element result = 1;
  Element base = a % q_;
  std::uint32_t e = q_ - 2;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

}  // namespace pirlab
