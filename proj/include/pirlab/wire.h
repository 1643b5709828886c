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
#include <span>
#include <string>
#include <vector>

#include "pirlab/field.h"
#include "pirlab/lincomb.h"

namespace pirlab {

enum class WireKind { kQuery, kAnswer };

struct WireMessage {
  WireKind kind = WireKind::kQuery;
  std::uint64_t session = 0;
  int server = 0;
  Query combs;                   // kQuery payload
  std::vector<Element> symbols;  // kAnswer payload

  bool operator==(const WireMessage&) const = default;
};

using Bytes = std::vector<std::uint8_t>;

// Frame = 4-byte big-endian body length, then the body: compact UTF-8 JSON
// with keys in the fixed order kind, session, server, payload, e.g.
//
//   {"kind":"query","session":7,"server":2,"payload":"W1[2]+W2[1]"}
//   {"kind":"answer","session":7,"server":2,"payload":[1,0]}
//
// A query payload is its combs in canonical text joined by ';' (at least
// one); an answer payload is an array of unsigned integers. Throws WireError
// for messages that cannot be encoded (empty query, server < 1).
Bytes encode_wire(const WireMessage& msg);

// Accepts exactly the bytes encode_wire produces; anything else throws
// WireError with the offset of the first offending byte.
WireMessage decode_wire(std::span<const std::uint8_t> bytes);

}  // namespace pirlab
