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

#include "pirlab/wire.h"

#include <string>

#include "json.hpp"
#include "pirlab/errors.h"

namespace pirlab {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kPrefix = 4;

std::string payload_text(const Query& combs) {
  std::string out;
  for (const auto& c : combs) {
    if (!out.empty()) out += ';';
    out += c.to_string();
  }
  return out;
}

Query parse_payload(const std::string& text, std::size_t base) {
  Query out;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = text.find(';', start);
    const std::string part = text.substr(
        start, semi == std::string::npos ? std::string::npos : semi - start);
    try {
      out.push_back(parse_lincomb(part));
    } catch (const ParseError& e) {
      throw WireError(std::string("bad query payload: ") + e.what(),
                      base + start + e.offset());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

}  // namespace

Bytes encode_wire(const WireMessage& msg) {
  if (msg.server < 1) throw WireError("server id must be >= 1", 0);
  Json j;
  j["kind"] = msg.kind == WireKind::kQuery ? "query" : "answer";
  j["session"] = msg.session;
  j["server"] = static_cast<std::uint64_t>(msg.server);
  if (msg.kind == WireKind::kQuery) {
    if (msg.combs.empty()) {
      throw WireError("a null query is never put on the wire", 0);
    }
    for (const auto& c : msg.combs) {
      if (c.empty()) throw WireError("empty linear combination", 0);
    }
    j["payload"] = payload_text(msg.combs);
  } else {
    j["payload"] = Json::array();
    for (Element e : msg.symbols) j["payload"].push_back(e);
  }
  const std::string body = j.dump();
  if (body.size() > 0xffffffffu) throw WireError("message too large", 0);
  Bytes out;
  out.reserve(kPrefix + body.size());
  const auto len = static_cast<std::uint32_t>(body.size());
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<std::uint8_t>(len >> shift));
  }
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

WireMessage decode_wire(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kPrefix) throw WireError("truncated length prefix", bytes.size());
  std::uint32_t len = 0;
  for (std::size_t i = 0; i < kPrefix; ++i) len = (len << 8) | bytes[i];
  if (bytes.size() - kPrefix != len) {
    throw WireError("length prefix says " + std::to_string(len) +
                        " bytes, frame carries " +
                        std::to_string(bytes.size() - kPrefix),
                    std::min(bytes.size(), kPrefix + len));
  }
  const std::string body(bytes.begin() + kPrefix, bytes.end());

  Json j;
  try {
    j = Json::parse(body);
  } catch (const Json::parse_error& e) {
    const std::size_t at = e.byte == 0 ? 0 : e.byte - 1;
    throw WireError("malformed JSON", kPrefix + at);
  } catch (const Json::exception&) {
    throw WireError("malformed JSON", kPrefix);
  }

  static const char* const kKeys[] = {"kind", "session", "server", "payload"};
  if (!j.is_object() || j.size() != 4) {
    throw WireError("expected an object with 4 keys", kPrefix);
  }
  std::size_t k = 0;
  for (const auto& item : j.items()) {
    if (item.key() != kKeys[k++]) {
      throw WireError("unexpected key \"" + item.key() + "\"", kPrefix);
    }
  }

  WireMessage msg;
  const Json& kind = j["kind"];
  if (kind == "query") {
    msg.kind = WireKind::kQuery;
  } else if (kind == "answer") {
    msg.kind = WireKind::kAnswer;
  } else {
    throw WireError("kind must be \"query\" or \"answer\"", kPrefix);
  }
  if (!j["session"].is_number_unsigned()) {
    throw WireError("session must be an unsigned integer", kPrefix);
  }
  msg.session = j["session"].get<std::uint64_t>();
  const Json& server = j["server"];
  if (!server.is_number_unsigned() || server.get<std::uint64_t>() < 1 ||
      server.get<std::uint64_t>() > 0x7fffffffu) {
    throw WireError("server must be an integer in [1, 2^31)", kPrefix);
  }
  msg.server = static_cast<int>(server.get<std::uint64_t>());

  const Json& payload = j["payload"];
  if (msg.kind == WireKind::kQuery) {
    if (!payload.is_string()) {
      throw WireError("query payload must be a string", kPrefix);
    }
    const std::size_t base = kPrefix + body.find("\"payload\":\"") + 11;
    msg.combs = parse_payload(payload.get<std::string>(), base);
  } else {
    if (!payload.is_array()) {
      throw WireError("answer payload must be an array", kPrefix);
    }
    for (const auto& e : payload) {
      if (!e.is_number_unsigned() || e.get<std::uint64_t>() > 0xffffffffu) {
        throw WireError("answer symbols must be unsigned 32-bit integers",
                        kPrefix);
      }
      msg.symbols.push_back(static_cast<Element>(e.get<std::uint64_t>()));
    }
  }

  const Bytes canonical = encode_wire(msg);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (i >= canonical.size() || canonical[i] != bytes[i]) {
      throw WireError("non-canonical encoding", i);
    }
  }
  if (canonical.size() != bytes.size()) {
    throw WireError("non-canonical encoding", bytes.size());
  }
  return msg;
}

}  // namespace pirlab
