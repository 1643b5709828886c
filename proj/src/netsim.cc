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

#include "pirlab/netsim.h"

#include "json.hpp"
#include "pirlab/errors.h"

namespace pirlab {

ServerNode::ServerNode(StorageGraph graph, int id, MessageStore shard,
                       FieldSpec field)
    : graph_(std::move(graph)),
      id_(id),
      shard_(std::move(shard)),
      field_(field) {
  for (const auto& [msg, symbols] : shard_.contents()) {
    if (!graph_.stores(id_, msg)) {
      throw LocalityError("server " + std::to_string(id_) +
                          " provisioned with W" + std::to_string(msg));
    }
  }
}

Bytes ServerNode::handle(std::span<const std::uint8_t> frame) const {
  const WireMessage query = decode_wire(frame);
  if (query.kind != WireKind::kQuery || query.server != id_) {
    throw SessionError("server " + std::to_string(id_) +
                       " received a frame not addressed to it");
  }
  WireMessage reply;
  reply.kind = WireKind::kAnswer;
  reply.session = query.session;
  reply.server = id_;
  reply.symbols = answer(graph_, id_, query.combs, shard_, field_);
  return encode_wire(reply);
}

ProvisionedSystem provision(const StorageGraph& graph, const FieldSpec& field,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ProvisionedSystem sys;
  sys.full_store = MessageStore::random(graph.n_messages(),
                                        kSymbolsPerMessage, field, rng);
  for (int s = 1; s <= graph.n_servers(); ++s) {
    sys.servers.emplace_back(graph, s,
                             sys.full_store.restricted_to(graph.stores(s)),
                             field);
  }
  return sys;
}

void SimNetwork::send(int from, int to, Bytes frame) {
  log_.push_back({from, to, frame});
  if (partitioned_.count(to) || partitioned_.count(from)) return;
  links_[{from, to}].push_back(std::move(frame));
}

void SimNetwork::run_round(std::span<const ServerNode> servers) {
  for (const auto& node : servers) {
    auto it = links_.find({kUser, node.id()});
    if (it == links_.end()) continue;
    while (!it->second.empty()) {
      Bytes frame = std::move(it->second.front());
      it->second.pop_front();
      send(node.id(), kUser, node.handle(frame));
    }
  }
}

bool SimNetwork::receive(int server, Bytes& frame) {
  auto it = links_.find({server, kUser});
  if (it == links_.end() || it->second.empty()) return false;
  frame = std::move(it->second.front());
  it->second.pop_front();
  return true;
}

UserNode::UserNode(PrivacySetting setting, StorageGraph graph,
                   FieldSpec field, std::uint64_t seed,
                   bool identity_permutations)
    : setting_(setting),
      graph_(std::move(graph)),
      field_(field),
      rng_(seed),
      identity_(identity_permutations) {
  validate(setting_, graph_);
}

SessionTranscript UserNode::run_session(SimNetwork& net,
                                        std::span<const ServerNode> servers,
                                        int theta) {
  if (theta < 1 || theta > graph_.n_messages()) {
    throw SessionError("theta must be in [1, " +
                       std::to_string(graph_.n_messages()) + "], got " +
                       std::to_string(theta));
  }
  if (static_cast<int>(servers.size()) != graph_.n_servers()) {
    throw SessionError("expected " + std::to_string(graph_.n_servers()) +
                       " server nodes");
  }
  const auto profile =
      identity_ ? PermutationProfile::identity(graph_.n_messages(),
                                               kSymbolsPerMessage)
                : PermutationProfile::random(graph_.n_messages(),
                                             kSymbolsPerMessage, rng_);

  SessionTranscript out;
  out.session = next_session_++;
  const std::size_t log_start = net.log().size();
  Transcript& t = out.transcript;
  t.plan = plan_for(setting_, graph_, theta, profile);
  t.answers.assign(graph_.n_servers(), {});

  for (int s : t.plan.contacted_servers()) {
    WireMessage q;
    q.kind = WireKind::kQuery;
    q.session = out.session;
    q.server = s;
    q.combs = t.plan.at(s);
    net.send(SimNetwork::kUser, s, encode_wire(q));
    ++out.query_messages;
  }
  net.run_round(servers);

  for (int s : t.plan.contacted_servers()) {
    WireMessage a;
    // Answers left over from an aborted earlier session are dropped.
    do {
      Bytes frame;
      if (!net.receive(s, frame)) {
        throw SessionError("no answer from server " + std::to_string(s));
      }
      try {
        a = decode_wire(frame);
      } catch (const WireError& e) {
        throw SessionError("server " + std::to_string(s) +
                           " sent a bad frame: " + e.what());
      }
    } while (a.kind == WireKind::kAnswer && a.session < out.session);
    if (a.kind != WireKind::kAnswer || a.session != out.session ||
        a.server != s || a.symbols.size() != t.plan.at(s).size()) {
      throw SessionError("server " + std::to_string(s) +
                         " answered out of protocol");
    }
    t.answers[s - 1] = std::move(a.symbols);
  }
  t.decoded = decode(t.plan, t.answers, field_);
  out.wire_log.assign(net.log().begin() + static_cast<long>(log_start),
                      net.log().end());
  return out;
}

std::string transcript_to_json(const StorageGraph& graph,
                               const SessionTranscript& session) {
  using Json = nlohmann::ordered_json;
  const Transcript& t = session.transcript;
  Json j;
  j["graph"] = graph.name();
  j["session"] = session.session;
  j["theta"] = t.plan.theta;
  j["arc"] = {{"start", t.plan.arc.start}, {"length", t.plan.arc.length}};
  j["dummy_servers"] = t.plan.dummy_servers;
  Json servers = Json::array();
  for (int s = 1; s <= graph.n_servers(); ++s) {
    Json q = Json::array();
    for (const auto& c : t.plan.at(s)) q.push_back(c.to_string());
    servers.push_back(
        {{"server", s}, {"query", q}, {"answer", t.answers[s - 1]}});
  }
  j["servers"] = servers;
  j["download"] = t.plan.download_count();
  j["query_messages"] = session.query_messages;
  j["decoded"] = t.decoded;
  return j.dump(2) + "\n";
}

}  // namespace pirlab
