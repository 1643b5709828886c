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
#include <deque>
#include <map>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "pirlab/field.h"
#include "pirlab/graph.h"
#include "pirlab/privacy.h"
#include "pirlab/retrieval.h"
#include "pirlab/store.h"
#include "pirlab/wire.h"

namespace pirlab {

// A server holding only its shard W_n. Stateless: every answer is a function
// of the shard and the received query.
class ServerNode {
 public:
  ServerNode(StorageGraph graph, int id, MessageStore shard, FieldSpec field);

  int id() const { return id_; }
  const MessageStore& shard() const { return shard_; }

  // Decodes a query frame and returns the encoded answer frame.
  Bytes handle(std::span<const std::uint8_t> frame) const;

 private:
  StorageGraph graph_;
  int id_;
  MessageStore shard_;
  FieldSpec field_;
};

struct ProvisionedSystem {
  std::vector<ServerNode> servers;  // servers[n - 1]
  MessageStore full_store;          // for oracle comparison only
};

// Draws K * L uniform symbols from `seed` and shards them by I_n.
ProvisionedSystem provision(const StorageGraph& graph, const FieldSpec& field,
                            std::uint64_t seed);

// In-process transport between the user (endpoint 0) and servers 1..N:
// per-link FIFO queues, delivered by a deterministic round-robin scheduler.
class SimNetwork {
 public:
  static constexpr int kUser = 0;

  struct Record {
    int from = 0;
    int to = 0;
    Bytes frame;
  };

  void send(int from, int to, Bytes frame);

  // Delivers every pending user->server frame in ascending server order and
  // queues each reply on the server->user link.
  void run_round(std::span<const ServerNode> servers);

  // Next frame on the server->user link, if any.
  bool receive(int server, Bytes& frame);

  // Frames sent to a partitioned server are dropped.
  void partition(int server) { partitioned_.insert(server); }
  void heal(int server) { partitioned_.erase(server); }

  const std::vector<Record>& log() const { return log_; }

 private:
  std::map<std::pair<int, int>, std::deque<Bytes>> links_;
  std::set<int> partitioned_;
  std::vector<Record> log_;
};

struct SessionTranscript {
  Transcript transcript;
  std::uint64_t session = 0;
  int query_messages = 0;
  std::vector<SimNetwork::Record> wire_log;
};

// The retrieving user. Draws each session's permutation profile from its
// seeded generator; never sees server contents.
class UserNode {
 public:
  UserNode(PrivacySetting setting, StorageGraph graph, FieldSpec field,
           std::uint64_t seed, bool identity_permutations = false);

  // Sends one query frame to each contacted server (uncontacted servers get
  // nothing), collects the answers and decodes W_theta. Throws SessionError
  // for a bad theta or a missing or malformed answer.
  SessionTranscript run_session(SimNetwork& net,
                                std::span<const ServerNode> servers,
                                int theta);

 private:
  PrivacySetting setting_;
  StorageGraph graph_;
  FieldSpec field_;
  std::mt19937_64 rng_;
  bool identity_;
  std::uint64_t next_session_ = 1;
};

std::string transcript_to_json(const StorageGraph& graph,
                               const SessionTranscript& session);

}  // namespace pirlab
