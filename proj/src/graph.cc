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

#include "pirlab/graph.h"

#include "pirlab/errors.h"

namespace pirlab {

std::string to_string(GraphKind kind) {
  return kind == GraphKind::kPath ? "path" : "cycle";
}

StorageGraph build_graph(GraphKind kind, int n) {
  const int min_n =
      kind == GraphKind::kPath ? kMinPathServers : kMinCycleServers;
  if (n < min_n) {
    throw RangeError(to_string(kind) + " graph needs N >= " +
                     std::to_string(min_n) + ", got N = " + std::to_string(n));
  }
  StorageGraph g;
  g.kind_ = kind;
  g.n_servers_ = n;
  g.n_messages_ = kind == GraphKind::kPath ? n - 1 : n;
  g.stores_.resize(n);
  for (int s = 1; s <= n; ++s) {
    auto& held = g.stores_[s - 1];
    if (kind == GraphKind::kPath) {
      if (s >= 2) held.insert(s - 1);
      if (s <= n - 1) held.insert(s);
    } else {
      held.insert(g.wrap(s - 1));
      held.insert(s);
    }
  }
  return g;
}

const std::set<int>& StorageGraph::stores(int server) const {
  if (server < 1 || server > n_servers_) {
    throw RangeError("server " + std::to_string(server) + " outside [1, " +
                     std::to_string(n_servers_) + "]");
  }
  return stores_[server - 1];
}

bool StorageGraph::stores(int server, int message) const {
  return stores(server).count(message) > 0;
}

int StorageGraph::wrap(int index) const {
  if (kind_ == GraphKind::kPath) return index;
  int r = (index - 1) % n_servers_;
  if (r < 0) r += n_servers_;
  return r + 1;
}

std::pair<int, int> StorageGraph::holders(int message) const {
  if (message < 1 || message > n_messages_) {
    throw RangeError("message " + std::to_string(message) + " outside [1, " +
                     std::to_string(n_messages_) + "]");
  }
  if (kind_ == GraphKind::kPath) return {message, message + 1};
  // W_N sits on servers N and 1.
  if (message == n_servers_) return {1, n_servers_};
  return {message, message + 1};
}

std::string StorageGraph::name() const {
  return (kind_ == GraphKind::kPath ? "P_" : "C_") + std::to_string(n_servers_);
}

}  // namespace pirlab
