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
#include <set>
#include <string>
#include <vector>

namespace pirlab {

struct ServerId {
  int value = 0;
  auto operator<=>(const ServerId&) const = default;
};

struct MessageId {
  int value = 0;
  auto operator<=>(const MessageId&) const = default;
};

enum class GraphKind { kPath, kCycle };

std::string to_string(GraphKind kind);

// Edge-replicated storage: every message lives on exactly two adjacent
// servers. On a path server n holds {n-1, n} clipped to [1, N-1]; on a cycle
// server n holds {n-1, n} with indices taken modulo N (residue 0 is N).
class StorageGraph {
 public:
  GraphKind kind() const { return kind_; }
  int n_servers() const { return n_servers_; }
  int n_messages() const { return n_messages_; }
  bool is_cycle() const { return kind_ == GraphKind::kCycle; }

  const std::set<int>& stores(int server) const;
  bool stores(int server, int message) const;

  // Maps any integer onto [1, N] for cycles; identity for paths.
  int wrap(int index) const;

  // The two servers holding `message`, lower server id first.
  std::pair<int, int> holders(int message) const;

  std::string name() const;

 private:
  friend StorageGraph build_graph(GraphKind kind, int n);

  GraphKind kind_ = GraphKind::kPath;
  int n_servers_ = 0;
  int n_messages_ = 0;
  std::vector<std::set<int>> stores_;
};

inline constexpr int kMinPathServers = 3;
inline constexpr int kMinCycleServers = 4;

// Throws RangeError below the minimum size for the kind.
StorageGraph build_graph(GraphKind kind, int n);

}  // namespace pirlab
