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
#include <functional>
#include <random>
#include <vector>

namespace pirlab {

// The user's private symbol permutations: logical symbol j of message k is
// stored at raw index pi_k(j). Drawn uniformly per message and never sent.
class PermutationProfile {
 public:
  static PermutationProfile identity(int n_messages, int length);
  static PermutationProfile random(int n_messages, int length,
                                   std::mt19937_64& rng);

  // Throws RangeError if a row is not a permutation of [1, length].
  PermutationProfile(std::vector<std::vector<int>> perms, int length);

  int n_messages() const { return static_cast<int>(perms_.size()); }
  int length() const { return length_; }

  // pi_msg(logical). Throws RangeError on out-of-range arguments.
  int apply(int msg, int logical) const;
  int invert(int msg, int raw) const;

  PermutationProfile inverse() const;

  // Returns a copy where the images of logical symbols a and b of `msg` are
  // exchanged.
  PermutationProfile with_swapped(int msg, int a, int b) const;

  const std::vector<int>& row(int msg) const;

  bool operator==(const PermutationProfile&) const = default;

 private:
  std::vector<std::vector<int>> perms_;
  int length_ = 0;
};

// (length!)^n_messages.
std::uint64_t profile_count(int n_messages, int length);

// Calls fn on every profile, in a fixed order (mixed radix over the
// lexicographic permutations of [1, length], message 1 least significant).
void for_each_profile(int n_messages, int length,
                      const std::function<void(const PermutationProfile&)>& fn);

// The profile at position `index` of for_each_profile's order.
PermutationProfile profile_at(int n_messages, int length, std::uint64_t index);

}  // namespace pirlab
