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

#include "pirlab/permutation.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "pirlab/errors.h"

namespace pirlab {

namespace {

std::vector<std::vector<int>> all_permutations(int length) {
  std::vector<int> p(length);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

PermutationProfile::PermutationProfile(std::vector<std::vector<int>> perms,
                                       int length)
    : perms_(std::move(perms)), length_(length) {
  if (length < 1) throw RangeError("message length must be >= 1");
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    auto sorted = perms_[k];
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> expect(length);
    std::iota(expect.begin(), expect.end(), 1);
    if (sorted != expect) {
      throw RangeError("row for message " + std::to_string(k + 1) +
                       " is not a permutation of [1, " +
                       std::to_string(length) + "]");
    }
  }
}

PermutationProfile PermutationProfile::identity(int n_messages, int length) {
  std::vector<int> id(length);
  std::iota(id.begin(), id.end(), 1);
  return PermutationProfile(std::vector<std::vector<int>>(n_messages, id),
                            length);
}

PermutationProfile PermutationProfile::random(int n_messages, int length,
                                              std::mt19937_64& rng) {
  std::vector<std::vector<int>> perms(n_messages, std::vector<int>(length));
  for (auto& p : perms) {
    std::iota(p.begin(), p.end(), 1);
    // Fisher-Yates with an explicit draw so the sequence does not depend on
    // the standard library's shuffle.
    for (int i = length - 1; i > 0; --i) {
      const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
      std::swap(p[i], p[j]);
    }
  }
  return PermutationProfile(std::move(perms), length);
}

const std::vector<int>& PermutationProfile::row(int msg) const {
  if (msg < 1 || msg > n_messages()) {
    throw RangeError("message " + std::to_string(msg) + " outside [1, " +
                     std::to_string(n_messages()) + "]");
  }
  return perms_[msg - 1];
}

int PermutationProfile::apply(int msg, int logical) const {
  const auto& p = row(msg);
  if (logical < 1 || logical > length_) {
    throw RangeError("symbol " + std::to_string(logical) + " outside [1, " +
                     std::to_string(length_) + "]");
  }
  return p[logical - 1];
}

int PermutationProfile::invert(int msg, int raw) const {
  const auto& p = row(msg);
  const auto it = std::find(p.begin(), p.end(), raw);
  if (it == p.end()) {
    throw RangeError("symbol " + std::to_string(raw) + " outside [1, " +
                     std::to_string(length_) + "]");
  }
  return static_cast<int>(it - p.begin()) + 1;
}

PermutationProfile PermutationProfile::inverse() const {
  auto perms = perms_;
  for (std::size_t k = 0; k < perms_.size(); ++k) {
    for (int j = 0; j < length_; ++j) perms[k][perms_[k][j] - 1] = j + 1;
  }
  return PermutationProfile(std::move(perms), length_);
}

PermutationProfile PermutationProfile::with_swapped(int msg, int a,
                                                    int b) const {
  auto copy = *this;
  apply(msg, a);
  apply(msg, b);
  std::swap(copy.perms_[msg - 1][a - 1], copy.perms_[msg - 1][b - 1]);
  return copy;
}

std::uint64_t profile_count(int n_messages, int length) {
  std::uint64_t fact = 1;
  for (int i = 2; i <= length; ++i) fact *= static_cast<std::uint64_t>(i);
  std::uint64_t total = 1;
  for (int k = 0; k < n_messages; ++k) total *= fact;
  return total;
}

PermutationProfile profile_at(int n_messages, int length,
                              std::uint64_t index) {
  const auto perms = all_permutations(length);
  std::vector<std::vector<int>> rows(n_messages);
  for (auto& r : rows) {
    r = perms[index % perms.size()];
    index /= perms.size();
  }
  return PermutationProfile(std::move(rows), length);
}

void for_each_profile(
    int n_messages, int length,
    const std::function<void(const PermutationProfile&)>& fn) {
  const auto perms = all_permutations(length);
  std::vector<std::size_t> digits(n_messages, 0);
  while (true) {
    std::vector<std::vector<int>> rows(n_messages);
    for (int k = 0; k < n_messages; ++k) rows[k] = perms[digits[k]];
    fn(PermutationProfile(std::move(rows), length));
    int k = 0;
    while (k < n_messages && ++digits[k] == perms.size()) digits[k++] = 0;
    if (k == n_messages) break;
  }
}

}  // namespace pirlab
