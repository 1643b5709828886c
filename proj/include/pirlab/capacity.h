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

#include <optional>
#include <string>
#include <vector>

#include "pirlab/privacy.h"
#include "pirlab/rational.h"

namespace pirlab {

enum class BoundKind { kExact, kLowerBound, kUpperBound };

std::string to_string(BoundKind kind);

// A closed-form capacity statement. Two-sided results are a LowerBound with
// an `upper` companion.
struct CapacityValue {
  Rational value;
  BoundKind kind = BoundKind::kExact;
  std::optional<Rational> upper;

  // The rate the matching scheme achieves: the exact value or the lower
  // bound.
  Rational achievable() const { return value; }
  std::string describe() const;

  bool operator==(const CapacityValue&) const = default;
};

// Closed form for the setting on N servers. Accepts the ranges the results
// are stated for, which for i-th neighbor (i <= N-2) and cyclic one-sided
// (h <= N-2) are wider than what the schemes run. Throws RangeError.
CapacityValue capacity_bound(const PrivacySetting& setting, int n);

enum class Baseline { kPirPath, kPirCycle, kLpirPath, kLpirCycle };

std::string to_string(Baseline baseline);

// Replicated-graph PIR and local-PIR capacities used for comparison.
CapacityValue baseline(Baseline which, int n);

struct SweepRow {
  PrivacySetting setting;
  int n = 0;
  CapacityValue bound;
  // Empty when the scheme rejects the cell.
  std::optional<Rational> measured;
  std::string skip_reason;
  std::optional<CapacityValue> pir;
  std::optional<CapacityValue> lpir;

  // measured equals bound.achievable(); false for skipped cells.
  bool match() const;
};

struct SweepSpec {
  std::vector<PrivacyRule> rules;
  int n_min = 0;
  int n_max = 0;
  // Restricts the parameter; all accepted values when absent.
  std::optional<int> param_min;
  std::optional<int> param_max;
  bool measure = true;
  bool compare_baselines = false;
};

// One row per (rule, N, parameter) cell inside the stated range. Cells outside
// the closed form's range are left out; cells the scheme rejects keep their
// bound and are marked skipped.
std::vector<SweepRow> sweep(const SweepSpec& spec);

// CSV with columns setting,N,param,bound_kind,bound_num,bound_den,upper_num,
// upper_den,measured_num,measured_den,match (plus baseline columns when
// present). Skipped cells print "skipped" in measured_num.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

}  // namespace pirlab
