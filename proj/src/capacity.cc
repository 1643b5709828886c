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

#include "pirlab/capacity.h"

#include <sstream>

#include "json.hpp"

#include "pirlab/audit.h"
#include "pirlab/errors.h"

namespace pirlab {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw RangeError(what);
}

std::string range_msg(const PrivacySetting& s, int n, int lo, int hi) {
  return describe(s) + " on N = " + std::to_string(n) + ": " +
         std::string(1, param_letter(s.rule)) + " must be in [" +
         std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

// Stated ranges of the closed forms.
std::pair<int, int> stated_range(PrivacyRule rule, int n) {
  switch (rule) {
    case PrivacyRule::kPathOneSidedH:
      return {1, n - 2};
    case PrivacyRule::kPathTwoSidedH:
      return {1, n - 3};
    case PrivacyRule::kPathTwoSidedHModEdge:
      return {0, n - 3};
    case PrivacyRule::kCyclicIthNeighbor:
      return {2, n - 2};
    case PrivacyRule::kCyclicOneSidedH:
      return {0, n - 2};
    case PrivacyRule::kCyclicTwoSidedH:
      return {0, (n - 3) / 2};
    default:
      return {0, 0};
  }
}

std::int64_t num(const Rational& r) { return r.numerator(); }
std::int64_t den(const Rational& r) { return r.denominator(); }

}  // namespace

std::string to_string(BoundKind kind) {
  switch (kind) {
    case BoundKind::kExact:
      return "exact";
    case BoundKind::kLowerBound:
      return "lower";
    case BoundKind::kUpperBound:
      return "upper";
  }
  return "unknown";
}

std::string CapacityValue::describe() const {
  const std::string v = pirlab::to_string(value);
  if (upper) return v + " ≤ C ≤ " + pirlab::to_string(*upper);
  switch (kind) {
    case BoundKind::kExact:
      return "C = " + v;
    case BoundKind::kLowerBound:
      return "C ≥ " + v;
    case BoundKind::kUpperBound:
      return "C ≤ " + v;
  }
  return v;
}

CapacityValue capacity_bound(const PrivacySetting& setting, int n) {
  const bool path = required_kind(setting.rule) == GraphKind::kPath;
  require(n >= (path ? kMinPathServers : kMinCycleServers),
          describe(setting) + " needs N >= " +
              std::to_string(path ? kMinPathServers : kMinCycleServers));
  const std::int64_t nn = n;
  const std::int64_t p = setting.param;
  if (has_param(setting.rule)) {
    const auto [lo, hi] = stated_range(setting.rule, n);
    require(p >= lo && p <= hi, range_msg(setting, n, lo, hi));
  }
  switch (setting.rule) {
    case PrivacyRule::kPathModifiedEdge:
      return {Rational(nn - 1, 2 * nn - 3), BoundKind::kExact, std::nullopt};
    case PrivacyRule::kPathOneSidedH: {
      const std::int64_t d =
          (p + 2) * (p + 1) / 2 + 3 * p + 5 + (p + 4) * (nn - p - 3);
      return {Rational(2 * (nn - 1), d), BoundKind::kLowerBound,
              std::nullopt};
    }
    case PrivacyRule::kPathTwoSidedH:
    case PrivacyRule::kPathTwoSidedHModEdge:
      return {Rational(2 * (nn - 1), (p + 2) * (2 * nn - p - 3)),
              BoundKind::kLowerBound, std::nullopt};
    case PrivacyRule::kCyclicFirstNeighbor:
      require(n >= 5, "first-neighbor needs N >= 5");
      return {Rational(2, 5), BoundKind::kLowerBound, Rational(1, 2)};
    case PrivacyRule::kCyclicIthNeighbor:
      return {Rational(1, 3), BoundKind::kLowerBound, Rational(2, 5)};
    case PrivacyRule::kCyclicOneSidedH:
      return {Rational(2, p + 4), BoundKind::kLowerBound, std::nullopt};
    case PrivacyRule::kCyclicTwoSidedH:
      return {Rational(1, p + 2), BoundKind::kExact, std::nullopt};
  }
  throw RangeError("unknown rule");
}

std::string to_string(Baseline baseline) {
  switch (baseline) {
    case Baseline::kPirPath:
      return "PIR_Path";
    case Baseline::kPirCycle:
      return "PIR_Cycle";
    case Baseline::kLpirPath:
      return "LPIR_Path";
    case Baseline::kLpirCycle:
      return "LPIR_Cycle";
  }
  return "unknown";
}

CapacityValue baseline(Baseline which, int n) {
  const bool path = which == Baseline::kPirPath || which == Baseline::kLpirPath;
  const int min_n = path ? kMinPathServers : kMinCycleServers;
  require(n >= min_n, to_string(which) + " needs N >= " +
                          std::to_string(min_n) + ", got " +
                          std::to_string(n));
  const std::int64_t nn = n;
  switch (which) {
    case Baseline::kPirPath:
      return {Rational(2, nn), BoundKind::kExact, std::nullopt};
    case Baseline::kPirCycle:
      return {Rational(2, nn + 1), BoundKind::kExact, std::nullopt};
    case Baseline::kLpirCycle:
      return {Rational(1, 2), BoundKind::kExact, std::nullopt};
    case Baseline::kLpirPath:
      // Settled only for odd N; the even-N value is a scheme's rate.
      if (n % 2 == 1) {
        return {Rational(nn - 1, 2 * nn - 4), BoundKind::kExact,
                std::nullopt};
      }
      return {Rational(nn - 1, 2 * nn - 3), BoundKind::kLowerBound,
              std::nullopt};
  }
  throw RangeError("unknown baseline");
}

bool SweepRow::match() const {
  return measured.has_value() && *measured == bound.achievable();
}

std::vector<SweepRow> sweep(const SweepSpec& spec) {
  std::vector<SweepRow> rows;
  for (PrivacyRule rule : spec.rules) {
    const GraphKind kind = required_kind(rule);
    for (int n = spec.n_min; n <= spec.n_max; ++n) {
      if (n < (kind == GraphKind::kPath ? kMinPathServers
                                        : kMinCycleServers)) {
        continue;
      }
      std::vector<int> params{0};
      if (has_param(rule)) {
        params.clear();
        const auto [lo, hi] = stated_range(rule, n);
        for (int p = lo; p <= hi; ++p) {
          if (spec.param_min && p < *spec.param_min) continue;
          if (spec.param_max && p > *spec.param_max) continue;
          params.push_back(p);
        }
      }
      for (int p : params) {
        SweepRow row;
        row.setting = PrivacySetting{rule, p};
        row.n = n;
        try {
          row.bound = capacity_bound(row.setting, n);
        } catch (const RangeError&) {
          continue;
        }
        if (spec.measure) {
          try {
            const StorageGraph g = build_graph(kind, n);
            validate(row.setting, g);
            row.measured = measure_rate(row.setting, g).rate;
          } catch (const ParameterError& e) {
            row.skip_reason = e.what();
          }
        }
        if (spec.compare_baselines) {
          const bool path = kind == GraphKind::kPath;
          row.pir = baseline(path ? Baseline::kPirPath : Baseline::kPirCycle,
                             n);
          row.lpir = baseline(
              path ? Baseline::kLpirPath : Baseline::kLpirCycle, n);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  const bool baselines = !rows.empty() && rows.front().pir.has_value();
  std::ostringstream out;
  out << "setting,N,param,bound_kind,bound_num,bound_den,upper_num,upper_den,"
         "measured_num,measured_den,match";
  if (baselines) {
    out << ",pir_num,pir_den,lpir_kind,lpir_num,lpir_den";
  }
  out << '\n';
  for (const auto& r : rows) {
    out << rule_name(r.setting.rule) << ',' << r.n << ',';
    if (has_param(r.setting.rule)) out << r.setting.param;
    out << ',' << to_string(r.bound.kind) << ',' << num(r.bound.value) << ','
        << den(r.bound.value) << ',';
    if (r.bound.upper) out << num(*r.bound.upper) << ',' << den(*r.bound.upper);
    else out << ',';
    out << ',';
    if (r.measured) {
      out << num(*r.measured) << ',' << den(*r.measured);
    } else {
      out << "skipped,";
    }
    out << ',' << (r.match() ? "true" : "false");
    if (baselines && r.pir && r.lpir) {
      out << ',' << num(r.pir->value) << ',' << den(r.pir->value) << ','
          << to_string(r.lpir->kind) << ',' << num(r.lpir->value) << ','
          << den(r.lpir->value);
    }
    out << '\n';
  }
  return out.str();
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  auto frac = [](const Rational& r) {
    return nlohmann::ordered_json{{"num", r.numerator()},
                                  {"den", r.denominator()}};
  };
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["setting"] = rule_name(r.setting.rule);
    j["N"] = r.n;
    j["param"] = has_param(r.setting.rule)
                     ? nlohmann::ordered_json(r.setting.param)
                     : nlohmann::ordered_json(nullptr);
    j["bound_kind"] = to_string(r.bound.kind);
    j["bound"] = frac(r.bound.value);
    j["upper"] = r.bound.upper ? frac(*r.bound.upper)
                               : nlohmann::ordered_json(nullptr);
    j["measured"] =
        r.measured ? frac(*r.measured) : nlohmann::ordered_json(nullptr);
    if (!r.skip_reason.empty()) j["skipped"] = r.skip_reason;
    j["match"] = r.match();
    if (r.pir) j["pir"] = frac(r.pir->value);
    if (r.lpir) {
      j["lpir"] = frac(r.lpir->value);
      j["lpir_kind"] = to_string(r.lpir->kind);
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace pirlab
