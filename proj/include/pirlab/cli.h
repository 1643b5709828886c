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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pirlab/graph.h"
#include "pirlab/privacy.h"

namespace pirlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitConfigError = 2;

enum class OutputFormat { kTable, kJson, kCsv };

struct RunConfig {
  std::optional<GraphKind> graph;
  std::optional<int> n;
  std::string setting;
  std::optional<int> h;
  std::optional<int> i;
  std::optional<int> theta;
  std::uint32_t q = 2;
  std::optional<std::uint64_t> seed;
  OutputFormat format = OutputFormat::kTable;
  bool identity_permutations = false;
};

// Fills unset fields of `config` from a JSON document such as
//   {"graph": "cycle", "n": 5, "setting": "first-neighbor", "theta": 1}
// Throws ParameterError on unknown keys or wrong types.
void merge_config_json(RunConfig& config, const std::string& text);

// Resolves a setting name against an optional graph kind. Accepts the rule
// names ("two-sided-cycle") and the short forms "one-sided" / "two-sided"
// when the graph kind disambiguates them. Throws ParameterError.
PrivacyRule resolve_rule(const std::string& name,
                         std::optional<GraphKind> graph);

struct ResolvedConfig {
  StorageGraph graph;
  PrivacySetting setting;
};

// Validates graph, setting and parameter ranges. Throws ParameterError.
ResolvedConfig resolve(const RunConfig& config);

// Entry point shared by the binary and the tests. Returns the exit status.
int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace pirlab::cli
