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

#include <set>

#include "json.hpp"
#include "pirlab/cli.h"
#include "pirlab/errors.h"

namespace pirlab::cli {

namespace {

GraphKind parse_graph(const std::string& name) {
  if (name == "path") return GraphKind::kPath;
  if (name == "cycle" || name == "cyclic") return GraphKind::kCycle;
  throw ParameterError("graph must be \"path\" or \"cycle\", got \"" + name +
                       "\"");
}

OutputFormat parse_format(const std::string& name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ParameterError("format must be table, json or csv, got \"" + name +
                       "\"");
}

}  // namespace

void merge_config_json(RunConfig& config, const std::string& text) {
  using Json = nlohmann::json;
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("config is not valid JSON: ") +
                         e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  static const std::set<std::string> kKnown = {
      "graph", "n",    "setting", "h",      "i",
      "theta", "q",    "seed",    "format", "identity_permutations"};
  try {
    for (const auto& item : j.items()) {
      if (!kKnown.count(item.key())) {
        throw ParameterError("unknown config key \"" + item.key() + "\"");
      }
    }
    if (j.contains("graph") && !config.graph) {
      config.graph = parse_graph(j["graph"].get<std::string>());
    }
    if (j.contains("n") && !config.n) config.n = j["n"].get<int>();
    if (j.contains("setting") && config.setting.empty()) {
      config.setting = j["setting"].get<std::string>();
    }
    if (j.contains("h") && !config.h) config.h = j["h"].get<int>();
    if (j.contains("i") && !config.i) config.i = j["i"].get<int>();
    if (j.contains("theta") && !config.theta) {
      config.theta = j["theta"].get<int>();
    }
    if (j.contains("q")) config.q = j["q"].get<std::uint32_t>();
    if (j.contains("seed") && !config.seed) {
      config.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("format")) {
      config.format = parse_format(j["format"].get<std::string>());
    }
    if (j.contains("identity_permutations")) {
      config.identity_permutations =
          config.identity_permutations ||
          j["identity_permutations"].get<bool>();
    }
  } catch (const Json::exception& e) {
    throw ParameterError(std::string("config has a wrong value type: ") +
                         e.what());
  }
}

PrivacyRule resolve_rule(const std::string& name,
                         std::optional<GraphKind> graph) {
  static const std::pair<const char*, PrivacyRule> kNames[] = {
      {"modified-edge", PrivacyRule::kPathModifiedEdge},
      {"one-sided-path", PrivacyRule::kPathOneSidedH},
      {"two-sided-path", PrivacyRule::kPathTwoSidedH},
      {"two-sided-path-mod-edge", PrivacyRule::kPathTwoSidedHModEdge},
      {"first-neighbor", PrivacyRule::kCyclicFirstNeighbor},
      {"ith-neighbor", PrivacyRule::kCyclicIthNeighbor},
      {"one-sided-cycle", PrivacyRule::kCyclicOneSidedH},
      {"two-sided-cycle", PrivacyRule::kCyclicTwoSidedH},
  };
  std::optional<PrivacyRule> rule;
  for (const auto& [n, r] : kNames) {
    if (name == n) rule = r;
  }
  if (!rule && (name == "one-sided" || name == "two-sided")) {
    if (!graph) {
      throw ParameterError("setting \"" + name +
                           "\" needs --graph to pick path or cycle");
    }
    return resolve_rule(name + (*graph == GraphKind::kPath ? "-path" : "-cycle"),
                        graph);
  }
  if (!rule) throw ParameterError("unknown setting \"" + name + "\"");
  if (graph && required_kind(*rule) != *graph) {
    throw KindMismatchError("setting \"" + name + "\" runs on a " +
                            to_string(required_kind(*rule)) +
                            " graph, not a " + to_string(*graph));
  }
  return *rule;
}

ResolvedConfig resolve(const RunConfig& config) {
  if (config.setting.empty()) throw ParameterError("--setting is required");
  PrivacyRule rule = resolve_rule(config.setting, config.graph);
  const GraphKind kind = config.graph.value_or(required_kind(rule));
  if (!config.n) throw ParameterError("--n is required");

  PrivacySetting setting{rule, 0};
  if (has_param(rule)) {
    const char letter = param_letter(rule);
    const auto& value = letter == 'h' ? config.h : config.i;
    if (!value) {
      throw ParameterError(rule_name(rule) + " needs --" +
                           std::string(1, letter));
    }
    setting.param = *value;
    // h = 0 exists only for the modified-edge variant of the path rule.
    if (rule == PrivacyRule::kPathTwoSidedH && setting.param == 0) {
      setting.rule = PrivacyRule::kPathTwoSidedHModEdge;
    }
  } else if (config.h || config.i) {
    throw ParameterError(rule_name(rule) + " takes no h or i parameter");
  }

  ResolvedConfig out{build_graph(kind, *config.n), setting};
  validate(out.setting, out.graph);
  return out;
}

}  // namespace pirlab::cli
