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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pirlab/audit.h"
#include "pirlab/capacity.h"
#include "pirlab/cli.h"
#include "pirlab/errors.h"
#include "pirlab/netsim.h"
#include "pirlab/render.h"

namespace pirlab::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raw flag values; converted into a RunConfig after parsing so that the
// config file only fills what the command line left unset.
struct Flags {
  std::string graph;
  int n = 0;
  std::string n_range;
  std::string setting;
  std::string h;
  std::string i;
  int theta = 0;
  std::uint32_t q = 2;
  std::uint64_t seed = 0;
  std::string format;
  std::string config_path;
  std::string out_path;
  bool identity = false;
  bool compare_baselines = false;
};

struct Bound {
  CLI::App* app = nullptr;
  Flags flags;
};

void add_common(CLI::App* app, Flags& f) {
  app->add_option("--graph", f.graph, "path or cycle");
  app->add_option("--setting", f.setting, "privacy setting name");
  app->add_option("--q", f.q, "prime field modulus");
  app->add_option("--format", f.format, "table, json or csv");
  app->add_option("--config", f.config_path, "JSON config document");
  app->add_option("--out", f.out_path, "write output to this file");
}

bool given(const CLI::App* app, const std::string& name) {
  const CLI::Option* opt = app->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

int parse_int(const std::string& text, const std::string& flag) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ParameterError(flag + " expects an integer, got \"" + text + "\"");
}

// "5" or "4..10".
std::pair<int, int> parse_range(const std::string& text,
                                const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text, flag);
    return {v, v};
  }
  const int lo = parse_int(text.substr(0, dots), flag);
  const int hi = parse_int(text.substr(dots + 2), flag);
  if (lo > hi) throw ParameterError(flag + " range is empty: " + text);
  return {lo, hi};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot read config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig to_config(const CLI::App* app, const Flags& f) {
  RunConfig c;
  if (given(app, "--graph")) {
    if (f.graph == "path") {
      c.graph = GraphKind::kPath;
    } else if (f.graph == "cycle" || f.graph == "cyclic") {
      c.graph = GraphKind::kCycle;
    } else {
      throw ParameterError("--graph must be path or cycle, got \"" + f.graph +
                           "\"");
    }
  }
  if (given(app, "--n") && f.n_range.empty()) c.n = f.n;
  if (!f.n_range.empty()) {
    const auto [lo, hi] = parse_range(f.n_range, "--n");
    if (lo == hi) c.n = lo;
  }
  c.setting = f.setting;
  if (given(app, "--h")) c.h = parse_range(f.h, "--h").first;
  if (given(app, "--i")) c.i = parse_range(f.i, "--i").first;
  if (given(app, "--theta")) c.theta = f.theta;
  c.q = f.q;
  if (given(app, "--seed")) c.seed = f.seed;
  if (given(app, "--format")) {
    if (f.format == "table") c.format = OutputFormat::kTable;
    else if (f.format == "json") c.format = OutputFormat::kJson;
    else if (f.format == "csv") c.format = OutputFormat::kCsv;
    else throw ParameterError("--format must be table, json or csv");
  }
  c.identity_permutations = f.identity;
  const bool q_given = given(app, "--q");
  if (!f.config_path.empty()) {
    merge_config_json(c, read_file(f.config_path));
    if (q_given) c.q = f.q;
  }
  if (!c.seed) {
    if (const char* env = std::getenv("PIRLAB_SEED")) {
      try {
        std::size_t used = 0;
        c.seed = std::stoull(env, &used);
        if (used != std::string(env).size()) throw std::invalid_argument(env);
      } catch (const std::exception&) {
        throw ParameterError("PIRLAB_SEED must be an unsigned integer");
      }
    }
  }
  return c;
}

// Output sink honoring --out.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : out_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ParameterError("cannot write " + path);
      out_ = &file_;
    }
  }
  std::ostream& get() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

std::string symbols_text(const std::vector<Element>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += std::to_string(v[k]);
  }
  return s + ")";
}

int cmd_run(const RunConfig& config, const std::string& out_path,
            std::ostream& stdout_) {
  const ResolvedConfig rc = resolve(config);
  if (!config.theta) throw ParameterError("run needs --theta");
  const int theta = *config.theta;
  if (theta < 1 || theta > rc.graph.n_messages()) {
    throw RangeError("theta must be in [1, " +
                     std::to_string(rc.graph.n_messages()) + "], got " +
                     std::to_string(theta));
  }
  const FieldSpec field(config.q);
  const std::uint64_t seed = config.seed.value_or(0);
  const ProvisionedSystem sys = provision(rc.graph, field, seed);
  UserNode user(rc.setting, rc.graph, field, seed,
                config.identity_permutations);
  SimNetwork net;
  const SessionTranscript st = user.run_session(net, sys.servers, theta);
  const Transcript& t = st.transcript;
  const bool correct = t.decoded == sys.full_store.message(theta);

  Sink sink(out_path, stdout_);
  std::ostream& out = sink.get();
  if (config.format == OutputFormat::kJson) {
    Json j = Json::parse(transcript_to_json(rc.graph, st));
    j["setting"] = describe(rc.setting);
    j["q"] = config.q;
    j["seed"] = seed;
    j["provisioned"] = sys.full_store.message(theta);
    j["correct"] = correct;
    out << j.dump(2) << "\n";
  } else {
    out << "graph " << rc.graph.name() << ", setting "
        << describe(rc.setting) << ", theta " << theta << ", GF("
        << config.q << "), seed " << seed << ", "
        << (config.identity_permutations ? "identity" : "random")
        << " permutations\n\n";
    out << render_table(rc.graph, {t.plan}) << "\n";
    for (int s = 1; s <= rc.graph.n_servers(); ++s) {
      const auto& q = t.plan.at(s);
      out << "DB " << s << ": ";
      if (q.empty()) {
        out << "null query\n";
        continue;
      }
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (k) out << "; ";
        out << q[k].to_string() << " = " << t.answers[s - 1][k];
      }
      out << "\n";
    }
    out << "\ndecoded W" << theta << " = " << symbols_text(t.decoded)
        << (correct ? " (matches the provisioned message)"
                    : " (MISMATCH with the provisioned message)")
        << "\n";
    out << "downloaded " << t.plan.download_count() << " symbols in "
        << st.query_messages << " query messages\n";
  }
  return correct ? kExitOk : kExitVerifyFailed;
}

int cmd_table(const RunConfig& config, const std::string& out_path,
              std::ostream& stdout_) {
  const ResolvedConfig rc = resolve(config);
  const auto id = PermutationProfile::identity(rc.graph.n_messages(),
                                               kSymbolsPerMessage);
  std::vector<QueryPlan> plans;
  for (int theta = 1; theta <= rc.graph.n_messages(); ++theta) {
    plans.push_back(plan_for(rc.setting, rc.graph, theta, id));
  }
  Sink sink(out_path, stdout_);
  sink.get() << render_table(rc.graph, plans);
  return kExitOk;
}

int cmd_verify(const RunConfig& config, const std::string& out_path,
               std::ostream& stdout_) {
  const ResolvedConfig rc = resolve(config);
  const FieldSpec field(config.q);
  const PrivacyReport privacy = audit_privacy(rc.setting, rc.graph);
  const DecodabilityReport dec =
      check_decodability(rc.setting, rc.graph, field);
  const RateReport rate = measure_rate(rc.setting, rc.graph);
  const CapacityValue cap =
      capacity_bound(rc.setting, rc.graph.n_servers());
  const bool rate_ok = rate.rate == cap.achievable();
  const bool pass = privacy.pass() && dec.pass() && rate_ok;

  Sink sink(out_path, stdout_);
  std::ostream& out = sink.get();
  if (config.format == OutputFormat::kJson) {
    Json j;
    j["graph"] = rc.graph.name();
    j["setting"] = describe(rc.setting);
    j["q"] = config.q;
    j["pass"] = pass;
    j["privacy"] = {{"pass", privacy.pass()},
                    {"comparisons", privacy.comparisons}};
    Json viol = Json::array();
    for (const auto& v : privacy.violations) {
      viol.push_back({{"server", v.server},
                      {"theta_a", v.theta_a},
                      {"theta_b", v.theta_b},
                      {"query", query_to_string(v.witness)},
                      {"prob_a", to_string(v.prob_a)},
                      {"prob_b", to_string(v.prob_b)},
                      {"gap", to_string(v.gap())}});
    }
    j["privacy"]["violations"] = viol;
    Json fails = Json::array();
    for (const auto& f : dec.failures) {
      Json miss = Json::array();
      for (const auto& t : f.unreachable) miss.push_back(LinComb(t).to_string());
      fails.push_back({{"theta", f.theta},
                       {"profile_index", f.profile_index},
                       {"unreachable", miss}});
    }
    j["decodability"] = {{"pass", dec.pass()},
                         {"plans_checked", dec.plans_checked},
                         {"failures", fails}};
    j["rate"] = {{"per_theta_download", rate.per_theta_download},
                 {"measured", to_string(rate.rate)},
                 {"bound", cap.describe()},
                 {"bound_kind", to_string(cap.kind)},
                 {"match", rate_ok}};
    out << j.dump(2) << "\n";
  } else {
    out << "graph " << rc.graph.name() << ", setting "
        << describe(rc.setting) << ", GF(" << config.q << ")\n";
    out << "privacy:      " << (privacy.pass() ? "pass" : "FAIL") << " ("
        << privacy.comparisons << " distribution comparisons)\n";
    for (const auto& v : privacy.violations) {
      out << "  server " << v.server << ", theta " << v.theta_a << " vs "
          << v.theta_b << ": query " << query_to_string(v.witness)
          << " has probability " << to_string(v.prob_a) << " vs "
          << to_string(v.prob_b) << "\n";
    }
    out << "decodability: " << (dec.pass() ? "pass" : "FAIL") << " ("
        << dec.plans_checked << " plans)\n";
    for (const auto& f : dec.failures) {
      out << "  theta " << f.theta << ", profile #" << f.profile_index
          << ": cannot recover";
      for (const auto& t : f.unreachable) out << " " << LinComb(t).to_string();
      out << "\n";
    }
    out << "rate:         " << (rate_ok ? "pass" : "FAIL") << " (measured "
        << to_string(rate.rate) << ", " << cap.describe() << ")\n";
    out << "D_theta:     ";
    for (int d : rate.per_theta_download) out << " " << d;
    out << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
  }
  return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_capacity(const CLI::App* app, const Flags& f, RunConfig config,
                 std::ostream& stdout_) {
  if (config.setting.empty()) throw ParameterError("--setting is required");
  PrivacyRule rule = resolve_rule(config.setting, config.graph);
  const GraphKind kind = required_kind(rule);

  SweepSpec spec;
  spec.compare_baselines = f.compare_baselines;
  if (!f.n_range.empty()) {
    std::tie(spec.n_min, spec.n_max) = parse_range(f.n_range, "--n");
  } else if (config.n) {
    spec.n_min = spec.n_max = *config.n;
  } else {
    spec.n_min = kind == GraphKind::kPath
                     ? 4
                     : (rule == PrivacyRule::kCyclicFirstNeighbor ? 5 : 4);
    spec.n_max = 10;
  }
  if (has_param(rule)) {
    const std::string& text = param_letter(rule) == 'h' ? f.h : f.i;
    const std::string flag = std::string("--") + param_letter(rule);
    if (given(app, flag)) {
      std::pair<int, int> r = parse_range(text, flag);
      spec.param_min = r.first;
      spec.param_max = r.second;
    } else if (param_letter(rule) == 'h' && config.h) {
      spec.param_min = spec.param_max = *config.h;
    } else if (param_letter(rule) == 'i' && config.i) {
      spec.param_min = spec.param_max = *config.i;
    }
    if (rule == PrivacyRule::kPathTwoSidedH && spec.param_max == 0) {
      rule = PrivacyRule::kPathTwoSidedHModEdge;
    }
  } else if (given(app, "--h") || given(app, "--i")) {
    throw ParameterError(rule_name(rule) + " takes no h or i parameter");
  }
  spec.rules = {rule};
  const auto rows = sweep(spec);

  Sink sink(f.out_path, stdout_);
  std::ostream& out = sink.get();
  if (config.format == OutputFormat::kJson) {
    out << sweep_to_json(rows);
  } else if (config.format == OutputFormat::kTable) {
    for (const auto& r : rows) {
      out << describe(r.setting) << " N=" << r.n << ": " << r.bound.describe()
          << ", measured "
          << (r.measured ? to_string(*r.measured) : std::string("skipped"));
      if (r.pir) out << ", PIR " << to_string(r.pir->value);
      if (r.lpir) out << ", LPIR " << r.lpir->describe();
      out << "\n";
    }
  } else {
    out << sweep_to_csv(rows);
  }
  for (const auto& r : rows) {
    if (r.measured && !r.match()) return kExitVerifyFailed;
  }
  return kExitOk;
}

}  // namespace

int run_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Graph-replicated PIR with per-server privacy sets"};
  app.require_subcommand(1);
  // --h is a scheme parameter, so help is long-form only.
  app.set_help_flag("--help", "print this help message and exit");

  Flags run_f, table_f, verify_f, cap_f;
  CLI::App* run = app.add_subcommand("run", "retrieve one message end to end");
  add_common(run, run_f);
  run->add_option("--n", run_f.n, "number of servers");
  run->add_option("--h", run_f.h, "neighborhood parameter h");
  run->add_option("--i", run_f.i, "neighbor offset i");
  run->add_option("--theta", run_f.theta, "index of the message to retrieve");
  run->add_option("--seed", run_f.seed, "seed (falls back to PIRLAB_SEED)");
  run->add_flag("--identity-permutations", run_f.identity,
                "use identity symbol permutations (reproducible tables)");

  CLI::App* table =
      app.add_subcommand("table", "print the retrieval table for every theta");
  add_common(table, table_f);
  table->add_option("--n", table_f.n, "number of servers");
  table->add_option("--h", table_f.h, "neighborhood parameter h");
  table->add_option("--i", table_f.i, "neighbor offset i");

  CLI::App* verify = app.add_subcommand(
      "verify", "audit privacy, decodability and rate exhaustively");
  add_common(verify, verify_f);
  verify->add_option("--n", verify_f.n, "number of servers");
  verify->add_option("--h", verify_f.h, "neighborhood parameter h");
  verify->add_option("--i", verify_f.i, "neighbor offset i");

  CLI::App* capacity =
      app.add_subcommand("capacity", "closed-form bounds against measured rates");
  add_common(capacity, cap_f);
  capacity->add_option("--n", cap_f.n_range, "N or a range lo..hi");
  capacity->add_option("--h", cap_f.h, "h or a range lo..hi");
  capacity->add_option("--i", cap_f.i, "i or a range lo..hi");
  capacity->add_flag("--compare-baselines", cap_f.compare_baselines,
                     "append PIR and local-PIR capacities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream help;
    const int rc = app.exit(e, help, err);
    return rc == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (*run) {
      return cmd_run(to_config(run, run_f), run_f.out_path, out);
    }
    if (*table) {
      return cmd_table(to_config(table, table_f), table_f.out_path, out);
    }
    if (*verify) {
      return cmd_verify(to_config(verify, verify_f), verify_f.out_path, out);
    }
    RunConfig c = to_config(capacity, cap_f);
    if (!given(capacity, "--format")) c.format = OutputFormat::kCsv;
    return cmd_capacity(capacity, cap_f, c, out);
  } catch (const ParameterError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}

}  // namespace pirlab::cli
