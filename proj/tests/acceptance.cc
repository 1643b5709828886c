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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "grid.h"
#include "pirlab/audit.h"
#include "pirlab/capacity.h"
#include "pirlab/cli.h"
#include "pirlab/errors.h"
#include "pirlab/netsim.h"
#include "pirlab/render.h"
#include "pirlab/wire.h"

namespace pirlab {
namespace {

using testing::Cell;
using testing::expected_rate;
using testing::scheme_grid;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> problems;

  void fail(std::string why) {
    pass = false;
    if (problems.size() < 5) problems.push_back(std::move(why));
  }
};

std::string cell_name(const Cell& c) {
  return describe(c.setting) + " on " + build_graph(c.kind, c.n).name();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Cell text with its '+'-separated terms sorted, so "b1+a1" equals "a1+b1".
std::string term_sorted(const std::string& cell) {
  std::vector<std::string> terms;
  std::string cur;
  for (char ch : cell) {
    if (ch == '+') {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  terms.push_back(cur);
  std::sort(terms.begin(), terms.end());
  std::string out;
  for (const auto& t : terms) out += (out.empty() ? "" : "+") + t;
  return out;
}

// --- 1: golden tables through the run command -----------------------------

Outcome golden_tables() {
  Outcome o;
  struct Case {
    std::vector<std::string> args;
    int rows;
    std::string golden;
    // Reference rows written out by hand, term order left as written.
    std::vector<std::vector<std::string>> reference;
  };
  const std::vector<Case> cases{
      {{"--graph", "cycle", "--n", "5", "--setting", "first-neighbor"},
       5,
       "c5_first_neighbor.txt",
       {{"a1+e1", "a2+b1", "b1", "d1", "d1+e1"},
        {"a1+e1", "b1+a1", "b2+c1", "c1", "e1"},
        {"a1", "b1+a1", "b1+c1", "c2+d1", "d1"},
        {"e1", "b1", "b1+c1", "c1+d1", "d2+e1"},
        {"a1+e1", "a1", "c1", "d1+c1", "d1+e2"}}},
      {{"--graph", "path", "--n", "4", "--setting", "modified-edge"},
       3,
       "p4_modified_edge.txt",
       {{"a1", "a2+b1", "b1", "∅"},
        {"a1", "b1+a1", "b2+c1", "c1"},
        {"∅", "b1", "b1+c1", "c2"}}}};

  int rows_checked = 0;
  for (const auto& c : cases) {
    const std::string golden = slurp(PIRLAB_GOLDEN_DIR "/" + c.golden);
    std::string assembled = golden.substr(0, golden.find('\n') + 1);
    for (int theta = 1; theta <= c.rows; ++theta) {
      std::vector<std::string> args{"pirlab", "run"};
      args.insert(args.end(), c.args.begin(), c.args.end());
      args.push_back("--theta");
      args.push_back(std::to_string(theta));
      args.push_back("--identity-permutations");
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = cli::run_main(static_cast<int>(argv.size()),
                                     argv.data(), out, err);
      if (code != cli::kExitOk) {
        o.fail(c.golden + " theta " + std::to_string(theta) +
               ": run exited " + std::to_string(code) + " " + err.str());
        continue;
      }
      std::istringstream lines(out.str());
      std::string line, row;
      const std::string prefix = "θ = " + std::to_string(theta) + " ";
      while (std::getline(lines, line)) {
        if (line.rfind(prefix, 0) == 0) row = line;
      }
      assembled += row + "\n";
      const auto cells = split_table_row(row);
      const auto& want = c.reference[theta - 1];
      bool same = cells.size() == want.size();
      for (std::size_t k = 0; same && k < cells.size(); ++k) {
        same = term_sorted(cells[k]) == term_sorted(want[k]);
      }
      if (!same) o.fail(c.golden + " row theta " + std::to_string(theta) +
                        " differs from the reference row: " + row);
      ++rows_checked;
    }
    // Row-by-row against the frozen table, then the whole table command
    // byte for byte.
    std::istringstream gl(golden), al(assembled);
    std::string g, a;
    std::getline(gl, g);
    std::getline(al, a);
    int line_no = 1;
    while (std::getline(gl, g)) {
      ++line_no;
      std::getline(al, a);
      if (split_table_row(g) != split_table_row(a)) {
        o.fail(c.golden + " line " + std::to_string(line_no) + " mismatch");
      }
    }
    std::vector<std::string> targs{"pirlab", "table"};
    targs.insert(targs.end(), c.args.begin(), c.args.end());
    std::vector<const char*> argv;
    for (const auto& x : targs) argv.push_back(x.c_str());
    std::ostringstream out, err;
    cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    if (out.str() != golden) o.fail(c.golden + " table output not byte-identical");
  }
  o.detail = std::to_string(rows_checked) + " rows";
  return o;
}

// --- 2: exact rates -------------------------------------------------------

Outcome exact_rates() {
  Outcome o;
  const auto grid = scheme_grid(11);
  for (const auto& c : grid) {
    const auto g = build_graph(c.kind, c.n);
    try {
      const auto r = measure_rate(c.setting, g);
      if (r.rate != expected_rate(c)) {
        o.fail(cell_name(c) + ": measured " + to_string(r.rate) +
               ", expected " + to_string(expected_rate(c)));
      }
      if (r.rate != capacity_bound(c.setting, c.n).achievable()) {
        o.fail(cell_name(c) + ": capacity_bound disagrees");
      }
    } catch (const std::exception& e) {
      o.fail(cell_name(c) + ": " + e.what());
    }
  }
  o.detail = std::to_string(grid.size()) + " cells";
  return o;
}

// --- 3: exhaustive privacy ------------------------------------------------

Outcome privacy() {
  Outcome o;
  std::uint64_t comparisons = 0;
  int cells = 0;
  for (const auto& c : scheme_grid(9)) {
    const auto g = build_graph(c.kind, c.n);
    const auto r = audit_privacy(c.setting, g);
    comparisons += r.comparisons;
    ++cells;
    if (!r.pass()) {
      const auto& v = r.violations.front();
      o.fail(cell_name(c) + ": server " + std::to_string(v.server) +
             " separates theta " + std::to_string(v.theta_a) + " and " +
             std::to_string(v.theta_b));
    }
  }
  // The mutated scheme must be caught, with a witness.
  const auto g = build_graph(GraphKind::kCycle, 5);
  const auto s = PrivacySetting::cyclic_first_neighbor();
  const auto bad = audit_privacy(
      without_special_permutation(default_planner(s, g), g), g,
      privacy_sets(s, g));
  if (bad.pass()) {
    o.fail("mutated scheme passed the audit");
  } else {
    const auto& v = bad.violations.front();
    if (v.witness.empty() && v.prob_a == v.prob_b) {
      o.fail("mutated scheme failed without a witness");
    }
    o.detail = std::to_string(cells) + " cells, " +
               std::to_string(comparisons) +
               " comparisons; mutated scheme caught at server " +
               std::to_string(v.server) + " (" + query_to_string(v.witness) +
               ": " + to_string(v.prob_a) + " vs " + to_string(v.prob_b) +
               ")";
  }
  return o;
}

// --- 4: exhaustive decodability ------------------------------------------

Outcome decodability() {
  Outcome o;
  std::uint64_t plans = 0;
  for (std::uint32_t q : {2u, 3u}) {
    for (const auto& c : scheme_grid(11)) {
      const auto g = build_graph(c.kind, c.n);
      const auto r = check_decodability(c.setting, g, FieldSpec(q));
      plans += r.plans_checked;
      if (!r.pass()) {
        o.fail(cell_name(c) + " GF(" + std::to_string(q) + "): theta " +
               std::to_string(r.failures.front().theta));
      }
    }
  }
  o.detail = std::to_string(plans) + " plans over GF(2) and GF(3)";
  return o;
}

// --- 5: rate orderings ---------------------------------------------------

Outcome orderings() {
  Outcome o;
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) o.fail(what);
  };
  for (int n = 4; n <= 12; ++n) {
    expect(Rational(n - 1, 2 * n - 3) > Rational(2, n),
           "(N-1)/(2N-3) > 2/N at N=" + std::to_string(n));
    expect(capacity_bound(PrivacySetting::path_modified_edge(), n).value >
               baseline(Baseline::kPirPath, n).value,
           "modified-edge above PIR at N=" + std::to_string(n));
  }
  for (int n = 5; n <= 11; n += 2) {
    expect(baseline(Baseline::kLpirPath, n).value >
               Rational(n - 1, 2 * n - 3),
           "local PIR path above modified-edge at N=" + std::to_string(n));
  }
  for (int n = 5; n <= 12; ++n) {
    expect(capacity_bound(PrivacySetting::cyclic_first_neighbor(), n).value >
               baseline(Baseline::kPirCycle, n).value,
           "2/5 > 2/(N+1) at N=" + std::to_string(n));
    expect(capacity_bound(PrivacySetting::path_two_sided(n - 3), n).value ==
               Rational(2, n),
           "two-sided path at h=N-3 equals 2/N at N=" + std::to_string(n));
    expect(capacity_bound(PrivacySetting::cyclic_one_sided(n - 3), n).value ==
               Rational(2, n + 1),
           "one-sided cycle at h=N-3 equals 2/(N+1) at N=" +
               std::to_string(n));
    expect(capacity_bound(PrivacySetting::cyclic_two_sided(0), n).value ==
               Rational(1, 2),
           "two-sided cycle at h=0 equals 1/2 at N=" + std::to_string(n));
    expect(capacity_bound(PrivacySetting::path_two_sided_mod_edge(0), n)
                   .value ==
               capacity_bound(PrivacySetting::path_modified_edge(), n).value,
           "two-sided path at h=0 equals modified-edge at N=" +
               std::to_string(n));
  }
  o.detail = std::to_string(checks) + " comparisons";
  return o;
}

// --- 6: end-to-end sessions ----------------------------------------------

Outcome sessions() {
  Outcome o;
  int count = 0;
  const FieldSpec f(2);
  for (const auto& c : scheme_grid(8)) {
    const auto g = build_graph(c.kind, c.n);
    const auto rate = measure_rate(c.setting, g);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      const auto sys = provision(g, f, seed);
      UserNode user(c.setting, g, f, seed);
      SimNetwork net;
      for (int theta = 1; theta <= g.n_messages(); ++theta) {
        try {
          const auto st = user.run_session(net, sys.servers, theta);
          std::size_t symbols = 0;
          for (const auto& a : st.transcript.answers) symbols += a.size();
          if (st.transcript.decoded != sys.full_store.message(theta)) {
            o.fail(cell_name(c) + " seed " + std::to_string(seed) +
                   " theta " + std::to_string(theta) + ": wrong message");
          }
          if (static_cast<int>(symbols) !=
              rate.per_theta_download[theta - 1]) {
            o.fail(cell_name(c) + " theta " + std::to_string(theta) +
                   ": symbol count differs from D_theta");
          }
        } catch (const std::exception& e) {
          o.fail(cell_name(c) + ": " + e.what());
        }
        ++count;
      }
    }
  }
  o.detail = std::to_string(count) + " sessions";
  return o;
}

// --- 7: wire codec -------------------------------------------------------

Outcome wire() {
  Outcome o;
  std::mt19937_64 rng(7);
  for (int t = 0; t < 1000; ++t) {
    WireMessage m;
    m.kind = rng() % 2 ? WireKind::kQuery : WireKind::kAnswer;
    m.session = rng();
    m.server = 1 + static_cast<int>(rng() % 64);
    if (m.kind == WireKind::kQuery) {
      const int n = 1 + rng() % 3;
      for (int i = 0; i < n; ++i) {
        LinComb c({1 + int(rng() % 30), 1 + int(rng() % 2)});
        if (rng() % 2) c.add({1 + int(rng() % 30), 1 + int(rng() % 2)});
        if (c.empty()) c.add({1, 1});
        m.combs.push_back(c);
      }
    } else {
      const int n = rng() % 4;
      for (int i = 0; i < n; ++i) m.symbols.push_back(Element(rng() % 65521));
    }
    const Bytes b = encode_wire(m);
    try {
      const auto back = decode_wire(b);
      if (!(back == m) || encode_wire(back) != b) {
        o.fail("message " + std::to_string(t) + " did not round-trip");
      }
    } catch (const std::exception& e) {
      o.fail("message " + std::to_string(t) + ": " + e.what());
    }
  }
  int malformed = 0;
  auto expect_reject = [&](const Bytes& b, const std::string& what) {
    ++malformed;
    try {
      decode_wire(b);
      o.fail(what + " was accepted");
    } catch (const WireError&) {
    } catch (const std::exception& e) {
      o.fail(what + " raised a non-parse error: " + e.what());
    }
  };
  auto frame = [](const std::string& body) {
    Bytes out{0, 0, 0, static_cast<std::uint8_t>(body.size())};
    out.insert(out.end(), body.begin(), body.end());
    return out;
  };
  expect_reject({}, "empty input");
  expect_reject({0, 0, 0}, "short prefix");
  expect_reject({0, 0, 0, 5, '{', '}'}, "bad length");
  expect_reject(frame("{}"), "empty object");
  expect_reject(frame("[1,2]"), "array");
  expect_reject(frame(R"({"session":1,"kind":"query","server":1,"payload":"W1[1]"})"),
                "shuffled keys");
  expect_reject(frame(R"({"kind":"query","session":1,"server":1,"payload":"W1[1]+"})"),
                "bad comb");
  expect_reject(frame(R"({"kind":"query","session":1,"server":0,"payload":"W1[1]"})"),
                "server 0");
  expect_reject(frame(R"({"kind":"answer","session":-1,"server":1,"payload":[]})"),
                "negative session");
  expect_reject(frame(R"({"kind":"answer", "session":1,"server":1,"payload":[]})"),
                "non-canonical spacing");
  for (int t = 0; t < 2000; ++t) {
    Bytes b(rng() % 40);
    for (auto& x : b) x = std::uint8_t(rng());
    if (b.size() >= 4) {
      b[0] = b[1] = b[2] = 0;
      b[3] = std::uint8_t(b.size() - 4);
    }
    ++malformed;
    try {
      decode_wire(b);
    } catch (const WireError&) {
    } catch (const std::exception& e) {
      o.fail(std::string("random bytes raised a non-parse error: ") +
             e.what());
    }
  }
  o.detail = "1000 round trips, " + std::to_string(malformed) +
             " malformed inputs";
  return o;
}

// --- 8: boundaries ---------------------------------------------------------

Outcome boundaries() {
  Outcome o;
  int rejections = 0;
  auto expect_open_question = [&](const PrivacySetting& s, GraphKind kind,
                                  int n) {
    const auto g = build_graph(kind, n);
    ++rejections;
    try {
      validate(s, g);
      o.fail(describe(s) + " on " + g.name() + " was accepted");
    } catch (const RangeError& e) {
      if (std::string(e.what()).find("open question") == std::string::npos) {
        o.fail(describe(s) + " on " + g.name() +
               " rejected without citing the open question");
      }
    }
  };
  for (int n = 5; n <= 11; ++n) {
    expect_open_question(PrivacySetting::cyclic_ith_neighbor(n - 2),
                         GraphKind::kCycle, n);
    expect_open_question(PrivacySetting::cyclic_one_sided(n - 2),
                         GraphKind::kCycle, n);
  }
  expect_open_question(PrivacySetting::cyclic_first_neighbor(),
                       GraphKind::kCycle, 4);

  int collision_cells = 0;
  std::vector<Cell> cells;
  for (int n = 5; n <= 9; ++n) {
    cells.push_back({PrivacySetting::cyclic_one_sided(n - 3),
                     GraphKind::kCycle, n});
    cells.push_back({PrivacySetting::cyclic_two_sided((n - 3) / 2),
                     GraphKind::kCycle, n});
  }
  for (const auto& c : cells) {
    const auto g = build_graph(c.kind, c.n);
    const auto p = plan_for(c.setting, g, 1,
                            PermutationProfile::identity(c.n, 2));
    const bool wraps = p.arc.length > c.n;
    int doubled = 0;
    for (const auto& q : p.queries) doubled += q.size() == 2 ? 1 : 0;
    if (wraps) {
      ++collision_cells;
      if (doubled != 1) o.fail(cell_name(c) + ": collision not on one server");
    }
    if (!audit_privacy(c.setting, g).pass()) {
      o.fail(cell_name(c) + ": privacy fails");
    }
    for (std::uint32_t q : {2u, 3u}) {
      if (!check_decodability(c.setting, g, FieldSpec(q)).pass()) {
        o.fail(cell_name(c) + ": decodability fails");
      }
    }
  }
  if (collision_cells == 0) o.fail("no cell exercised the collision path");
  o.detail = std::to_string(rejections) + " rejections, " + std::to_string(collision_cells) +
             " collision cells audited";
  return o;
}

}  // namespace
}  // namespace pirlab

int main() {
  using namespace pirlab;
  struct Criterion {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {1, "golden tables", golden_tables},
      {2, "exact rates", exact_rates},
      {3, "exhaustive privacy", privacy},
      {4, "exhaustive decodability", decodability},
      {5, "rate orderings", orderings},
      {6, "end-to-end sessions", sessions},
      {7, "wire codec", wire},
      {8, "boundary behavior", boundaries},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.fail(std::string("threw: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << " ("
              << c.name << "): " << o.detail << " [" << ms << " ms]\n";
    for (const auto& p : o.problems) std::cout << "      " << p << "\n";
  }
  return all ? 0 : 1;
}
