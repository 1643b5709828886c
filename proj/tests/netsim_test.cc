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

#include <random>
#include <string>

#include "gtest/gtest.h"
#include "grid.h"
#include "json.hpp"
#include "pirlab/audit.h"
#include "pirlab/errors.h"
#include "pirlab/netsim.h"
#include "pirlab/wire.h"

namespace pirlab {
namespace {

Bytes frame_of(const std::string& body) {
  Bytes out;
  const auto n = static_cast<std::uint32_t>(body.size());
  for (int s = 24; s >= 0; s -= 8) out.push_back(std::uint8_t(n >> s));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

WireMessage random_message(std::mt19937_64& rng) {
  WireMessage m;
  m.kind = rng() % 2 ? WireKind::kQuery : WireKind::kAnswer;
  m.session = rng();
  m.server = 1 + static_cast<int>(rng() % 1000);
  if (m.kind == WireKind::kQuery) {
    const int n = 1 + rng() % 4;
    for (int i = 0; i < n; ++i) {
      LinComb c;
      const int terms = 1 + rng() % 3;
      for (int t = 0; t < terms; ++t) {
        c.add({1 + int(rng() % 40), 1 + int(rng() % 2)},
              1 + Element(rng() % 6), FieldSpec(7));
      }
      if (c.empty()) c.add({1, 1});
      m.combs.push_back(c);
    }
  } else {
    const int n = rng() % 5;
    for (int i = 0; i < n; ++i) m.symbols.push_back(Element(rng()));
  }
  return m;
}

TEST(WireTest, QueryPayloadText) {
  WireMessage m;
  m.session = 3;
  m.server = 2;
  LinComb c({1, 2});
  c.add({2, 1});
  m.combs = {c};
  const Bytes b = encode_wire(m);
  const std::string body(b.begin() + 4, b.end());
  EXPECT_EQ(body,
            R"({"kind":"query","session":3,"server":2,"payload":"W1[2]+W2[1]"})");
  EXPECT_EQ(decode_wire(b), m);
}

TEST(WireTest, ShuffledKeysRejected) {
  const auto b = frame_of(
      R"({"session":3,"kind":"query","server":2,"payload":"W1[2]+W2[1]"})");
  EXPECT_THROW(decode_wire(b), WireError);
}

TEST(WireTest, ErrorOffsets) {
  try {
    decode_wire(frame_of(
        R"({"kind":"query","session":3,"server":2,"payload":"W1[2]+Q2[1]"})"));
    FAIL();
  } catch (const WireError& e) {
    // Points into the payload string, at or after the bad term.
    EXPECT_GE(e.offset(), 4u + 50u);
  }
  try {
    decode_wire(frame_of(R"({"kind":"query", "session":3})"));
    FAIL();
  } catch (const WireError& e) {
    EXPECT_GE(e.offset(), 4u);
  }
  const Bytes short_frame{0, 0, 0, 9, '{'};
  EXPECT_THROW(decode_wire(short_frame), WireError);
  EXPECT_THROW(decode_wire(Bytes{0, 0}), WireError);
}

TEST(WireTest, EncodeRejectsNullAndBadServer) {
  WireMessage m;
  m.server = 1;
  EXPECT_THROW(encode_wire(m), WireError);
  m.combs = {LinComb({1, 1})};
  m.server = 0;
  EXPECT_THROW(encode_wire(m), WireError);
}

TEST(WireProperty, RoundTripAndCanonical) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const auto m = random_message(rng);
    const Bytes b = encode_wire(m);
    const auto back = decode_wire(b);
    ASSERT_EQ(back, m);
    ASSERT_EQ(encode_wire(back), b);
  }
}

// Mutated frames are either still valid or rejected with WireError.
TEST(WireProperty, MutationsNeverEscape) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 3000; ++t) {
    Bytes b = encode_wire(random_message(rng));
    switch (t % 4) {
      case 0:
        b[rng() % b.size()] = std::uint8_t(rng());
        break;
      case 1:
        b.resize(rng() % b.size());
        break;
      case 2:
        b.insert(b.begin() + 4 + rng() % (b.size() - 4), std::uint8_t(rng()));
        break;
      default:
        for (auto& x : b) x = std::uint8_t(rng());
    }
    try {
      const auto m = decode_wire(b);
      EXPECT_EQ(encode_wire(m), b);
    } catch (const WireError&) {
    } catch (const std::exception& e) {
      ADD_FAILURE() << "unexpected exception: " << e.what();
    }
  }
}

TEST(ProvisionTest, ShardsFollowStorage) {
  const FieldSpec f2(2), f3(3);
  const auto p4 = build_graph(GraphKind::kPath, 4);
  const auto sys = provision(p4, f2, 1);
  ASSERT_EQ(sys.servers.size(), 4u);
  std::set<int> held;
  for (const auto& [m, v] : sys.servers[2].shard().contents()) held.insert(m);
  EXPECT_EQ(held, (std::set<int>{2, 3}));
  EXPECT_EQ(sys.servers[2].shard().message(2), sys.full_store.message(2));
  EXPECT_EQ(provision(p4, f2, 1).full_store, sys.full_store);

  const auto c5 = build_graph(GraphKind::kCycle, 5);
  const auto s5 = provision(c5, f3, 7);
  held.clear();
  for (const auto& [m, v] : s5.servers[0].shard().contents()) held.insert(m);
  EXPECT_EQ(held, (std::set<int>{1, 5}));
  for (const auto& [m, v] : s5.full_store.contents()) {
    for (Element e : v) EXPECT_LT(e, 3u);
  }
}

TEST(SessionTest, HundredSeedsDecodeW2) {
  const auto g = build_graph(GraphKind::kPath, 4);
  const FieldSpec f(2);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto sys = provision(g, f, seed);
    UserNode user(PrivacySetting::path_modified_edge(), g, f, seed);
    SimNetwork net;
    const auto st = user.run_session(net, sys.servers, 2);
    EXPECT_EQ(st.transcript.decoded, sys.full_store.message(2)) << seed;
  }
}

TEST(SessionTest, FiveQueryMessagesOnC5) {
  const auto g = build_graph(GraphKind::kCycle, 5);
  const FieldSpec f(2);
  const auto sys = provision(g, f, 3);
  UserNode user(PrivacySetting::cyclic_first_neighbor(), g, f, 3);
  SimNetwork net;
  const auto st = user.run_session(net, sys.servers, 4);
  EXPECT_EQ(st.query_messages, 5);
  int to_servers = 0;
  for (const auto& r : net.log()) to_servers += r.from == SimNetwork::kUser;
  EXPECT_EQ(to_servers, 5);
  EXPECT_EQ(st.session, 1u);
  EXPECT_EQ(user.run_session(net, sys.servers, 1).session, 2u);
}

TEST(SessionTest, NullQueriesSendNothing) {
  const auto g = build_graph(GraphKind::kPath, 4);
  const FieldSpec f(2);
  const auto sys = provision(g, f, 3);
  UserNode user(PrivacySetting::path_modified_edge(), g, f, 3);
  SimNetwork net;
  user.run_session(net, sys.servers, 1);
  for (const auto& r : net.log()) {
    EXPECT_NE(r.to, 4);
    EXPECT_NE(r.from, 4);
  }
}

TEST(SessionTest, Errors) {
  const auto g = build_graph(GraphKind::kPath, 4);
  const FieldSpec f(2);
  const auto sys = provision(g, f, 3);
  UserNode user(PrivacySetting::path_modified_edge(), g, f, 3);
  SimNetwork net;
  EXPECT_THROW(user.run_session(net, sys.servers, 0), SessionError);
  EXPECT_THROW(user.run_session(net, sys.servers, 4), SessionError);
  SimNetwork cut;
  cut.partition(2);
  EXPECT_THROW(user.run_session(cut, sys.servers, 1), SessionError);
  cut.heal(2);
  const auto st = user.run_session(cut, sys.servers, 1);
  EXPECT_EQ(st.transcript.decoded, sys.full_store.message(1));
}

TEST(SessionTest, ServerRejectsForeignQuery) {
  const auto g = build_graph(GraphKind::kPath, 4);
  const FieldSpec f(2);
  const auto sys = provision(g, f, 3);
  WireMessage m;
  m.server = 3;
  m.session = 1;
  m.combs = {LinComb({1, 1})};
  EXPECT_THROW(sys.servers[2].handle(encode_wire(m)), LocalityError);
}

// Replaying a logged query frame to its server reproduces the logged answer.
TEST(SessionTest, BackChannelReplay) {
  const auto g = build_graph(GraphKind::kCycle, 6);
  const FieldSpec f(3);
  const auto sys = provision(g, f, 11);
  UserNode user(PrivacySetting::cyclic_one_sided(2), g, f, 11);
  SimNetwork net;
  const auto st = user.run_session(net, sys.servers, 5);
  int replayed = 0;
  for (std::size_t i = 0; i < st.wire_log.size(); ++i) {
    const auto& r = st.wire_log[i];
    if (r.from != SimNetwork::kUser) continue;
    const Bytes again = sys.servers[r.to - 1].handle(r.frame);
    bool found = false;
    for (const auto& back : st.wire_log) {
      found = found || (back.from == r.to && back.frame == again);
    }
    EXPECT_TRUE(found);
    ++replayed;
  }
  EXPECT_EQ(replayed, st.query_messages);
}

TEST(SessionTest, DeterministicUnderSeed) {
  const auto g = build_graph(GraphKind::kCycle, 7);
  const FieldSpec f(2);
  auto run = [&] {
    const auto sys = provision(g, f, 42);
    UserNode user(PrivacySetting::cyclic_ith_neighbor(3), g, f, 42);
    SimNetwork net;
    user.run_session(net, sys.servers, 3);
    return net.log();
  };
  const auto a = run();
  const auto b = run();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].frame, b[i].frame);
}

TEST(SessionTest, TranscriptJson) {
  const auto g = build_graph(GraphKind::kPath, 4);
  const FieldSpec f(2);
  const auto sys = provision(g, f, 5);
  UserNode user(PrivacySetting::path_modified_edge(), g, f, 5, true);
  SimNetwork net;
  const auto st = user.run_session(net, sys.servers, 3);
  const auto j = nlohmann::json::parse(transcript_to_json(g, st));
  EXPECT_TRUE(j.is_object());
}

// Every grid cell up to N = 8 decodes over several seeds with the measured
// per-theta symbol count.
TEST(SessionProperty, GridDecodes) {
  const FieldSpec f(2);
  for (const auto& c : testing::scheme_grid(8)) {
    const auto g = build_graph(c.kind, c.n);
    const auto rate = measure_rate(c.setting, g);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const auto sys = provision(g, f, seed);
      UserNode user(c.setting, g, f, seed);
      SimNetwork net;
      for (int theta = 1; theta <= g.n_messages(); ++theta) {
        const auto st = user.run_session(net, sys.servers, theta);
        ASSERT_EQ(st.transcript.decoded, sys.full_store.message(theta));
        int symbols = 0;
        for (const auto& a : st.transcript.answers) symbols += a.size();
        EXPECT_EQ(symbols, rate.per_theta_download[theta - 1]);
      }
    }
  }
}

}  // namespace
}  // namespace pirlab
