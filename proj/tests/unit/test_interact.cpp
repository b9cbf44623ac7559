// Copyright (c) 2026 The dialogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <json.hpp>

#include "dialogic/interact.hpp"

using namespace dialogic;
using namespace dialogic::interact;

namespace {

Utterance utt(const std::string& who, double s, double e) { return {ParticipantId{who}, s, e}; }

Interaction edge(const std::string& a, const std::string& b, double start, double weight) {
  return {a, b, start, start + weight, weight};
}

}  // namespace

TEST_CASE("detect_interactions pairs consecutive speaker changes") {
  auto one = detect_interactions({utt("A", 0, 3), utt("B", 3.2, 6)});
  REQUIRE(one.size() == 1);
  CHECK(one[0].speaker == "A");
  CHECK(one[0].receiver == "B");
  CHECK(one[0].weight_s == doctest::Approx(6.0));

  CHECK(detect_interactions({utt("A", 0, 3), utt("A", 4, 6)}).empty());

  auto chain = detect_interactions({utt("A", 0, 2), utt("B", 2, 4), utt("C", 4, 6)});
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].receiver == "B");
  CHECK(chain[0].weight_s == doctest::Approx(4.0));
  CHECK(chain[1].speaker == "B");
  // 6 - 2: the weight runs from B's start to C's end.
  CHECK(chain[1].weight_s == doctest::Approx(4.0));
  CHECK(chain[1].start_s == doctest::Approx(2.0));

  CHECK(detect_interactions({}).empty());
  CHECK(detect_interactions({utt("A", 0, 1)}).empty());
}

TEST_CASE("build_ig sums weights and bins by start time") {
  const std::vector<Interaction> two{edge("A", "B", 1, 2), edge("A", "B", 10, 3)};
  auto g = build_ig(two, {0, 120});
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges.at({"A", "B"}) == doctest::Approx(5.0));
  CHECK(g.total_weight() == doctest::Approx(5.0));

  auto empty = build_ig({}, {0, 120});
  CHECK(empty.edges.empty());
  CHECK(empty.nodes.empty());

  const std::vector<Interaction> straddle{edge("A", "B", 119, 4), edge("B", "A", 121, 1)};
  auto series = build_ig_series(straddle, 240, 120);
  REQUIRE(series.size() == 2);
  CHECK(series[0].edges.size() == 1);
  CHECK(series[0].edges.count({"A", "B"}) == 1);
  CHECK(series[1].edges.size() == 1);
  CHECK(series[1].edges.count({"B", "A"}) == 1);
}

TEST_CASE("build_ig keeps silent roster members as nodes") {
  auto g = build_ig({edge("P1", "P2", 0, 3)}, {0, 120}, {"P1", "P2", "P3"});
  CHECK(g.nodes == std::set<ParticipantId>{"P1", "P2", "P3"});
  CHECK(g.edges.size() == 1);
}

TEST_CASE("whole-recording graph includes the final interaction") {
  const std::vector<Interaction> xs{edge("A", "B", 0, 5), edge("B", "A", 4, 8)};
  auto g = build_whole_ig(xs);
  CHECK(g.total_weight() == doctest::Approx(13.0));
}

TEST_CASE("pct_floor reproduces published percentages") {
  CHECK(pct_floor(26, 207) == 12);
  CHECK(pct_floor(14, 207) == 6);
  CHECK(pct_floor(28, 157) == 17);
  CHECK(pct_floor(20, 157) == 12);
  CHECK(pct_floor(52, 208) == 25);
  CHECK(pct_floor(44, 208) == 21);
  CHECK(pct_floor(0, 5) == 0);
  CHECK(pct_floor(3, 0) == 0);
  CHECK(pct_floor(5, 5) == 100);
}

TEST_CASE("stats_from_counts derives both percentages") {
  auto s = stats_from_counts(207, 26, 14);
  CHECK(s.pct == 12);
  CHECK(s.adjusted_pct == 6);
  auto z = stats_from_counts(0, 0, 0);
  CHECK(z.pct == 0);
  CHECK(z.adjusted_pct == 0);
}

TEST_CASE("interruption_stats counts overlaps and resumptions") {
  SUBCASE("no overlap") {
    auto s = interruption_stats({utt("A", 0, 2), utt("B", 2, 4), utt("A", 5, 6)});
    CHECK(s.interactions == 2);
    CHECK(s.interruptions == 0);
    CHECK(s.pct == 0);
  }
  SUBCASE("interrupted speaker resumes within the window") {
    // B cuts in at 1.5; A speaks again at 2.5 so the adjusted count excludes it.
    auto s = interruption_stats({utt("A", 0, 2), utt("B", 1.5, 2.4), utt("A", 2.5, 4)});
    CHECK(s.interactions == 2);
    CHECK(s.interruptions == 1);
    CHECK(s.adjusted_interruptions == 0);
  }
  SUBCASE("interrupted speaker stays silent") {
    auto s = interruption_stats({utt("A", 0, 2), utt("B", 1.5, 6), utt("C", 7, 8)});
    CHECK(s.interactions == 2);
    CHECK(s.interruptions == 1);
    CHECK(s.adjusted_interruptions == 1);
    CHECK(s.pct == 50);
    CHECK(s.adjusted_pct == 50);
  }
  SUBCASE("empty") {
    auto s = interruption_stats({});
    CHECK(s.interactions == 0);
    CHECK(s.pct == 0);
  }
}

TEST_CASE("delta_ig examples") {
  InteractionGraph a;
  a.nodes = {"A", "B"};
  a.edges[{"A", "B"}] = 5;
  auto self = delta_ig(a, a);
  CHECK(self.total == 0.0);
  for (const auto& [id, v] : self.per_participant) CHECK(v == 0.0);

  InteractionGraph empty;
  InteractionGraph single;
  single.nodes = {"A", "B"};
  single.edges[{"A", "B"}] = 4;
  auto d = delta_ig(empty, single);
  CHECK(d.total == doctest::Approx(4.0));
  CHECK(d.per_participant.at("A") == doctest::Approx(4.0));
  CHECK(d.per_participant.at("B") == doctest::Approx(4.0));

  InteractionGraph lower = a;
  lower.edges[{"A", "B"}] = 2;
  CHECK(delta_ig(a, lower).total == doctest::Approx(3.0));
}

TEST_CASE("delta_ig lists isolated nodes with zero") {
  InteractionGraph a, b;
  a.nodes = b.nodes = {"A", "B", "C"};
  b.edges[{"A", "B"}] = 1;
  auto d = delta_ig(a, b);
  CHECK(d.per_participant.at("C") == 0.0);
}

TEST_CASE("to_dot format") {
  InteractionGraph g;
  g.nodes = {"A", "B"};
  g.edges[{"A", "B"}] = 5;
  const auto dot = to_dot(g);
  CHECK(dot == "digraph IG {\n  A;\n  B;\n  A -> B [label=\"5.0\"];\n}\n");

  InteractionGraph odd;
  odd.nodes = {"team lead", "2x"};
  const auto q = to_dot(odd, "interval 0");
  CHECK(q.find("digraph \"interval 0\"") == 0);
  CHECK(q.find("\"team lead\";") != std::string::npos);
  CHECK(q.find("\"2x\";") != std::string::npos);
}

TEST_CASE("to_json format") {
  InteractionGraph g;
  g.interval = {0, 120};
  g.nodes = {"A", "B", "C"};
  g.edges[{"B", "A"}] = 2.12345;
  const auto j = nlohmann::json::parse(to_json(g));
  CHECK(j["interval"] == nlohmann::json::array({0.0, 120.0}));
  CHECK(j["nodes"].size() == 3);
  REQUIRE(j["edges"].size() == 1);
  CHECK(j["edges"][0]["from"] == "B");
  CHECK(j["edges"][0]["to"] == "A");
  CHECK(j["edges"][0]["weight_s"].get<double>() == doctest::Approx(2.123));
}

TEST_CASE("interruption_csv layout") {
  const auto csv = interruption_csv("G2", stats_from_counts(207, 26, 14));
  CHECK(csv ==
        "video,interactions,interruptions,adjusted_interruptions,interruption_pct,adjusted_interruption_pct\n"
        "G2,207,26,14,12,6\n");
}
