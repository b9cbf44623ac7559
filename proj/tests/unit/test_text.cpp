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

#include "dialogic/error.hpp"
#include "dialogic/interact.hpp"
#include "dialogic/text.hpp"

using namespace dialogic;
using namespace dialogic::text;

namespace {

Utterance utt(const std::string& who, double s, double e) { return {ParticipantId{who}, s, e}; }

TranscriptEntry entry(const std::string& who, std::size_t words, double dur) {
  TranscriptEntry e;
  e.speaker = who;
  e.word_count = words;
  e.start_s = 40;
  e.end_s = 40 + dur;
  return e;
}

}  // namespace

TEST_CASE("privacy_trim examples") {
  const auto out = privacy_trim({utt("A", 10, 20), utt("A", 25, 40), utt("B", 31, 40)});
  REQUIRE(out.size() == 2);
  CHECK(out[0] == utt("A", 30, 40));
  CHECK(out[1] == utt("B", 31, 40));
  CHECK(privacy_trim({utt("A", 0, 30)}).empty());
  CHECK(privacy_trim({utt("A", 0, 5)}, 0).size() == 1);
}

TEST_CASE("count_words ignores punctuation-only tokens") {
  CHECK(count_words("") == 0);
  CHECK(count_words("   ") == 0);
  CHECK(count_words("I got one") == 3);
  CHECK(count_words("well ... ok , then!") == 3);
  CHECK(count_words("don't stop") == 2);
  CHECK(count_words("  leading\ttabs\nand newlines ") == 4);
}

TEST_CASE("assemble_transcript filters blanks") {
  const std::vector<Utterance> us{utt("A", 30, 32), utt("B", 33, 35), utt("A", 36, 40)};
  const auto t = assemble_transcript(us, {{0, "hello there"}, {1, "  "}, {2, "we should go"}});
  CHECK(t.entries.size() == 2);
  CHECK(t.blank_count == 1);
  CHECK(t.utterance_count == 3);
  CHECK(t.entries[1].speaker == "A");
  CHECK(t.entries[1].word_count == 3);
  CHECK(t.entries[1].start_s == 36);

  const auto blank = assemble_transcript(us, {{0, ""}, {1, "..."}, {2, " "}});
  CHECK(blank.entries.empty());
  CHECK(blank.blank_count == 3);

  CHECK_THROWS_AS(assemble_transcript(us, {{3, "too far"}}), Error);
}

TEST_CASE("assemble_transcript orders by utterance index") {
  const std::vector<Utterance> us{utt("A", 30, 32), utt("B", 33, 35)};
  const auto t = assemble_transcript(us, {{1, "second"}, {0, "first"}});
  REQUIRE(t.entries.size() == 2);
  CHECK(t.entries[0].text == "first");
}

TEST_CASE("blank percentages follow pct_floor") {
  CHECK(interact::pct_floor(18, 379) == 4);
  CHECK(interact::pct_floor(17, 379) == 4);
}

TEST_CASE("wpm examples") {
  CHECK(wpm(entry("A", 20, 6.0)) == doctest::Approx(200.0));
  CHECK(wpm(entry("A", 0, 6.0)) == 0.0);
  CHECK(wpm(entry("A", 7, 3.5)) == doctest::Approx(120.0));
  try {
    wpm(entry("A", 3, 0.0));
    FAIL("expected ZeroDuration");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroDuration);
  }
}

TEST_CASE("avg_wpm examples") {
  // 10 words in 6 s and 20 words in 6 s: rates 100 and 200.
  auto s = avg_wpm({entry("A", 10, 6.0), entry("A", 20, 6.0)});
  CHECK(s.average_wpm.at("A") == 150);
  REQUIRE(s.per_entry.size() == 2);

  // 159.4 wpm rounds down; 0-word entries do not count toward the average.
  auto r = avg_wpm({entry("B", 797, 300.0), entry("B", 0, 3.0)});
  CHECK(r.per_entry[0] == doctest::Approx(159.4));
  CHECK(r.average_wpm.at("B") == 159);

  auto silent = avg_wpm({entry("C", 0, 2.0)});
  CHECK(silent.average_wpm.count("C") == 0);
  CHECK(avg_wpm({}).average_wpm.empty());
}

TEST_CASE("round_half_up") {
  CHECK(round_half_up(159.4) == 159);
  CHECK(round_half_up(159.5) == 160);
  CHECK(round_half_up(0.5) == 1);
  CHECK(round_half_up(2.49999) == 2);
}

TEST_CASE("transcript writers") {
  const std::vector<Utterance> us{utt("A", 30, 32.5)};
  const auto t = assemble_transcript(us, {{0, "hi, \"you\""}});
  CHECK(transcript_csv(t) == "speaker,text\nA,\"hi, \"\"you\"\"\"\n");
  CHECK(transcript_extended_csv(t) ==
        "utt_index,speaker,start_s,end_s,word_count,text\n0,A,30.000,32.500,2,\"hi, \"\"you\"\"\"\n");
  const auto stats = avg_wpm(t.entries);
  CHECK(wpm_csv("G2", stats) == "speaker,video,average_wpm\nA,G2,48\n");
}
