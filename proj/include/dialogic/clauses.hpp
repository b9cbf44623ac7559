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

#ifndef DIALOGIC_CLAUSES_HPP_
#define DIALOGIC_CLAUSES_HPP_

// Rule-based clause slots (Who, For Who, What, When, Where, How, Why,
// Consequences) over POS/entity-annotated sentences. Each slot holds a single
// word; multi-word entities are not reassembled.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dialogic/featureio.hpp"
#include "dialogic/types.hpp"

namespace dialogic::clauses {

using featureio::AnnotatedSentence;
using featureio::AnnotatedToken;
using featureio::EntityCategory;
using featureio::PartOfSpeech;

struct Slot {
  std::string word;
  std::size_t position = 0;  // token index in the sentence
  bool operator==(const Slot&) const = default;
};

struct HowEntry {
  std::string descriptor;
  std::string anchor_verb;
  std::size_t position = 0;
  std::size_t verb_position = 0;
  bool operator==(const HowEntry&) const = default;
};

struct ClauseSet {
  std::optional<Slot> who;
  std::optional<Slot> for_who;
  std::optional<Slot> what;
  std::optional<Slot> when;
  std::optional<Slot> where;
  std::vector<HowEntry> how;
  std::vector<std::string> why;
  std::vector<std::string> consequences;

  bool operator==(const ClauseSet&) const = default;
};

/// Splits on '.', '?' or '!' followed by whitespace or end of text.
std::vector<std::string> split_sentences(std::string_view text);

bool has_verb(const AnnotatedSentence& s);

/// Sentences of one utterance, in order. A verbless sentence joins its
/// predecessor, or its successor when it comes first; an utterance with no
/// verb at all yields nothing.
std::vector<AnnotatedSentence> merge_verbless(const std::vector<AnnotatedSentence>& sentences);

/// Who/For Who/What/When/Where/How. Throws NoVerb for a verbless sentence.
ClauseSet detect_clauses(const AnnotatedSentence& s);

/// "Because <noun before> <verb> <noun after> [descriptor]" per verb, using
/// only recorded slot nouns; a verb lacking a noun on either side gets none.
std::vector<std::string> build_why(const AnnotatedSentence& s, const ClauseSet& clauses);

/// "<verb> <noun>" per verb: the recorded noun after the verb, else the
/// nearest one before it.
std::vector<std::string> build_consequences(const AnnotatedSentence& s, const ClauseSet& clauses);

/// detect_clauses + build_why + build_consequences.
ClauseSet analyze(const AnnotatedSentence& s);

struct ClauseRecord {
  AnnotatedSentence sentence;  // after verbless merging
  ClauseSet clauses;
};

/// Groups annotations by utterance (first-appearance order), merges verbless
/// sentences and analyzes what is left.
std::vector<ClauseRecord> run_clauses(const std::vector<AnnotatedSentence>& annotations);

enum class ClauseType { kWho, kForWho, kWhat, kWhen, kWhere, kHow, kWhy, kConsequences };
inline constexpr std::size_t kClauseTypeCount = 8;
std::string_view to_string(ClauseType type);

using ClauseCounts = std::array<std::size_t, kClauseTypeCount>;

/// Number of clause sets with a non-empty slot, per type.
ClauseCounts count_clauses(const std::vector<ClauseSet>& sets);

/// Distinct clause types present in one set.
std::size_t distinct_types(const ClauseSet& set);

struct ClauseStatsRow {
  double interval_start_s = 0.0;
  ParticipantId speaker;
  ClauseCounts counts{};
};

/// Per (interval, speaker) counts. `utterances` resolves each record's
/// utt_index to a speaker and start time.
std::vector<ClauseStatsRow> clause_stats(const std::vector<ClauseRecord>& records,
                                         const std::vector<Utterance>& utterances, double interval_s);

std::string clause_jsonl(const std::vector<ClauseRecord>& records);
std::string clause_stats_csv(const std::vector<ClauseStatsRow>& rows);

}  // namespace dialogic::clauses

#endif  // DIALOGIC_CLAUSES_HPP_
