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

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "dialogic/clauses.hpp"
#include "dialogic/error.hpp"
#include "dialogic/io.hpp"

namespace dialogic::clauses {
namespace {

bool is_noun_of(const AnnotatedToken& t, std::initializer_list<EntityCategory> cats) {
  if (t.pos != PartOfSpeech::kNoun) return false;
  return std::find(cats.begin(), cats.end(), t.category) != cats.end();
}

bool is_descriptor(const AnnotatedToken& t) {
  return t.pos == PartOfSpeech::kAdj || t.pos == PartOfSpeech::kAdv;
}

std::vector<std::size_t> verb_positions(const AnnotatedSentence& s) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < s.tokens.size(); ++i)
    if (s.tokens[i].pos == PartOfSpeech::kVerb) v.push_back(i);
  return v;
}

std::vector<Slot> recorded_nouns(const ClauseSet& c) {
  std::vector<Slot> out;
  for (const auto* slot : {&c.who, &c.for_who, &c.what, &c.when, &c.where})
    if (*slot) out.push_back(**slot);
  std::sort(out.begin(), out.end(), [](const Slot& a, const Slot& b) { return a.position < b.position; });
  return out;
}

struct Blanks {
  const Slot* before = nullptr;
  const Slot* after = nullptr;
};

Blanks blanks_around(const std::vector<Slot>& nouns, std::size_t verb_pos) {
  Blanks b;
  for (const auto& n : nouns) {
    if (n.position < verb_pos) b.before = &n;
    if (n.position > verb_pos && !b.after) b.after = &n;
  }
  return b;
}

nlohmann::ordered_json slot_json(const std::optional<Slot>& s) {
  return s ? nlohmann::ordered_json(s->word) : nlohmann::ordered_json(nullptr);
}

}  // namespace

std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    const auto b = current.find_first_not_of(" \t\r\n");
    if (b != std::string::npos) {
      const auto e = current.find_last_not_of(" \t\r\n");
      out.push_back(current.substr(b, e - b + 1));
    }
    current.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    current.push_back(c);
    const bool terminator = c == '.' || c == '?' || c == '!';
    const bool boundary = i + 1 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 1]));
    if (terminator && boundary) flush();
  }
  flush();
  return out;
}

bool has_verb(const AnnotatedSentence& s) {
  return std::any_of(s.tokens.begin(), s.tokens.end(),
                     [](const AnnotatedToken& t) { return t.pos == PartOfSpeech::kVerb; });
}

std::vector<AnnotatedSentence> merge_verbless(const std::vector<AnnotatedSentence>& sentences) {
  std::vector<AnnotatedSentence> out;
  std::optional<AnnotatedSentence> pending;  // leading verbless text awaiting a successor
  for (const auto& s : sentences) {
    if (s.tokens.empty()) continue;
    if (has_verb(s)) {
      AnnotatedSentence merged = s;
      if (pending) {
        merged.sentence = pending->sentence + " " + s.sentence;
        merged.tokens.insert(merged.tokens.begin(), pending->tokens.begin(), pending->tokens.end());
        pending.reset();
      }
      out.push_back(std::move(merged));
    } else if (!out.empty()) {
      out.back().sentence += " " + s.sentence;
      out.back().tokens.insert(out.back().tokens.end(), s.tokens.begin(), s.tokens.end());
    } else if (pending) {
      pending->sentence += " " + s.sentence;
      pending->tokens.insert(pending->tokens.end(), s.tokens.begin(), s.tokens.end());
    } else {
      pending = s;
    }
  }
  return out;
}

ClauseSet detect_clauses(const AnnotatedSentence& s) {
  const auto verbs = verb_positions(s);
  if (verbs.empty()) throw Error(ErrorCode::kNoVerb, "sentence has no verb: " + s.sentence);
  const std::size_t first_verb = verbs.front();
  ClauseSet c;
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    const auto& t = s.tokens[i];
    if (is_noun_of(t, {EntityCategory::kPerson})) {
      if (i < first_verb && !c.who) c.who = Slot{t.word, i};
      if (i > first_verb && !c.for_who) c.for_who = Slot{t.word, i};
    }
    if (!c.what && is_noun_of(t, {EntityCategory::kOrganization, EntityCategory::kMisc})) c.what = Slot{t.word, i};
    if (!c.when && is_noun_of(t, {EntityCategory::kDate, EntityCategory::kTime, EntityCategory::kDuration,
                                  EntityCategory::kSet})) {
      c.when = Slot{t.word, i};
    }
    if (!c.where && is_noun_of(t, {EntityCategory::kLocation})) c.where = Slot{t.word, i};
  }
  // One descriptor per verb, taken between that verb and the next one.
  for (std::size_t v = 0; v < verbs.size(); ++v) {
    const std::size_t limit = v + 1 < verbs.size() ? verbs[v + 1] : s.tokens.size();
    for (std::size_t i = verbs[v] + 1; i < limit; ++i) {
      if (is_descriptor(s.tokens[i])) {
        c.how.push_back({s.tokens[i].word, s.tokens[verbs[v]].word, i, verbs[v]});
        break;
      }
    }
  }
  return c;
}

std::vector<std::string> build_why(const AnnotatedSentence& s, const ClauseSet& clauses) {
  const auto nouns = recorded_nouns(clauses);
  std::vector<std::string> out;
  for (std::size_t vp : verb_positions(s)) {
    const Blanks b = blanks_around(nouns, vp);
    if (!b.before || !b.after) continue;
    std::string why = "Because " + b.before->word + " " + s.tokens[vp].word + " " + b.after->word;
    for (const auto& h : clauses.how) {
      if (h.verb_position == vp) {
        why += " " + h.descriptor;
        break;
      }
    }
    out.push_back(std::move(why));
  }
  return out;
}

std::vector<std::string> build_consequences(const AnnotatedSentence& s, const ClauseSet& clauses) {
  const auto nouns = recorded_nouns(clauses);
  std::vector<std::string> out;
  for (std::size_t vp : verb_positions(s)) {
    const Blanks b = blanks_around(nouns, vp);
    const Slot* noun = b.after ? b.after : b.before;
    if (noun) out.push_back(s.tokens[vp].word + " " + noun->word);
  }
  return out;
}

ClauseSet analyze(const AnnotatedSentence& s) {
  ClauseSet c = detect_clauses(s);
  c.why = build_why(s, c);
  c.consequences = build_consequences(s, c);
  return c;
}

std::vector<ClauseRecord> run_clauses(const std::vector<AnnotatedSentence>& annotations) {
  std::vector<std::size_t> order;
  std::map<std::size_t, std::vector<AnnotatedSentence>> by_utt;
  for (const auto& s : annotations) {
    if (!by_utt.contains(s.utt_index)) order.push_back(s.utt_index);
    by_utt[s.utt_index].push_back(s);
  }
  std::vector<ClauseRecord> out;
  for (std::size_t utt : order) {
    for (auto& merged : merge_verbless(by_utt[utt])) {
      ClauseSet c = analyze(merged);
      out.push_back({std::move(merged), std::move(c)});
    }
  }
  return out;
}

std::string_view to_string(ClauseType type) {
  static constexpr std::array<std::string_view, kClauseTypeCount> kNames = {
      "who", "for_who", "what", "when", "where", "how", "why", "consequences"};
  return kNames[static_cast<std::size_t>(type)];
}

ClauseCounts count_clauses(const std::vector<ClauseSet>& sets) {
  ClauseCounts counts{};
  for (const auto& c : sets) {
    counts[0] += c.who.has_value();
    counts[1] += c.for_who.has_value();
    counts[2] += c.what.has_value();
    counts[3] += c.when.has_value();
    counts[4] += c.where.has_value();
    counts[5] += !c.how.empty();
    counts[6] += !c.why.empty();
    counts[7] += !c.consequences.empty();
  }
  return counts;
}

std::size_t distinct_types(const ClauseSet& set) {
  const auto counts = count_clauses({set});
  return static_cast<std::size_t>(std::count_if(counts.begin(), counts.end(), [](std::size_t n) { return n > 0; }));
}

std::vector<ClauseStatsRow> clause_stats(const std::vector<ClauseRecord>& records,
                                         const std::vector<Utterance>& utterances, double interval_s) {
  std::map<std::pair<long long, ParticipantId>, std::vector<ClauseSet>> groups;
  for (const auto& r : records) {
    if (r.sentence.utt_index >= utterances.size()) {
      throw Error(ErrorCode::kIndexError,
                  "clause record references utterance " + std::to_string(r.sentence.utt_index));
    }
    const auto& u = utterances[r.sentence.utt_index];
    const auto bin = static_cast<long long>(std::floor(u.start_s / interval_s));
    groups[{bin, speaker_name(u.speaker)}].push_back(r.clauses);
  }
  std::vector<ClauseStatsRow> out;
  for (const auto& [key, sets] : groups) {
    out.push_back({static_cast<double>(key.first) * interval_s, key.second, count_clauses(sets)});
  }
  return out;
}

std::string clause_jsonl(const std::vector<ClauseRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["utt_index"] = r.sentence.utt_index;
    j["sentence"] = r.sentence.sentence;
    j["who"] = slot_json(r.clauses.who);
    j["for_who"] = slot_json(r.clauses.for_who);
    j["what"] = slot_json(r.clauses.what);
    j["when"] = slot_json(r.clauses.when);
    j["where"] = slot_json(r.clauses.where);
    j["how"] = nlohmann::ordered_json::array();
    for (const auto& h : r.clauses.how) {
      nlohmann::ordered_json e;
      e["descriptor"] = h.descriptor;
      e["verb"] = h.anchor_verb;
      j["how"].push_back(std::move(e));
    }
    j["why"] = r.clauses.why;
    j["consequences"] = r.clauses.consequences;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::string clause_stats_csv(const std::vector<ClauseStatsRow>& rows) {
  csv::Row header{"interval_start_s", "speaker"};
  for (std::size_t t = 0; t < kClauseTypeCount; ++t) header.emplace_back(to_string(static_cast<ClauseType>(t)));
  std::string out = csv::format_row(header);
  for (const auto& r : rows) {
    csv::Row row{csv::fixed(r.interval_start_s, 3), r.speaker};
    for (auto c : r.counts) row.push_back(std::to_string(c));
    out += csv::format_row(row);
  }
  return out;
}

}  // namespace dialogic::clauses
