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

#include <algorithm>
#include <cctype>
#include <cmath>

#include "dialogic/error.hpp"
#include "dialogic/io.hpp"
#include "dialogic/text.hpp"

namespace dialogic::text {

std::vector<Utterance> privacy_trim(const std::vector<Utterance>& utts, double trim_s) {
  std::vector<Utterance> out;
  for (const auto& u : utts) {
    if (u.end_s <= trim_s) continue;
    Utterance v = u;
    v.start_s = std::max(v.start_s, trim_s);
    out.push_back(std::move(v));
  }
  return out;
}

std::size_t count_words(std::string_view text) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    bool has_word_char = false;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      if (!std::ispunct(static_cast<unsigned char>(text[i]))) has_word_char = true;
      ++i;
    }
    if (has_word_char) ++n;
  }
  return n;
}

Transcript assemble_transcript(const std::vector<Utterance>& trimmed,
                               const std::vector<featureio::TextRow>& texts) {
  Transcript t;
  t.utterance_count = trimmed.size();
  std::vector<const featureio::TextRow*> ordered(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) ordered[i] = &texts[i];
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto* a, const auto* b) { return a->utt_index < b->utt_index; });
  for (const auto* row : ordered) {
    if (row->utt_index >= trimmed.size()) {
      throw Error(ErrorCode::kIndexError, "text row references utterance " + std::to_string(row->utt_index) +
                                              " of " + std::to_string(trimmed.size()));
    }
    if (count_words(row->text) == 0) {
      ++t.blank_count;
      continue;
    }
    const auto& u = trimmed[row->utt_index];
    t.entries.push_back({row->utt_index, speaker_name(u.speaker), row->text, u.start_s, u.end_s,
                         count_words(row->text)});
  }
  return t;
}

double wpm(const TranscriptEntry& entry) {
  const double dur = entry.end_s - entry.start_s;
  if (!(dur > 0.0)) throw Error(ErrorCode::kZeroDuration, "utterance has no duration");
  return static_cast<double>(entry.word_count) / (dur / 60.0);
}

long long round_half_up(double v) { return static_cast<long long>(std::floor(v + 0.5)); }

WpmStats avg_wpm(const std::vector<TranscriptEntry>& entries) {
  WpmStats stats;
  std::map<ParticipantId, std::pair<double, std::size_t>> acc;
  for (const auto& e : entries) {
    const double rate = wpm(e);
    stats.per_entry.push_back(rate);
    if (e.word_count == 0) continue;
    auto& [sum, n] = acc[e.speaker];
    sum += rate;
    ++n;
  }
  for (const auto& [id, sn] : acc) stats.average_wpm[id] = round_half_up(sn.first / static_cast<double>(sn.second));
  return stats;
}

std::string transcript_csv(const Transcript& t) {
  std::string out = csv::format_row({"speaker", "text"});
  for (const auto& e : t.entries) out += csv::format_row({e.speaker, e.text});
  return out;
}

std::string transcript_extended_csv(const Transcript& t) {
  std::string out = csv::format_row({"utt_index", "speaker", "start_s", "end_s", "word_count", "text"});
  for (const auto& e : t.entries) {
    out += csv::format_row({std::to_string(e.utt_index), e.speaker, csv::fixed(e.start_s, 3),
                            csv::fixed(e.end_s, 3), std::to_string(e.word_count), e.text});
  }
  return out;
}

std::string wpm_csv(const std::string& recording, const WpmStats& stats) {
  std::string out = csv::format_row({"speaker", "video", "average_wpm"});
  for (const auto& [id, avg] : stats.average_wpm) {
    out += csv::format_row({id, recording, std::to_string(avg)});
  }
  return out;
}

}  // namespace dialogic::text
