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

#ifndef DIALOGIC_TEXT_HPP_
#define DIALOGIC_TEXT_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dialogic/featureio.hpp"
#include "dialogic/types.hpp"

namespace dialogic::text {

inline constexpr double kDefaultTrimSeconds = 30.0;

struct TranscriptEntry {
  std::size_t utt_index = 0;  // index into the trimmed utterance list
  ParticipantId speaker;
  std::string text;
  double start_s = 0.0;
  double end_s = 0.0;
  std::size_t word_count = 0;
};

struct Transcript {
  std::vector<TranscriptEntry> entries;
  std::size_t blank_count = 0;
  std::size_t utterance_count = 0;
};

/// Drops utterances inside [0, trim_s) and clips those straddling trim_s.
std::vector<Utterance> privacy_trim(const std::vector<Utterance>& utts, double trim_s = kDefaultTrimSeconds);

/// Whitespace tokens, ignoring tokens made only of punctuation.
std::size_t count_words(std::string_view text);

/// Pairs provider text rows with the trimmed utterances. Blank texts are
/// counted, not emitted. Throws IndexError for a row past the last utterance.
Transcript assemble_transcript(const std::vector<Utterance>& trimmed,
                               const std::vector<featureio::TextRow>& texts);

/// Words per minute; throws ZeroDuration for a non-positive span.
double wpm(const TranscriptEntry& entry);

struct WpmStats {
  std::map<ParticipantId, long long> average_wpm;  // rounded half-up
  std::vector<double> per_entry;                   // aligned with input entries
};

/// Unweighted mean of per-utterance rates; entries with no words are skipped
/// and a speaker with none left is omitted.
WpmStats avg_wpm(const std::vector<TranscriptEntry>& entries);

long long round_half_up(double v);

std::string transcript_csv(const Transcript& t);
std::string transcript_extended_csv(const Transcript& t);
std::string wpm_csv(const std::string& recording, const WpmStats& stats);

}  // namespace dialogic::text

#endif  // DIALOGIC_TEXT_HPP_
