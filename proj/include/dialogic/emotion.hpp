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

#ifndef DIALOGIC_EMOTION_HPP_
#define DIALOGIC_EMOTION_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dialogic/featureio.hpp"
#include "dialogic/types.hpp"

namespace dialogic::emotion {

/// Start times of the non-overlapping one-second slices of an utterance; a
/// trailing fragment shorter than one second is dropped.
std::vector<double> segment_seconds(const Utterance& utt);

struct TimelineEntry {
  double second_start_s = 0.0;
  EmotionLabel label = EmotionLabel::kNeutral;
  bool operator==(const TimelineEntry&) const = default;
};

struct EmotionTimeline {
  std::map<ParticipantId, std::vector<TimelineEntry>> by_speaker;

  std::size_t size() const;
};

/// `labels` follow segment_seconds() of each utterance, utterances in order.
/// Throws AlignmentError when the counts differ.
EmotionTimeline build_timeline(const std::vector<Utterance>& utts, const std::vector<EmotionLabel>& labels);

/// Orders provider rows against the utterance slices; every slice needs
/// exactly one row and no row may point outside the slices.
std::vector<EmotionLabel> align_provider_labels(const std::vector<Utterance>& utts,
                                                const std::vector<featureio::EmotionRow>& rows);

enum class DeviationUnit {
  kRun,     // maximal runs of consecutive non-fallback seconds
  kSecond,  // every non-fallback second
};

struct DeviationReport {
  TimeInterval interval;
  EmotionLabel fallback = EmotionLabel::kSad;
  std::map<ParticipantId, std::size_t> counts;  // every timeline speaker
};

DeviationReport count_deviations(const EmotionTimeline& timeline, EmotionLabel fallback,
                                 TimeInterval interval, DeviationUnit unit = DeviationUnit::kRun);

struct DeltaE {
  std::map<ParticipantId, std::size_t> per_speaker;
  std::optional<ParticipantId> argmax;  // ties go to the smallest ID
};

DeltaE delta_e(const EmotionTimeline& timeline, TimeInterval a, TimeInterval b,
               EmotionLabel fallback = EmotionLabel::kSad, DeviationUnit unit = DeviationUnit::kRun);

/// Largest value wins; ties resolve to the lexicographically smallest key.
template <typename Map>
std::optional<typename Map::key_type> argmax_key(const Map& values) {
  std::optional<typename Map::key_type> best;
  typename Map::mapped_type best_v{};
  for (const auto& [k, v] : values) {
    if (!best || v > best_v) {
      best = k;
      best_v = v;
    }
  }
  return best;
}

std::string timeline_csv(const EmotionTimeline& timeline);
std::string deviation_csv(const std::vector<DeviationReport>& reports);

}  // namespace dialogic::emotion

#endif  // DIALOGIC_EMOTION_HPP_
