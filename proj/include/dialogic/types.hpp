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

#ifndef DIALOGIC_TYPES_HPP_
#define DIALOGIC_TYPES_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace dialogic {

/// Index of a spectral cluster before roster assignment.
struct ClusterIndex {
  std::size_t value = 0;
  auto operator<=>(const ClusterIndex&) const = default;
};

using ParticipantId = std::string;

/// Who an utterance belongs to: a raw cluster or a roster participant.
using SpeakerLabel = std::variant<ClusterIndex, ParticipantId>;

/// Text form used in every canonical file ("0", "1", ... for clusters).
std::string speaker_name(const SpeakerLabel& label);

/// One row of the N x 3 utterance array.
struct Utterance {
  SpeakerLabel speaker;
  double start_s = 0.0;
  double end_s = 0.0;

  double duration() const { return end_s - start_s; }
  bool operator==(const Utterance&) const = default;
};

/// Half-open time range [start_s, end_s).
struct TimeInterval {
  double start_s = 0.0;
  double end_s = 0.0;

  bool contains(double t) const { return t >= start_s && t < end_s; }
  bool operator==(const TimeInterval&) const = default;
};

// Seven-class EMODB taxonomy.
enum class EmotionLabel { kNeutral, kAnger, kBoredom, kDisgust, kFear, kHappy, kSad };

inline constexpr std::array<EmotionLabel, 7> kAllEmotions = {
    EmotionLabel::kNeutral, EmotionLabel::kAnger, EmotionLabel::kBoredom,
    EmotionLabel::kDisgust, EmotionLabel::kFear,  EmotionLabel::kHappy,
    EmotionLabel::kSad};

std::string_view to_string(EmotionLabel label);
std::optional<EmotionLabel> parse_emotion(std::string_view text);

}  // namespace dialogic

#endif  // DIALOGIC_TYPES_HPP_
