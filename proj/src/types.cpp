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

#include "dialogic/types.hpp"

namespace dialogic {

std::string speaker_name(const SpeakerLabel& label) {
  if (const auto* c = std::get_if<ClusterIndex>(&label)) return std::to_string(c->value);
  return std::get<ParticipantId>(label);
}

std::string_view to_string(EmotionLabel label) {
  switch (label) {
    case EmotionLabel::kNeutral: return "Neutral";
    case EmotionLabel::kAnger: return "Anger";
    case EmotionLabel::kBoredom: return "Boredom";
    case EmotionLabel::kDisgust: return "Disgust";
    case EmotionLabel::kFear: return "Fear";
    case EmotionLabel::kHappy: return "Happy";
    case EmotionLabel::kSad: return "Sad";
  }
  return "Neutral";
}

std::optional<EmotionLabel> parse_emotion(std::string_view text) {
  for (auto label : kAllEmotions) {
    if (to_string(label) == text) return label;
  }
  return std::nullopt;
}

}  // namespace dialogic
