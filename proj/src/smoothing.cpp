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
#include <map>

#include "dialogic/diarize.hpp"

namespace dialogic::diarize {
namespace {

// Times are multiples of the 0.1 s window hop; comparisons tolerate rounding.
constexpr double kEps = 1e-9;

void smooth_one_speaker(std::vector<Utterance>& v) {
  std::size_t i = 0;
  while (i < v.size()) {
    if (v[i].duration() >= kMinSpeechSeconds - kEps) {
      ++i;
      continue;
    }
    if (i + 1 < v.size() && v[i + 1].start_s - v[i].end_s < kMinSpeechSeconds - kEps) {
      v[i].end_s = std::max(v[i].end_s, v[i + 1].end_s);
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    } else {
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
}

}  // namespace

std::vector<Utterance> temporal_smooth(std::vector<Utterance> utts) {
  std::map<std::string, std::vector<Utterance>> per_speaker;
  for (auto& u : utts) per_speaker[speaker_name(u.speaker)].push_back(std::move(u));
  std::vector<Utterance> out;
  for (auto& [name, list] : per_speaker) {
    std::stable_sort(list.begin(), list.end(),
                     [](const Utterance& a, const Utterance& b) { return a.start_s < b.start_s; });
    // One left-to-right pass reaches the fixpoint: every visited utterance is
    // either long enough, merged forward and revisited, or removed.
    smooth_one_speaker(list);
    out.insert(out.end(), list.begin(), list.end());
  }
  sort_utterances(out);
  return out;
}

}  // namespace dialogic::diarize
