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

#ifndef DIALOGIC_TESTS_SUPPORT_SCENARIOS_HPP_
#define DIALOGIC_TESTS_SUPPORT_SCENARIOS_HPP_

#include <map>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "dialogic/emotion.hpp"
#include "dialogic/hypothesize.hpp"
#include "dialogic/interact.hpp"

// Hand-built inputs shared by the unit tests and the acceptance binary.
namespace scenarios {

// Network with `count` concepts named <prefix>0.., each mentioned `occurrences` times.
dialogic::hypothesize::ConceptNetwork network(const std::string& prefix, std::size_t count,
                                              std::size_t occurrences = 1);

dialogic::hypothesize::TeamState concept_state(dialogic::hypothesize::ConceptNetwork c, double window_end);

// Two teams, one segment each. Breadth 22/16 at the start and 9/8 at the end,
// depth dissimilar at the start and similar at the end, similar interaction graphs.
std::vector<dialogic::hypothesize::LinearSegment> two_team_story();

inline constexpr const char* kStoryInvariant = "Sim(Br) => Sim(Br) ^ Sim(De) | Sim(IG)";
inline constexpr const char* kStoryNull = "DSim(De) => ⊥ | Sim(Br) ^ Sim(IG)";

// Two intervals, three members. P2 interacts most and changes emotion most.
struct DeltaTrace {
  std::vector<dialogic::interact::InteractionGraph> igs;
  dialogic::emotion::EmotionTimeline timeline;
  std::vector<dialogic::TimeInterval> intervals;
};
DeltaTrace delta_trace(bool mutate_max_to_p1);

// Per-speaker non-overlapping speech on a `grid`-second lattice, merged and time sorted.
std::vector<dialogic::Utterance> random_speech(corpus::Rng& rng, std::size_t speakers, std::size_t per_speaker,
                                               double grid = 0.1);

// No sub-second utterance survives unless same-speaker speech follows within 1 s.
bool spike_rule_holds(const std::vector<dialogic::Utterance>& smoothed);

}  // namespace scenarios

#endif  // DIALOGIC_TESTS_SUPPORT_SCENARIOS_HPP_
