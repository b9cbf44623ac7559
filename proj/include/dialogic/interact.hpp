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

#ifndef DIALOGIC_INTERACT_HPP_
#define DIALOGIC_INTERACT_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dialogic/types.hpp"

namespace dialogic::interact {

struct Interaction {
  ParticipantId speaker;
  ParticipantId receiver;
  double start_s = 0.0;
  double end_s = 0.0;
  double weight_s = 0.0;
};

using Edge = std::pair<ParticipantId, ParticipantId>;  // (speaker, receiver)

struct InteractionGraph {
  TimeInterval interval;
  std::set<ParticipantId> nodes;
  std::map<Edge, double> edges;  // cumulative seconds

  double total_weight() const;
};

/// One interaction per consecutive pair of utterances by different speakers,
/// spanning the first start to the second end.
std::vector<Interaction> detect_interactions(const std::vector<Utterance>& utts);

/// Sums interactions whose start falls in `interval` per directed edge.
/// `roster` nodes are always present, so silent participants show up isolated.
InteractionGraph build_ig(const std::vector<Interaction>& interactions, TimeInterval interval,
                          const std::vector<ParticipantId>& roster = {});

/// One graph per interval_s bin up to the last interaction or utterance end.
std::vector<InteractionGraph> build_ig_series(const std::vector<Interaction>& interactions,
                                              double recording_end_s, double interval_s,
                                              const std::vector<ParticipantId>& roster = {});

/// Graph over everything.
InteractionGraph build_whole_ig(const std::vector<Interaction>& interactions,
                                const std::vector<ParticipantId>& roster = {});

struct InterruptionStats {
  std::size_t interactions = 0;
  std::size_t interruptions = 0;
  std::size_t adjusted_interruptions = 0;
  int pct = 0;
  int adjusted_pct = 0;
};

/// floor(100 * count / total); 0 when total is 0.
int pct_floor(std::size_t count, std::size_t total);

/// An interruption is an utterance that starts before the preceding
/// different-speaker utterance ends. It counts as adjusted (flow-disrupting)
/// when the interrupted speaker does not start a new utterance within
/// `resume_window_s` of the interruption.
InterruptionStats interruption_stats(const std::vector<Utterance>& utts, double resume_window_s = 2.0);

InterruptionStats stats_from_counts(std::size_t interactions, std::size_t interruptions,
                                    std::size_t adjusted);

struct DeltaIg {
  double total = 0.0;
  std::map<ParticipantId, double> per_participant;
};

/// L1 distance between edge weights over the union of edges (missing = 0).
/// Every node of either graph appears in per_participant.
DeltaIg delta_ig(const InteractionGraph& a, const InteractionGraph& b);

std::string to_dot(const InteractionGraph& ig, const std::string& name = "IG");
std::string to_json(const InteractionGraph& ig);
std::string interruption_csv(const std::string& recording, const InterruptionStats& stats);

}  // namespace dialogic::interact

#endif  // DIALOGIC_INTERACT_HPP_
