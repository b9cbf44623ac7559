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

#ifndef DIALOGIC_DIARIZE_HPP_
#define DIALOGIC_DIARIZE_HPP_

// "Who spoke when": affinity-matrix spectral clustering of window embeddings,
// run merging, spike smoothing, roster labelling and interval charts.

#include <Eigen/Dense>

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dialogic/featureio.hpp"
#include "dialogic/types.hpp"

namespace dialogic::diarize {

using AffinityMatrix = Eigen::MatrixXd;

/// Ordered participant IDs in introduction order.
class Roster {
 public:
  explicit Roster(std::vector<ParticipantId> ids);

  const std::vector<ParticipantId>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }

 private:
  std::vector<ParticipantId> ids_;
};

/// Cosine similarity of every embedding pair; diagonal exactly 1.
AffinityMatrix affinity(std::span<const featureio::EmbeddingVector> embeddings);

/// k-means++ seeding from a seeded PRNG, then Lloyd iterations until the
/// assignment stops changing (at most 300). An empty cluster takes the point
/// farthest from its current centroid. Rows of `points` are observations.
std::vector<std::size_t> kmeans(const Eigen::MatrixXd& points, std::size_t k, std::uint64_t seed);

/// Rows of the top-m eigenvectors of A (largest eigenvalues), each row scaled
/// to unit length.
Eigen::MatrixXd spectral_embedding(const AffinityMatrix& a, std::size_t m);

/// Spectral embedding followed by k-means with k = m. Labels are renumbered in
/// order of first appearance, so row 0 is always cluster 0.
std::vector<std::size_t> spectral_cluster(const AffinityMatrix& a, std::size_t m, std::uint64_t seed);

/// Maximal runs of equal labels. A run ends one second after its last window
/// start, or where the next run begins if that is earlier.
std::vector<Utterance> labels_to_utterances(std::span<const std::size_t> labels,
                                            std::span<const double> window_starts);

/// Spike rule, per speaker, to a fixpoint: an utterance shorter than 1.0 s is
/// merged with that speaker's next utterance when the gap is under 1.0 s
/// (the merged utterance spans the gap), otherwise it is removed.
std::vector<Utterance> temporal_smooth(std::vector<Utterance> utts);

inline constexpr double kMinSpeechSeconds = 1.0;

/// Maps cluster indices to roster IDs in order of each cluster's first
/// utterance. Utterances already carrying a participant ID are left as is.
std::vector<Utterance> assign_roster(const std::vector<Utterance>& utts, const Roster& roster);

struct ChartInterval {
  TimeInterval interval;
  std::map<std::string, std::vector<Utterance>> by_speaker;  // clipped
};

/// Splits utterances at multiples of interval_s. The last, possibly partial,
/// interval is included; empty input gives no intervals.
std::vector<ChartInterval> chart_intervals(const std::vector<Utterance>& utts, double interval_s = 120.0);

/// Sort by (start, end, speaker name): the canonical utterance order.
void sort_utterances(std::vector<Utterance>& utts);

}  // namespace dialogic::diarize

#endif  // DIALOGIC_DIARIZE_HPP_
