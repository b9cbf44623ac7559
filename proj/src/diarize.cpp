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
#include <cmath>
#include <set>

#include "dialogic/diarize.hpp"
#include "dialogic/error.hpp"

namespace dialogic::diarize {

Roster::Roster(std::vector<ParticipantId> ids) : ids_(std::move(ids)) {
  std::set<ParticipantId> seen;
  for (const auto& id : ids_) {
    if (id.empty()) throw Error(ErrorCode::kConfigError, "roster contains an empty ID");
    if (!seen.insert(id).second) throw Error(ErrorCode::kConfigError, "duplicate roster ID " + id);
  }
}

AffinityMatrix affinity(std::span<const featureio::EmbeddingVector> embeddings) {
  const std::size_t n = embeddings.size();
  if (n < 2) throw Error(ErrorCode::kDegenerateInput, "affinity needs at least two embeddings");
  const std::size_t dim = embeddings.front().size();
  Eigen::MatrixXd unit(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < n; ++i) {
    if (embeddings[i].size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "embedding " + std::to_string(i) + " has dimension " +
                                                     std::to_string(embeddings[i].size()) +
                                                     ", expected " + std::to_string(dim));
    }
    double norm = 0.0;
    for (double v : embeddings[i]) norm += v * v;
    norm = std::sqrt(norm);
    if (!(norm > 0.0)) throw Error(ErrorCode::kZeroVector, "embedding " + std::to_string(i) + " is zero");
    for (std::size_t d = 0; d < dim; ++d) {
      unit(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(d)) = embeddings[i][d] / norm;
    }
  }
  AffinityMatrix a = unit * unit.transpose();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    a(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < a.cols(); ++j) {
      const double v = std::clamp(0.5 * (a(i, j) + a(j, i)), -1.0, 1.0);
      a(i, j) = v;
      a(j, i) = v;
    }
  }
  return a;
}

Eigen::MatrixXd spectral_embedding(const AffinityMatrix& a, std::size_t m) {
  const auto n = static_cast<std::size_t>(a.rows());
  if (m == 0 || m > n) {
    throw Error(ErrorCode::kDegenerateInput,
                "speaker count " + std::to_string(m) + " invalid for " + std::to_string(n) + " rows");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kEigenFailure, "eigendecomposition did not converge");
  }
  // Eigenvalues come back ascending; take the last m columns, largest first.
  Eigen::MatrixXd emb(a.rows(), static_cast<Eigen::Index>(m));
  for (std::size_t c = 0; c < m; ++c) {
    Eigen::VectorXd v = solver.eigenvectors().col(static_cast<Eigen::Index>(n - 1 - c));
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    if (v(pivot) < 0.0) v = -v;
    emb.col(static_cast<Eigen::Index>(c)) = v;
  }
  for (Eigen::Index r = 0; r < emb.rows(); ++r) {
    const double norm = emb.row(r).norm();
    if (norm > 0.0) emb.row(r) /= norm;
  }
  return emb;
}

std::vector<std::size_t> spectral_cluster(const AffinityMatrix& a, std::size_t m, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(a.rows());
  if (m == 0 || m > n) {
    throw Error(ErrorCode::kDegenerateInput,
                "speaker count " + std::to_string(m) + " invalid for " + std::to_string(n) + " rows");
  }
  if (m == 1) return std::vector<std::size_t>(n, 0);
  const auto raw = kmeans(spectral_embedding(a, m), m, seed);
  std::vector<std::size_t> remap(m, m);
  std::size_t next = 0;
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (remap[raw[i]] == m) remap[raw[i]] = next++;
    labels[i] = remap[raw[i]];
  }
  return labels;
}

std::vector<Utterance> labels_to_utterances(std::span<const std::size_t> labels,
                                            std::span<const double> window_starts) {
  if (labels.size() != window_starts.size()) {
    throw Error(ErrorCode::kAlignmentError, "labels and window starts differ in length");
  }
  std::vector<Utterance> out;
  std::size_t i = 0;
  while (i < labels.size()) {
    std::size_t j = i;
    while (j + 1 < labels.size() && labels[j + 1] == labels[i]) ++j;
    double end = window_starts[j] + featureio::kWindowSeconds;
    if (j + 1 < labels.size()) end = std::min(end, window_starts[j + 1]);
    out.push_back({ClusterIndex{labels[i]}, window_starts[i], end});
    i = j + 1;
  }
  return out;
}

void sort_utterances(std::vector<Utterance>& utts) {
  std::stable_sort(utts.begin(), utts.end(), [](const Utterance& a, const Utterance& b) {
    if (a.start_s != b.start_s) return a.start_s < b.start_s;
    if (a.end_s != b.end_s) return a.end_s < b.end_s;
    return speaker_name(a.speaker) < speaker_name(b.speaker);
  });
}

std::vector<Utterance> assign_roster(const std::vector<Utterance>& utts, const Roster& roster) {
  std::vector<std::size_t> order(utts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return utts[a].start_s < utts[b].start_s;
  });
  std::map<std::size_t, ParticipantId> mapping;
  std::size_t distinct = 0;
  std::set<std::size_t> clusters;
  for (const auto& u : utts)
    if (const auto* c = std::get_if<ClusterIndex>(&u.speaker)) clusters.insert(c->value);
  distinct = clusters.size();
  if (distinct > roster.size()) {
    throw Error(ErrorCode::kRosterTooSmall, std::to_string(distinct) + " clusters but roster lists " +
                                                std::to_string(roster.size()) + " participants");
  }
  std::size_t next = 0;
  for (std::size_t idx : order) {
    const auto* c = std::get_if<ClusterIndex>(&utts[idx].speaker);
    if (c && !mapping.contains(c->value)) mapping[c->value] = roster.ids()[next++];
  }
  std::vector<Utterance> out = utts;
  for (auto& u : out) {
    if (const auto* c = std::get_if<ClusterIndex>(&u.speaker)) u.speaker = mapping.at(c->value);
  }
  return out;
}

std::vector<ChartInterval> chart_intervals(const std::vector<Utterance>& utts, double interval_s) {
  if (utts.empty()) return {};
  if (!(interval_s > 0.0)) throw Error(ErrorCode::kConfigError, "interval_s must be positive");
  double last_end = 0.0;
  for (const auto& u : utts) last_end = std::max(last_end, u.end_s);
  const auto count = static_cast<std::size_t>(std::max(1.0, std::ceil(last_end / interval_s - 1e-9)));
  std::vector<ChartInterval> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    out[k].interval = {static_cast<double>(k) * interval_s, static_cast<double>(k + 1) * interval_s};
  }
  for (const auto& u : utts) {
    const auto first = static_cast<std::size_t>(std::max(0.0, std::floor(u.start_s / interval_s)));
    for (std::size_t k = first; k < count; ++k) {
      const double lo = std::max(u.start_s, out[k].interval.start_s);
      const double hi = std::min(u.end_s, out[k].interval.end_s);
      if (lo >= u.end_s) break;
      if (hi > lo) out[k].by_speaker[speaker_name(u.speaker)].push_back({u.speaker, lo, hi});
    }
  }
  return out;
}

}  // namespace dialogic::diarize
