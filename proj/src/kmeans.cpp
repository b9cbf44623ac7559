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

#include <limits>
#include <random>

#include "dialogic/diarize.hpp"
#include "dialogic/error.hpp"

namespace dialogic::diarize {
namespace {

constexpr int kMaxIterations = 300;

// Portable [0,1) draw: mt19937_64 output is fully specified by the standard,
// unlike std::uniform_real_distribution.
double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<std::size_t> assign(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centers) {
  std::vector<std::size_t> labels(static_cast<std::size_t>(points.rows()));
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_c = 0;
    for (Eigen::Index c = 0; c < centers.rows(); ++c) {
      const double d = (points.row(i) - centers.row(c)).squaredNorm();
      if (d < best) {
        best = d;
        best_c = static_cast<std::size_t>(c);
      }
    }
    labels[static_cast<std::size_t>(i)] = best_c;
  }
  return labels;
}

Eigen::MatrixXd centroids(const Eigen::MatrixXd& points, const std::vector<std::size_t>& labels,
                          std::size_t k) {
  Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), points.cols());
  std::vector<std::size_t> counts(k, 0);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    centers.row(static_cast<Eigen::Index>(labels[i])) += points.row(static_cast<Eigen::Index>(i));
    ++counts[labels[i]];
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (counts[c] > 0) centers.row(static_cast<Eigen::Index>(c)) /= static_cast<double>(counts[c]);
  }
  return centers;
}

void repair_empty(const Eigen::MatrixXd& points, std::vector<std::size_t>& labels, std::size_t k) {
  for (;;) {
    std::vector<std::size_t> counts(k, 0);
    for (auto l : labels) ++counts[l];
    std::size_t empty = k;
    for (std::size_t c = 0; c < k; ++c) {
      if (counts[c] == 0) {
        empty = c;
        break;
      }
    }
    if (empty == k) return;
    const Eigen::MatrixXd centers = centroids(points, labels, k);
    double worst = -1.0;
    std::size_t victim = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (counts[labels[i]] < 2) continue;
      const double d = (points.row(static_cast<Eigen::Index>(i)) -
                        centers.row(static_cast<Eigen::Index>(labels[i])))
                           .squaredNorm();
      if (d > worst) {
        worst = d;
        victim = i;
      }
    }
    labels[victim] = empty;
  }
}

}  // namespace

std::vector<std::size_t> kmeans(const Eigen::MatrixXd& points, std::size_t k, std::uint64_t seed) {
  const auto n = static_cast<std::size_t>(points.rows());
  if (k == 0 || k > n) {
    throw Error(ErrorCode::kDegenerateInput,
                "k-means needs 1 <= k <= n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  std::mt19937_64 rng(seed);

  // k-means++ seeding.
  std::vector<std::size_t> chosen;
  std::vector<bool> taken(n, false);
  chosen.push_back(static_cast<std::size_t>(rng() % n));
  taken[chosen.back()] = true;
  std::vector<double> d2(n, std::numeric_limits<double>::infinity());
  while (chosen.size() < k) {
    const auto last = static_cast<Eigen::Index>(chosen.back());
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      d2[i] = std::min(d2[i], (points.row(static_cast<Eigen::Index>(i)) - points.row(last)).squaredNorm());
      if (!taken[i]) total += d2[i];
    }
    std::size_t pick = n;
    if (total > 0.0) {
      double target = unit_draw(rng) * total;
      for (std::size_t i = 0; i < n; ++i) {
        if (taken[i] || d2[i] <= 0.0) continue;
        pick = i;
        target -= d2[i];
        if (target < 0.0) break;
      }
    }
    if (pick == n) {
      // Remaining points all coincide with a center.
      for (std::size_t i = 0; i < n && pick == n; ++i)
        if (!taken[i]) pick = i;
    }
    chosen.push_back(pick);
    taken[pick] = true;
  }

  Eigen::MatrixXd centers(static_cast<Eigen::Index>(k), points.cols());
  for (std::size_t c = 0; c < k; ++c) {
    centers.row(static_cast<Eigen::Index>(c)) = points.row(static_cast<Eigen::Index>(chosen[c]));
  }
  std::vector<std::size_t> labels = assign(points, centers);
  // Seed points must own their cluster even when duplicates tie.
  for (std::size_t c = 0; c < k; ++c) labels[chosen[c]] = c;

  for (int it = 0; it < kMaxIterations; ++it) {
    repair_empty(points, labels, k);
    centers = centroids(points, labels, k);
    auto next = assign(points, centers);
    if (next == labels) break;
    labels = std::move(next);
  }
  repair_empty(points, labels, k);
  return labels;
}

}  // namespace dialogic::diarize
