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
#include <tuple>

#include "dialogic/emotion.hpp"
#include "dialogic/error.hpp"
#include "dialogic/io.hpp"

namespace dialogic::emotion {
namespace {

constexpr double kEps = 1e-6;

}  // namespace

std::vector<double> segment_seconds(const Utterance& utt) {
  const double dur = utt.duration();
  if (!(dur > 0.0)) return {};
  const auto count = static_cast<std::size_t>(std::floor(dur + 1e-9));
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = utt.start_s + static_cast<double>(k);
  return out;
}

std::size_t EmotionTimeline::size() const {
  std::size_t n = 0;
  for (const auto& [id, entries] : by_speaker) n += entries.size();
  return n;
}

EmotionTimeline build_timeline(const std::vector<Utterance>& utts, const std::vector<EmotionLabel>& labels) {
  std::size_t slices = 0;
  for (const auto& u : utts) slices += segment_seconds(u).size();
  if (slices != labels.size()) {
    throw Error(ErrorCode::kAlignmentError, std::to_string(labels.size()) + " labels for " +
                                                std::to_string(slices) + " one-second slices");
  }
  EmotionTimeline tl;
  std::size_t next = 0;
  for (const auto& u : utts) {
    auto& entries = tl.by_speaker[speaker_name(u.speaker)];
    for (double t : segment_seconds(u)) entries.push_back({t, labels[next++]});
  }
  for (auto& [id, entries] : tl.by_speaker) {
    std::stable_sort(entries.begin(), entries.end(), [](const TimelineEntry& a, const TimelineEntry& b) {
      return a.second_start_s < b.second_start_s;
    });
  }
  return tl;
}

std::vector<EmotionLabel> align_provider_labels(const std::vector<Utterance>& utts,
                                                const std::vector<featureio::EmotionRow>& rows) {
  std::map<std::pair<std::size_t, std::size_t>, EmotionLabel> by_key;
  for (const auto& r : rows) {
    if (!by_key.emplace(std::make_pair(r.utt_index, r.second_index), r.label).second) {
      throw Error(ErrorCode::kAlignmentError, "duplicate emotion row for utterance " +
                                                  std::to_string(r.utt_index) + " second " +
                                                  std::to_string(r.second_index));
    }
  }
  std::vector<EmotionLabel> out;
  for (std::size_t u = 0; u < utts.size(); ++u) {
    const std::size_t n = segment_seconds(utts[u]).size();
    for (std::size_t s = 0; s < n; ++s) {
      const auto it = by_key.find({u, s});
      if (it == by_key.end()) {
        throw Error(ErrorCode::kAlignmentError,
                    "no emotion for utterance " + std::to_string(u) + " second " + std::to_string(s));
      }
      out.push_back(it->second);
    }
  }
  if (out.size() != rows.size()) {
    throw Error(ErrorCode::kAlignmentError, std::to_string(rows.size() - out.size()) +
                                                " emotion rows fall outside the utterance slices");
  }
  return out;
}

DeviationReport count_deviations(const EmotionTimeline& timeline, EmotionLabel fallback,
                                 TimeInterval interval, DeviationUnit unit) {
  DeviationReport report;
  report.interval = interval;
  report.fallback = fallback;
  for (const auto& [id, entries] : timeline.by_speaker) {
    std::size_t count = 0;
    bool in_run = false;
    double prev_t = 0.0;
    for (const auto& e : entries) {
      if (!interval.contains(e.second_start_s)) continue;
      const bool deviates = e.label != fallback;
      const bool contiguous = in_run && e.second_start_s - prev_t <= 1.0 + kEps;
      if (deviates) {
        if (unit == DeviationUnit::kSecond || !contiguous) ++count;
        in_run = true;
      } else {
        in_run = false;
      }
      prev_t = e.second_start_s;
    }
    report.counts[id] = count;
  }
  return report;
}

DeltaE delta_e(const EmotionTimeline& timeline, TimeInterval a, TimeInterval b, EmotionLabel fallback,
               DeviationUnit unit) {
  const auto ra = count_deviations(timeline, fallback, a, unit);
  const auto rb = count_deviations(timeline, fallback, b, unit);
  DeltaE d;
  for (const auto& [id, ca] : ra.counts) {
    const std::size_t cb = rb.counts.at(id);
    d.per_speaker[id] = ca > cb ? ca - cb : cb - ca;
  }
  d.argmax = argmax_key(d.per_speaker);
  return d;
}

std::string timeline_csv(const EmotionTimeline& timeline) {
  struct Row {
    double t;
    std::string speaker;
    EmotionLabel label;
  };
  std::vector<Row> rows;
  for (const auto& [id, entries] : timeline.by_speaker)
    for (const auto& e : entries) rows.push_back({e.second_start_s, id, e.label});
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    return std::tie(a.t, a.speaker) < std::tie(b.t, b.speaker);
  });
  std::string out = csv::format_row({"speaker", "second_start_s", "label"});
  for (const auto& r : rows) {
    out += csv::format_row({r.speaker, csv::fixed(r.t, 3), std::string(to_string(r.label))});
  }
  return out;
}

std::string deviation_csv(const std::vector<DeviationReport>& reports) {
  std::string out = csv::format_row({"interval_start_s", "speaker", "deviations"});
  for (const auto& r : reports) {
    for (const auto& [id, c] : r.counts) {
      out += csv::format_row({csv::fixed(r.interval.start_s, 3), id, std::to_string(c)});
    }
  }
  return out;
}

}  // namespace dialogic::emotion
