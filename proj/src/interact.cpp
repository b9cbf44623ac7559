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

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>

#include "dialogic/interact.hpp"
#include "dialogic/io.hpp"

namespace dialogic::interact {
namespace {

constexpr double kEps = 1e-9;

std::string dot_id(const std::string& id) {
  const bool plain = !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
  const bool numeric = std::all_of(id.begin(), id.end(), [](unsigned char c) { return std::isdigit(c); });
  if (plain && (numeric || !std::isdigit(static_cast<unsigned char>(id.front())))) return id;
  std::string out = "\"";
  for (char c : id) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out + "\"";
}

double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

double InteractionGraph::total_weight() const {
  double sum = 0.0;
  for (const auto& [edge, w] : edges) sum += w;
  return sum;
}

std::vector<Interaction> detect_interactions(const std::vector<Utterance>& utts) {
  std::vector<Interaction> out;
  for (std::size_t i = 0; i + 1 < utts.size(); ++i) {
    const auto from = speaker_name(utts[i].speaker);
    const auto to = speaker_name(utts[i + 1].speaker);
    if (from == to) continue;
    const double start = utts[i].start_s;
    const double end = utts[i + 1].end_s;
    out.push_back({from, to, start, end, end - start});
  }
  return out;
}

InteractionGraph build_ig(const std::vector<Interaction>& interactions, TimeInterval interval,
                          const std::vector<ParticipantId>& roster) {
  InteractionGraph g;
  g.interval = interval;
  g.nodes.insert(roster.begin(), roster.end());
  for (const auto& it : interactions) {
    if (!interval.contains(it.start_s)) continue;
    g.nodes.insert(it.speaker);
    g.nodes.insert(it.receiver);
    g.edges[{it.speaker, it.receiver}] += it.weight_s;
  }
  return g;
}

std::vector<InteractionGraph> build_ig_series(const std::vector<Interaction>& interactions,
                                              double recording_end_s, double interval_s,
                                              const std::vector<ParticipantId>& roster) {
  double last = recording_end_s;
  for (const auto& it : interactions) last = std::max(last, it.start_s + kEps);
  if (last <= 0.0) return {};
  const auto count = static_cast<std::size_t>(std::max(1.0, std::ceil(last / interval_s - 1e-9)));
  std::vector<InteractionGraph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const TimeInterval iv{static_cast<double>(k) * interval_s, static_cast<double>(k + 1) * interval_s};
    out.push_back(build_ig(interactions, iv, roster));
  }
  return out;
}

InteractionGraph build_whole_ig(const std::vector<Interaction>& interactions,
                                const std::vector<ParticipantId>& roster) {
  double end = 0.0;
  for (const auto& it : interactions) end = std::max(end, it.end_s);
  // Every interaction starts strictly before the latest end.
  return build_ig(interactions, {0.0, end}, roster);
}

int pct_floor(std::size_t count, std::size_t total) {
  if (total == 0) return 0;
  return static_cast<int>((100 * count) / total);
}

InterruptionStats stats_from_counts(std::size_t interactions, std::size_t interruptions,
                                    std::size_t adjusted) {
  return {interactions, interruptions, adjusted, pct_floor(interruptions, interactions),
          pct_floor(adjusted, interactions)};
}

InterruptionStats interruption_stats(const std::vector<Utterance>& utts, double resume_window_s) {
  std::size_t interactions = 0, interruptions = 0, adjusted = 0;
  for (std::size_t i = 1; i < utts.size(); ++i) {
    const auto prev = speaker_name(utts[i - 1].speaker);
    if (prev == speaker_name(utts[i].speaker)) continue;
    ++interactions;
    if (!(utts[i].start_s < utts[i - 1].end_s - kEps)) continue;
    ++interruptions;
    const double t = utts[i].start_s;
    bool resumed = false;
    for (std::size_t j = i + 1; j < utts.size() && utts[j].start_s <= t + resume_window_s + kEps; ++j) {
      if (speaker_name(utts[j].speaker) == prev && utts[j].start_s > t) {
        resumed = true;
        break;
      }
    }
    if (!resumed) ++adjusted;
  }
  return stats_from_counts(interactions, interruptions, adjusted);
}

DeltaIg delta_ig(const InteractionGraph& a, const InteractionGraph& b) {
  DeltaIg d;
  for (const auto& n : a.nodes) d.per_participant[n] = 0.0;
  for (const auto& n : b.nodes) d.per_participant[n] = 0.0;
  std::set<Edge> edges;
  for (const auto& [e, w] : a.edges) edges.insert(e);
  for (const auto& [e, w] : b.edges) edges.insert(e);
  for (const auto& e : edges) {
    const auto ia = a.edges.find(e);
    const auto ib = b.edges.find(e);
    const double wa = ia == a.edges.end() ? 0.0 : ia->second;
    const double wb = ib == b.edges.end() ? 0.0 : ib->second;
    const double diff = std::abs(wb - wa);
    d.total += diff;
    d.per_participant[e.first] += diff;
    d.per_participant[e.second] += diff;
  }
  return d;
}

std::string to_dot(const InteractionGraph& ig, const std::string& name) {
  std::string out = "digraph " + dot_id(name) + " {\n";
  for (const auto& n : ig.nodes) out += "  " + dot_id(n) + ";\n";
  for (const auto& [e, w] : ig.edges) {
    out += "  " + dot_id(e.first) + " -> " + dot_id(e.second) + " [label=\"" + csv::fixed(w, 1) + "\"];\n";
  }
  out += "}\n";
  return out;
}

std::string to_json(const InteractionGraph& ig) {
  nlohmann::ordered_json j;
  j["interval"] = {round3(ig.interval.start_s), round3(ig.interval.end_s)};
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& n : ig.nodes) j["nodes"].push_back(n);
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [e, w] : ig.edges) {
    nlohmann::ordered_json edge;
    edge["from"] = e.first;
    edge["to"] = e.second;
    edge["weight_s"] = round3(w);
    j["edges"].push_back(std::move(edge));
  }
  return j.dump(2) + "\n";
}

std::string interruption_csv(const std::string& recording, const InterruptionStats& s) {
  std::string out = csv::format_row({"video", "interactions", "interruptions", "adjusted_interruptions",
                                     "interruption_pct", "adjusted_interruption_pct"});
  out += csv::format_row({recording, std::to_string(s.interactions), std::to_string(s.interruptions),
                          std::to_string(s.adjusted_interruptions), std::to_string(s.pct),
                          std::to_string(s.adjusted_pct)});
  return out;
}

}  // namespace dialogic::interact
