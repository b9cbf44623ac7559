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

#include "dialogic/io.hpp"
#include "dialogic/report.hpp"

namespace dialogic::report {
namespace {

std::string num(double v) { return csv::fixed(v, 2); }

std::vector<ParticipantId> lane_order(const std::vector<ParticipantId>& lanes, const std::set<ParticipantId>& seen) {
  std::vector<ParticipantId> out = lanes;
  for (const auto& id : seen)
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
  return out;
}

struct Frame {
  std::string body;
  double height = 0.0;
};

// Background, title, lane labels and guides, and the time axis.
Frame frame(const std::string& title, TimeInterval interval, const std::vector<ParticipantId>& lanes,
            const ChartGeometry& g, double extra_bottom) {
  Frame f;
  const double plot_h = g.lane_height * static_cast<double>(lanes.size());
  const double axis_y = g.top + plot_h;
  f.height = axis_y + g.bottom + extra_bottom;
  f.body += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(g.width) + "\" height=\"" + num(f.height) +
            "\" viewBox=\"0 0 " + num(g.width) + " " + num(f.height) + "\">\n";
  f.body += "  <rect x=\"0\" y=\"0\" width=\"" + num(g.width) + "\" height=\"" + num(f.height) + "\" fill=\"#ffffff\"/>\n";
  f.body += "  <text x=\"" + num(g.left) + "\" y=\"" + num(g.top - 10.0) + "\" font-family=\"sans-serif\" font-size=\"12\">" +
            xml_escape(title) + "</text>\n";
  for (std::size_t i = 0; i < lanes.size(); ++i) {
    const double y = g.top + g.lane_height * static_cast<double>(i);
    f.body += "  <text x=\"" + num(g.left - 6.0) + "\" y=\"" + num(y + g.lane_height / 2.0 + 4.0) +
              "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(lanes[i]) + "</text>\n";
    f.body += "  <line x1=\"" + num(g.left) + "\" y1=\"" + num(y + g.lane_height) + "\" x2=\"" +
              num(g.left + g.plot_width()) + "\" y2=\"" + num(y + g.lane_height) + "\" stroke=\"#dddddd\"/>\n";
  }
  f.body += "  <line x1=\"" + num(g.left) + "\" y1=\"" + num(axis_y) + "\" x2=\"" + num(g.left + g.plot_width()) +
            "\" y2=\"" + num(axis_y) + "\" stroke=\"#000000\"/>\n";
  f.body += "  <line x1=\"" + num(g.left) + "\" y1=\"" + num(g.top) + "\" x2=\"" + num(g.left) + "\" y2=\"" +
            num(axis_y) + "\" stroke=\"#000000\"/>\n";
  const double len = interval.end_s - interval.start_s;
  constexpr int kTicks = 6;
  for (int k = 0; k <= kTicks; ++k) {
    const double x = g.left + g.plot_width() * k / kTicks;
    f.body += "  <line x1=\"" + num(x) + "\" y1=\"" + num(axis_y) + "\" x2=\"" + num(x) + "\" y2=\"" +
              num(axis_y + 4.0) + "\" stroke=\"#000000\"/>\n";
    f.body += "  <text x=\"" + num(x) + "\" y=\"" + num(axis_y + 16.0) +
              "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
              csv::fixed(interval.start_s + len * k / kTicks, 0) + "</text>\n";
  }
  return f;
}

}  // namespace

std::string_view emotion_color(EmotionLabel label) {
  switch (label) {
    case EmotionLabel::kNeutral: return "#9e9e9e";
    case EmotionLabel::kAnger: return "#d62728";
    case EmotionLabel::kBoredom: return "#8c564b";
    case EmotionLabel::kDisgust: return "#2ca02c";
    case EmotionLabel::kFear: return "#9467bd";
    case EmotionLabel::kHappy: return "#ffbf00";
    case EmotionLabel::kSad: return "#1f77b4";
  }
  return "#000000";
}

std::string xml_escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string speaker_chart_svg(const diarize::ChartInterval& interval, const std::vector<ParticipantId>& lanes,
                              const ChartGeometry& g) {
  std::set<ParticipantId> seen;
  for (const auto& [id, utts] : interval.by_speaker) seen.insert(id);
  const auto order = lane_order(lanes, seen);
  const auto& iv = interval.interval;
  auto f = frame("Speakers " + csv::fixed(iv.start_s, 0) + "-" + csv::fixed(iv.end_s, 0) + " s", iv, order, g, 0.0);
  const double len = iv.end_s - iv.start_s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto it = interval.by_speaker.find(order[i]);
    if (it == interval.by_speaker.end()) continue;
    const double y = g.top + g.lane_height * static_cast<double>(i) + 4.0;
    for (const auto& u : it->second) {
      const double x = g.left + (u.start_s - iv.start_s) / len * g.plot_width();
      const double w = u.duration() / len * g.plot_width();
      f.body += "  <rect class=\"utt\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" +
                num(g.lane_height - 8.0) + "\" fill=\"#4477aa\"/>\n";
    }
  }
  f.body += "</svg>\n";
  return f.body;
}

std::string emotion_chart_svg(const emotion::EmotionTimeline& timeline, TimeInterval interval,
                              const std::vector<ParticipantId>& lanes, const ChartGeometry& g) {
  std::set<ParticipantId> seen;
  for (const auto& [id, entries] : timeline.by_speaker)
    for (const auto& e : entries)
      if (interval.contains(e.second_start_s)) seen.insert(id);
  const auto order = lane_order(lanes, seen);
  constexpr double kLegend = 24.0;
  auto f = frame("Emotions " + csv::fixed(interval.start_s, 0) + "-" + csv::fixed(interval.end_s, 0) + " s", interval,
                 order, g, kLegend);
  const double len = interval.end_s - interval.start_s;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto it = timeline.by_speaker.find(order[i]);
    if (it == timeline.by_speaker.end()) continue;
    const double y = g.top + g.lane_height * static_cast<double>(i) + 4.0;
    for (const auto& e : it->second) {
      if (!interval.contains(e.second_start_s)) continue;
      const double x = g.left + (e.second_start_s - interval.start_s) / len * g.plot_width();
      const double w = std::min(1.0, interval.end_s - e.second_start_s) / len * g.plot_width();
      f.body += "  <rect class=\"cell\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" + num(w) + "\" height=\"" +
                num(g.lane_height - 8.0) + "\" fill=\"" + std::string(emotion_color(e.label)) + "\"/>\n";
    }
  }
  const double ly = f.height - kLegend + 4.0;
  double lx = g.left;
  for (auto label : kAllEmotions) {
    f.body += "  <rect class=\"legend\" x=\"" + num(lx) + "\" y=\"" + num(ly) + "\" width=\"10\" height=\"10\" fill=\"" +
              std::string(emotion_color(label)) + "\"/>\n";
    f.body += "  <text x=\"" + num(lx + 14.0) + "\" y=\"" + num(ly + 9.0) +
              "\" font-family=\"sans-serif\" font-size=\"10\">" + std::string(to_string(label)) + "</text>\n";
    lx += 80.0;
  }
  f.body += "</svg>\n";
  return f.body;
}

}  // namespace dialogic::report
