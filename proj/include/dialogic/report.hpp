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


#ifndef DIALOGIC_REPORT_HPP_
#define DIALOGIC_REPORT_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dialogic/diarize.hpp"
#include "dialogic/emotion.hpp"
#include "dialogic/hypothesize.hpp"
#include "dialogic/types.hpp"

namespace dialogic::report {

// ---- charts

struct ChartGeometry {
  double width = 800.0;
  double left = 90.0;  // lane labels live here
  double right = 20.0;
  double top = 30.0;
  double lane_height = 28.0;
  double bottom = 30.0;

  double plot_width() const { return width - left - right; }
};

std::string_view emotion_color(EmotionLabel label);

std::string xml_escape(std::string_view text);

std::string speaker_chart_svg(const diarize::ChartInterval& interval, const std::vector<ParticipantId>& lanes,
                              const ChartGeometry& g = {});

std::string emotion_chart_svg(const emotion::EmotionTimeline& timeline, TimeInterval interval,
                              const std::vector<ParticipantId>& lanes, const ChartGeometry& g = {});

// ---- configuration

struct InputPaths {
  std::filesystem::path audio;
  std::filesystem::path embeddings;
  std::filesystem::path emotions;
  std::filesystem::path texts;
  std::filesystem::path annotations;
  std::filesystem::path roster;
};

struct RunConfig {
  std::string recording_id = "recording";
  std::string team_id;  // defaults to recording_id
  InputPaths inputs;    // resolved; empty path = not supplied
  nlohmann::ordered_json raw_inputs = nlohmann::ordered_json::object();  // as written
  std::size_t speakers = 0;  // 0 = roster size
  std::uint64_t seed = 0;
  double interval_s = 120.0;
  double trim_s = 30.0;
  EmotionLabel fallback = EmotionLabel::kSad;
  hypothesize::Thresholds thresholds;
  std::filesystem::path output_dir = "out";
};

// Relative paths resolve against base_dir. Validates every invariant.
RunConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);
void validate(const RunConfig& cfg);

// Snapshot written into the manifest; omits the output directory.
nlohmann::ordered_json config_snapshot(const RunConfig& cfg);

// ---- pipeline

enum class Stage { kFeatures, kDiarize, kSmooth, kRoster, kInteract, kEmotion, kTranscript, kClauses, kHypothesize, kReports };
inline constexpr std::size_t kStageCount = 10;
std::string_view to_string(Stage s);

enum class StageStatus { kOk, kSkipped, kFailed, kNotRequested };
std::string_view to_string(StageStatus s);

struct StageRecord {
  Stage stage = Stage::kFeatures;
  StageStatus status = StageStatus::kNotRequested;
  std::string reason;
  std::vector<std::string> outputs;  // relative to the recording directory
  double seconds = 0.0;              // wall clock, written to timings.json only
};

struct FileEntry {
  std::string path;
  std::string sha256;
  std::uintmax_t bytes = 0;
};

struct RunManifest {
  nlohmann::ordered_json config;
  std::vector<std::pair<std::string, std::string>> input_digests;  // name, sha256
  std::vector<StageRecord> stages;
  std::vector<FileEntry> files;

  bool ok() const;  // no requested stage failed
};

inline constexpr std::string_view kManifestFile = "manifest.json";
inline constexpr std::string_view kTimingsFile = "timings.json";

std::set<Stage> all_stages();

// Stages outside `requested` are not written; diarization output is then read
// from the recording directory and lighter branches are recomputed in memory.
RunManifest run_pipeline(const RunConfig& cfg, const std::set<Stage>& requested = all_stages());

std::filesystem::path recording_dir(const RunConfig& cfg);

std::string manifest_json(const RunManifest& m);

}  // namespace dialogic::report

#endif  // DIALOGIC_REPORT_HPP_
