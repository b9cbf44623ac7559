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
#include <chrono>
#include <cmath>
#include <functional>
#include <map>

#include "dialogic/clauses.hpp"
#include "dialogic/error.hpp"
#include "dialogic/featureio.hpp"
#include "dialogic/interact.hpp"
#include "dialogic/io.hpp"
#include "dialogic/report.hpp"
#include "dialogic/text.hpp"

namespace dialogic::report {
namespace {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::string index_name(const std::string& prefix, std::size_t k, const std::string& ext) {
  std::string n = std::to_string(k);
  if (n.size() < 3) n.insert(0, 3 - n.size(), '0');
  return prefix + "_" + n + ext;
}

struct Blocked {
  std::string reason;
  bool failure = false;
};

class Runner {
 public:
  Runner(const RunConfig& cfg, const std::set<Stage>& requested)
      : cfg_(cfg), requested_(requested), dir_(recording_dir(cfg)) {}

  RunManifest run();

 private:
  using Body = std::function<std::optional<Blocked>()>;

  void stage(Stage s, const Body& body);
  void write(const std::string& rel, std::string_view contents);
  std::optional<Blocked> need_utterances() const;

  void load_inputs();
  void diarization();
  void branches();
  void hypothesize_stage();
  void reports_stage();
  void finish();

  const RunConfig& cfg_;
  std::set<Stage> requested_;
  fs::path dir_;
  RunManifest manifest_;
  std::map<Stage, StageStatus> status_;
  Stage current_ = Stage::kFeatures;

  std::vector<ParticipantId> roster_;
  std::vector<Utterance> raw_;
  std::optional<std::vector<Utterance>> utts_;
  std::vector<ParticipantId> lanes_;
  double recording_end_ = 0.0;
  std::optional<std::vector<interact::Interaction>> interactions_;
  std::vector<interact::InteractionGraph> ig_series_;
  std::optional<emotion::EmotionTimeline> timeline_;
  std::optional<std::vector<Utterance>> trimmed_;
  std::optional<text::Transcript> transcript_;
  std::optional<std::vector<clauses::ClauseRecord>> records_;
};

void Runner::stage(Stage s, const Body& body) {
  StageRecord rec;
  rec.stage = s;
  current_ = s;
  manifest_.stages.push_back(rec);
  const auto t0 = std::chrono::steady_clock::now();
  StageStatus st = StageStatus::kOk;
  std::string reason;
  try {
    if (auto b = body()) {
      st = b->failure ? StageStatus::kFailed : StageStatus::kSkipped;
      reason = b->reason;
    }
  } catch (const Error& e) {
    st = StageStatus::kFailed;
    reason = std::string(to_string(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    st = StageStatus::kFailed;
    reason = e.what();
  }
  auto& back = manifest_.stages.back();
  status_[s] = st;
  back.status = requested_.count(s) || st == StageStatus::kFailed ? st : StageStatus::kNotRequested;
  back.reason = reason;
  back.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void Runner::write(const std::string& rel, std::string_view contents) {
  if (!requested_.count(current_)) return;
  write_file_atomic(dir_ / rel, contents);
  manifest_.stages.back().outputs.push_back(rel);
}

std::optional<Blocked> Runner::need_utterances() const {
  if (utts_) return std::nullopt;
  for (auto s : {Stage::kDiarize, Stage::kSmooth, Stage::kRoster}) {
    const auto it = status_.find(s);
    if (it != status_.end() && it->second == StageStatus::kFailed)
      return Blocked{"upstream stage " + std::string(to_string(s)) + " failed", true};
  }
  return Blocked{"no utterances available", false};
}

void Runner::load_inputs() {
  if (!cfg_.inputs.roster.empty()) roster_ = diarize::Roster(featureio::read_roster(cfg_.inputs.roster)).ids();
  const std::pair<const char*, const fs::path*> inputs[] = {
      {"audio", &cfg_.inputs.audio},         {"embeddings", &cfg_.inputs.embeddings},
      {"emotions", &cfg_.inputs.emotions},   {"texts", &cfg_.inputs.texts},
      {"annotations", &cfg_.inputs.annotations}, {"roster", &cfg_.inputs.roster}};
  for (const auto& [name, path] : inputs)
    if (!path->empty()) manifest_.input_digests.emplace_back(name, sha256_hex(read_text_file(*path)));
}

void Runner::diarization() {
  const bool run_diar = requested_.count(Stage::kFeatures) || requested_.count(Stage::kDiarize) ||
                        requested_.count(Stage::kSmooth) || requested_.count(Stage::kRoster);
  if (!run_diar) {
    const auto path = dir_ / "utterances.csv";
    if (fs::exists(path)) utts_ = featureio::read_utterances(path);
  } else {
    std::optional<std::size_t> windows;
    stage(Stage::kFeatures, [&]() -> std::optional<Blocked> {
      if (cfg_.inputs.audio.empty()) return Blocked{"no audio input"};
      const auto audio = featureio::load_wav(cfg_.inputs.audio);
      const auto feats = featureio::feature_windows(audio, featureio::MelMode::kDiar);
      windows = feats.size();
      return std::nullopt;
    });
    stage(Stage::kDiarize, [&]() -> std::optional<Blocked> {
      if (cfg_.inputs.embeddings.empty()) return Blocked{"no embeddings input"};
      const auto rows = featureio::read_embeddings(cfg_.inputs.embeddings);
      if (windows && *windows != rows.size())
        throw Error(ErrorCode::kAlignmentError, std::to_string(rows.size()) + " embedding rows for " +
                                                    std::to_string(*windows) + " feature windows");
      const std::size_t m = cfg_.speakers ? cfg_.speakers : roster_.size();
      std::vector<featureio::EmbeddingVector> vecs;
      std::vector<double> starts;
      for (const auto& r : rows) {
        vecs.push_back(r.components);
        starts.push_back(r.start_s);
      }
      const auto labels = diarize::spectral_cluster(diarize::affinity(vecs), m, cfg_.seed);
      raw_ = diarize::labels_to_utterances(labels, starts);
      return std::nullopt;
    });
    stage(Stage::kSmooth, [&]() -> std::optional<Blocked> {
      if (status_[Stage::kDiarize] != StageStatus::kOk)
        return Blocked{"diarize did not run", status_[Stage::kDiarize] == StageStatus::kFailed};
      raw_ = diarize::temporal_smooth(std::move(raw_));
      return std::nullopt;
    });
    stage(Stage::kRoster, [&]() -> std::optional<Blocked> {
      if (status_[Stage::kSmooth] != StageStatus::kOk)
        return Blocked{"smooth did not run", status_[Stage::kSmooth] == StageStatus::kFailed};
      auto out = roster_.empty() ? raw_ : diarize::assign_roster(raw_, diarize::Roster(roster_));
      diarize::sort_utterances(out);
      write("utterances.csv", featureio::format_utterances(out));
      utts_ = std::move(out);
      return std::nullopt;
    });
  }
  if (utts_) {
    lanes_ = roster_;
    std::set<ParticipantId> names;
    for (const auto& u : *utts_) {
      names.insert(speaker_name(u.speaker));
      recording_end_ = std::max(recording_end_, u.end_s);
    }
    for (const auto& n : names)
      if (std::find(lanes_.begin(), lanes_.end(), n) == lanes_.end()) lanes_.push_back(n);
  }
}

void Runner::branches() {
  stage(Stage::kInteract, [&]() -> std::optional<Blocked> {
    if (auto b = need_utterances()) return b;
    interactions_ = interact::detect_interactions(*utts_);
    ig_series_ = interact::build_ig_series(*interactions_, recording_end_, cfg_.interval_s, lanes_);
    for (std::size_t k = 0; k < ig_series_.size(); ++k) {
      write("ig/" + index_name("interval", k, ".dot"), interact::to_dot(ig_series_[k]));
      write("ig/" + index_name("interval", k, ".json"), interact::to_json(ig_series_[k]));
    }
    const auto whole = interact::build_whole_ig(*interactions_, lanes_);
    write("ig/whole.dot", interact::to_dot(whole));
    write("ig/whole.json", interact::to_json(whole));
    write("interruptions.csv", interact::interruption_csv(cfg_.recording_id, interact::interruption_stats(*utts_)));
    return std::nullopt;
  });
  stage(Stage::kEmotion, [&]() -> std::optional<Blocked> {
    if (auto b = need_utterances()) return b;
    if (cfg_.inputs.emotions.empty()) return Blocked{"no emotions input"};
    const auto labels = emotion::align_provider_labels(*utts_, featureio::read_emotions(cfg_.inputs.emotions));
    timeline_ = emotion::build_timeline(*utts_, labels);
    write("emotions.csv", emotion::timeline_csv(*timeline_));
    std::vector<emotion::DeviationReport> reports;
    for (const auto& ci : diarize::chart_intervals(*utts_, cfg_.interval_s))
      reports.push_back(emotion::count_deviations(*timeline_, cfg_.fallback, ci.interval));
    write("deviations.csv", emotion::deviation_csv(reports));
    return std::nullopt;
  });
  stage(Stage::kTranscript, [&]() -> std::optional<Blocked> {
    if (auto b = need_utterances()) return b;
    if (cfg_.inputs.texts.empty()) return Blocked{"no texts input"};
    trimmed_ = text::privacy_trim(*utts_, cfg_.trim_s);
    transcript_ = text::assemble_transcript(*trimmed_, featureio::read_texts(cfg_.inputs.texts, trimmed_->size()));
    write("transcript.csv", text::transcript_csv(*transcript_));
    write("transcript_ext.csv", text::transcript_extended_csv(*transcript_));
    write("wpm.csv", text::wpm_csv(cfg_.recording_id, text::avg_wpm(transcript_->entries)));
    return std::nullopt;
  });
  stage(Stage::kClauses, [&]() -> std::optional<Blocked> {
    if (cfg_.inputs.annotations.empty()) return Blocked{"no annotations input"};
    records_ = clauses::run_clauses(featureio::read_annotations(cfg_.inputs.annotations));
    write("clauses.jsonl", clauses::clause_jsonl(*records_));
    if (trimmed_) write("clause_stats.csv", clauses::clause_stats_csv(clauses::clause_stats(*records_, *trimmed_, cfg_.interval_s)));
    return std::nullopt;
  });
}

void Runner::hypothesize_stage() {
  stage(Stage::kHypothesize, [&]() -> std::optional<Blocked> {
    if (auto b = need_utterances()) return b;
    const auto intervals = diarize::chart_intervals(*utts_, cfg_.interval_s);
    std::map<std::size_t, std::vector<clauses::ClauseRecord>> by_utt;
    if (records_)
      for (const auto& r : *records_) by_utt[r.sentence.utt_index].push_back(r);

    std::vector<hypothesize::WindowData> windows;
    for (const auto& ci : intervals) {
      hypothesize::WindowData w;
      w.window = ci.interval;
      w.roster = lanes_;
      if (transcript_) {
        for (const auto& e : transcript_->entries) {
          if (!w.window.contains(e.start_s)) continue;
          hypothesize::Turn t{e.speaker, e.word_count, {}};
          if (const auto it = by_utt.find(e.utt_index); it != by_utt.end()) t.records = it->second;
          w.turns.push_back(std::move(t));
        }
      } else {
        for (const auto& u : *utts_)
          if (w.window.contains(u.start_s)) w.turns.push_back({speaker_name(u.speaker), 0, {}});
      }
      if (timeline_)
        for (const auto& [id, entries] : timeline_->by_speaker)
          for (const auto& e : entries)
            if (w.window.contains(e.second_start_s)) w.emotions.push_back(e.label);
      windows.push_back(std::move(w));
    }
    const auto states = hypothesize::state_series(windows);
    auto segments = hypothesize::segments_from_events(hypothesize::detect_events(cfg_.team_id, states, cfg_.thresholds.tau));
    if (interactions_)
      for (auto& s : segments) s.ig = interact::build_ig(*interactions_, {s.start.time_s, s.end.time_s}, lanes_);
    const auto sets = hypothesize::extract_all(segments, cfg_.thresholds);
    std::vector<hypothesize::DeltaVerdict> verdicts;
    if (timeline_ && interactions_ && ig_series_.size() >= 2) {
      std::vector<TimeInterval> ivs;
      for (const auto& g : ig_series_) ivs.push_back(g.interval);
      verdicts = hypothesize::check_delta_hypothesis(ig_series_, *timeline_, ivs, cfg_.fallback);
    }
    write("hypotheses.json", hypothesize::hypotheses_json(sets, verdicts));
    write("clusters.json",
          hypothesize::clusters_json(segments, hypothesize::cluster_segments(segments, cfg_.thresholds.cluster)));
    return std::nullopt;
  });
}

void Runner::reports_stage() {
  stage(Stage::kReports, [&]() -> std::optional<Blocked> {
    if (auto b = need_utterances()) return b;
    const auto intervals = diarize::chart_intervals(*utts_, cfg_.interval_s);
    for (std::size_t k = 0; k < intervals.size(); ++k) {
      write("charts/" + index_name("speakers", k, ".svg"), speaker_chart_svg(intervals[k], lanes_));
      if (timeline_)
        write("charts/" + index_name("emotions", k, ".svg"),
              emotion_chart_svg(*timeline_, intervals[k].interval, lanes_));
    }
    return std::nullopt;
  });
}

void Runner::finish() {
  ojson t;
  t["stages"] = ojson::array();
  for (const auto& s : manifest_.stages) {
    ojson e;
    e["name"] = std::string(to_string(s.stage));
    e["seconds"] = s.seconds;
    t["stages"].push_back(std::move(e));
  }
  write_file_atomic(dir_ / kTimingsFile, t.dump(2) + "\n");

  std::vector<fs::path> paths;
  for (const auto& entry : fs::recursive_directory_iterator(dir_))
    if (entry.is_regular_file()) paths.push_back(fs::relative(entry.path(), dir_));
  std::sort(paths.begin(), paths.end(), [](const fs::path& a, const fs::path& b) {
    return a.generic_string() < b.generic_string();
  });
  for (const auto& p : paths) {
    const auto rel = p.generic_string();
    if (rel == kManifestFile) continue;
    FileEntry f;
    f.path = rel;
    f.bytes = fs::file_size(dir_ / p);
    if (rel != kTimingsFile) f.sha256 = sha256_hex(read_text_file(dir_ / p));
    manifest_.files.push_back(std::move(f));
  }
  write_file_atomic(dir_ / kManifestFile, manifest_json(manifest_));
}

RunManifest Runner::run() {
  manifest_.config = config_snapshot(cfg_);
  fs::create_directories(dir_);
  load_inputs();
  diarization();
  branches();
  hypothesize_stage();
  reports_stage();
  finish();
  return manifest_;
}

}  // namespace

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::kFeatures: return "features";
    case Stage::kDiarize: return "diarize";
    case Stage::kSmooth: return "smooth";
    case Stage::kRoster: return "roster";
    case Stage::kInteract: return "interact";
    case Stage::kEmotion: return "emotion";
    case Stage::kTranscript: return "transcript";
    case Stage::kClauses: return "clauses";
    case Stage::kHypothesize: return "hypothesize";
    case Stage::kReports: return "reports";
  }
  return "unknown";
}

std::string_view to_string(StageStatus s) {
  switch (s) {
    case StageStatus::kOk: return "OK";
    case StageStatus::kSkipped: return "SKIPPED";
    case StageStatus::kFailed: return "FAILED";
    case StageStatus::kNotRequested: return "NOT_REQUESTED";
  }
  return "UNKNOWN";
}

bool RunManifest::ok() const {
  return std::none_of(stages.begin(), stages.end(),
                      [](const StageRecord& s) { return s.status == StageStatus::kFailed; });
}

std::set<Stage> all_stages() {
  std::set<Stage> s;
  for (std::size_t k = 0; k < kStageCount; ++k) s.insert(static_cast<Stage>(k));
  return s;
}

std::filesystem::path recording_dir(const RunConfig& cfg) { return cfg.output_dir / cfg.recording_id; }

RunManifest run_pipeline(const RunConfig& cfg, const std::set<Stage>& requested) {
  validate(cfg);
  return Runner(cfg, requested).run();
}

std::string manifest_json(const RunManifest& m) {
  ojson j;
  j["config"] = m.config;
  j["inputs"] = ojson::array();
  for (const auto& [name, digest] : m.input_digests) j["inputs"].push_back({{"name", name}, {"sha256", digest}});
  j["stages"] = ojson::array();
  for (const auto& s : m.stages) {
    ojson e;
    e["name"] = std::string(to_string(s.stage));
    e["status"] = std::string(to_string(s.status));
    e["reason"] = s.reason;
    e["outputs"] = s.outputs;
    j["stages"].push_back(std::move(e));
  }
  j["files"] = ojson::array();
  for (const auto& f : m.files) {
    ojson e;
    e["path"] = f.path;
    if (f.sha256.empty()) {
      e["volatile"] = true;
    } else {
      e["bytes"] = f.bytes;
      e["sha256"] = f.sha256;
    }
    j["files"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

}  // namespace dialogic::report
