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


#include <set>

#include "dialogic/error.hpp"
#include "dialogic/io.hpp"
#include "dialogic/report.hpp"

namespace dialogic::report {
namespace {

using ojson = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::kConfigError, "config: " + msg); }

void reject_unknown(const ojson& j, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) fail("unknown key '" + k + "' in " + where);
}

double number(const ojson& j, const char* key, double dflt) {
  if (!j.contains(key)) return dflt;
  if (!j[key].is_number()) fail(std::string(key) + " must be a number");
  return j[key].get<double>();
}

}  // namespace

RunConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  ojson j;
  try {
    j = ojson::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");
  reject_unknown(j,
                 {"recording_id", "team_id", "inputs", "speakers", "seed", "interval_s", "trim_s", "fallback_emotion",
                  "thresholds", "output_dir"},
                 "config");
  RunConfig cfg;
  if (j.contains("recording_id")) {
    if (!j["recording_id"].is_string()) fail("recording_id must be a string");
    cfg.recording_id = j["recording_id"].get<std::string>();
  }
  cfg.team_id = j.contains("team_id") && j["team_id"].is_string() ? j["team_id"].get<std::string>() : cfg.recording_id;

  if (j.contains("inputs")) {
    const auto& in = j["inputs"];
    if (!in.is_object()) fail("inputs must be an object");
    reject_unknown(in, {"audio", "embeddings", "emotions", "texts", "annotations", "roster"}, "inputs");
    const auto path = [&](const char* key, std::filesystem::path& out) {
      if (!in.contains(key)) return;
      if (!in[key].is_string()) fail(std::string("inputs.") + key + " must be a string");
      const std::filesystem::path p = in[key].get<std::string>();
      out = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
      cfg.raw_inputs[key] = in[key];
    };
    path("audio", cfg.inputs.audio);
    path("embeddings", cfg.inputs.embeddings);
    path("emotions", cfg.inputs.emotions);
    path("texts", cfg.inputs.texts);
    path("annotations", cfg.inputs.annotations);
    path("roster", cfg.inputs.roster);
  }
  if (j.contains("speakers")) {
    if (!j["speakers"].is_number_integer() || j["speakers"].get<long long>() < 1) fail("speakers must be an integer >= 1");
    cfg.speakers = j["speakers"].get<std::size_t>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) fail("seed must be a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  cfg.interval_s = number(j, "interval_s", cfg.interval_s);
  cfg.trim_s = number(j, "trim_s", cfg.trim_s);
  if (j.contains("fallback_emotion")) {
    const auto label = j["fallback_emotion"].is_string() ? parse_emotion(j["fallback_emotion"].get<std::string>())
                                                         : std::nullopt;
    if (!label) fail("fallback_emotion must be one of the seven labels");
    cfg.fallback = *label;
  }
  if (j.contains("thresholds")) {
    const auto& t = j["thresholds"];
    if (!t.is_object()) fail("thresholds must be an object");
    reject_unknown(t, {"sim", "dsim", "tau", "cluster", "include_self_pairs"}, "thresholds");
    cfg.thresholds.sim = number(t, "sim", cfg.thresholds.sim);
    cfg.thresholds.dsim = number(t, "dsim", cfg.thresholds.dsim);
    cfg.thresholds.tau = number(t, "tau", cfg.thresholds.tau);
    cfg.thresholds.cluster = number(t, "cluster", cfg.thresholds.cluster);
    if (t.contains("include_self_pairs")) {
      if (!t["include_self_pairs"].is_boolean()) fail("include_self_pairs must be a boolean");
      cfg.thresholds.include_self_pairs = t["include_self_pairs"].get<bool>();
    }
  }
  if (j.contains("output_dir")) {
    if (!j["output_dir"].is_string()) fail("output_dir must be a string");
    const std::filesystem::path p = j["output_dir"].get<std::string>();
    cfg.output_dir = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
  } else if (!base_dir.empty()) {
    cfg.output_dir = base_dir / cfg.output_dir;
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_text_file(path), path.parent_path());
}

void validate(const RunConfig& cfg) {
  if (cfg.recording_id.empty() || cfg.recording_id.find_first_of("/\\") != std::string::npos ||
      cfg.recording_id == "." || cfg.recording_id == "..")
    fail("recording_id must be a plain directory name");
  if (!(cfg.interval_s > 0.0)) fail("interval_s must be > 0");
  if (!(cfg.trim_s >= 0.0)) fail("trim_s must be >= 0");
  const auto& t = cfg.thresholds;
  if (!(t.sim > 0.0 && t.sim < 1.0)) fail("thresholds.sim must lie in (0,1)");
  if (!(t.dsim > 0.0 && t.dsim < 1.0)) fail("thresholds.dsim must lie in (0,1)");
  if (!(t.dsim < t.sim)) fail("thresholds.dsim must be below thresholds.sim");
  if (!(t.tau > 0.0 && t.tau <= 1.0)) fail("thresholds.tau must lie in (0,1]");
  if (!(t.cluster > 0.0 && t.cluster < 1.0)) fail("thresholds.cluster must lie in (0,1)");
  if (cfg.speakers == 0 && cfg.inputs.roster.empty() && !cfg.inputs.embeddings.empty())
    fail("speakers must be given when no roster is supplied");
  for (const auto* p : {&cfg.inputs.audio, &cfg.inputs.embeddings, &cfg.inputs.emotions, &cfg.inputs.texts,
                        &cfg.inputs.annotations, &cfg.inputs.roster}) {
    if (!p->empty() && !std::filesystem::exists(*p)) fail("input not found: " + p->string());
  }
}

nlohmann::ordered_json config_snapshot(const RunConfig& cfg) {
  ojson j;
  j["recording_id"] = cfg.recording_id;
  j["team_id"] = cfg.team_id;
  j["inputs"] = cfg.raw_inputs;
  j["speakers"] = cfg.speakers;
  j["seed"] = cfg.seed;
  j["interval_s"] = cfg.interval_s;
  j["trim_s"] = cfg.trim_s;
  j["fallback_emotion"] = std::string(to_string(cfg.fallback));
  j["thresholds"] = {{"sim", cfg.thresholds.sim},
                     {"dsim", cfg.thresholds.dsim},
                     {"tau", cfg.thresholds.tau},
                     {"cluster", cfg.thresholds.cluster},
                     {"include_self_pairs", cfg.thresholds.include_self_pairs}};
  return j;
}

}  // namespace dialogic::report
