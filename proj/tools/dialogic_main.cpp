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


#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "dialogic/error.hpp"
#include "dialogic/report.hpp"

namespace {

using dialogic::report::Stage;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<double> interval_s;
  std::optional<double> trim_s;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "Run configuration (JSON)")->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "Clustering seed");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--interval-s", o.interval_s, "Chart and state window length in seconds");
  cmd->add_option("--trim-s", o.trim_s, "Seconds dropped from the start before transcription");
}

int execute(const Overrides& o, const std::set<Stage>& stages) {
  auto cfg = dialogic::report::load_config(o.config);
  if (o.seed) cfg.seed = *o.seed;
  if (o.out) cfg.output_dir = *o.out;
  if (o.interval_s) cfg.interval_s = *o.interval_s;
  if (o.trim_s) cfg.trim_s = *o.trim_s;
  dialogic::report::validate(cfg);
  const auto manifest = dialogic::report::run_pipeline(cfg, stages);
  for (const auto& s : manifest.stages) {
    std::cout << to_string(s.stage) << ": " << to_string(s.status);
    if (!s.reason.empty()) std::cout << " (" << s.reason << ")";
    std::cout << "\n";
  }
  std::cout << "output: " << dialogic::report::recording_dir(cfg).string() << "\n";
  return manifest.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dialogic: team conversation analysis pipeline"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    std::set<Stage> stages;
  };
  const std::vector<Command> commands = {
      {"run", "Run every stage", dialogic::report::all_stages()},
      {"diarize", "Features, clustering, smoothing and roster assignment",
       {Stage::kFeatures, Stage::kDiarize, Stage::kSmooth, Stage::kRoster}},
      {"interact", "Interaction graphs and interruption statistics", {Stage::kInteract}},
      {"emotions", "Emotion timeline and deviation counts", {Stage::kEmotion}},
      {"transcript", "Transcript assembly and words per minute", {Stage::kTranscript}},
      {"clauses", "Clause extraction", {Stage::kClauses}},
      {"hypothesize", "Team states, events and hypotheses", {Stage::kHypothesize}},
      {"report", "Speaker and emotion charts", {Stage::kReports}},
  };
  std::vector<Overrides> overrides(commands.size());
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(commands[i].name, commands[i].help);
    add_common(sub, overrides[i]);
    subs.push_back(sub);
  }
  CLI11_PARSE(app, argc, argv);

  try {
    for (std::size_t i = 0; i < commands.size(); ++i)
      if (subs[i]->parsed()) return execute(overrides[i], commands[i].stages);
  } catch (const dialogic::Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
