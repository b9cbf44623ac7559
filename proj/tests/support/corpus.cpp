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


#include "corpus.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "dialogic/diarize.hpp"
#include "dialogic/emotion.hpp"
#include "dialogic/io.hpp"
#include "dialogic/text.hpp"

namespace corpus {
namespace {

namespace fio = dialogic::featureio;

// word/POS or word/POS/CATEGORY, space separated.
const std::vector<std::string> kTemplates = {
    "We/NOUN/PERSON need/VERB a/OTHER cheaper/ADJ design/NOUN for/OTHER the/OTHER bridge/NOUN ./OTHER",
    "The/OTHER budget/NOUN limits/VERB the/OTHER material/NOUN choice/NOUN ./OTHER",
    "I/NOUN/PERSON think/VERB steel/NOUN works/VERB better/ADV than/OTHER wood/NOUN ./OTHER",
    "You/NOUN/PERSON should/OTHER check/VERB the/OTHER sensor/NOUN readings/NOUN ./OTHER",
    "They/NOUN/PERSON want/VERB the/OTHER prototype/NOUN by/OTHER Friday/NOUN/DATE ./OTHER",
    "The/OTHER deadline/NOUN moved/VERB again/ADV ./OTHER",
    "Our/OTHER team/NOUN tested/VERB the/OTHER load/NOUN quickly/ADV ./OTHER",
    "NASA/NOUN/ORGANIZATION published/VERB new/ADJ guidelines/NOUN ./OTHER",
    "She/NOUN/PERSON drew/VERB the/OTHER plan/NOUN in/OTHER Boston/NOUN/LOCATION ./OTHER",
    "The/OTHER cost/NOUN seems/VERB high/ADJ for/OTHER this/OTHER design/NOUN ./OTHER",
    "Maybe/ADV we/NOUN/PERSON use/VERB cables/NOUN and/OTHER a/OTHER lighter/ADJ deck/NOUN ./OTHER",
    "I/NOUN/PERSON like/VERB that/OTHER idea/NOUN ./OTHER",
    "The/OTHER simulation/NOUN crashed/VERB twice/ADV this/OTHER morning/NOUN/TIME ./OTHER",
    "He/NOUN/PERSON measured/VERB the/OTHER span/NOUN carefully/ADV ./OTHER",
    "Good/ADJ point/NOUN ./OTHER",
    "The/OTHER client/NOUN/ORGANIZATION expects/VERB a/OTHER report/NOUN every/OTHER week/NOUN/SET ./OTHER",
};

fio::AnnotatedSentence parse_template(const std::string& tmpl, std::size_t utt) {
  fio::AnnotatedSentence s;
  s.utt_index = utt;
  std::istringstream in(tmpl);
  std::string item;
  while (in >> item) {
    const auto a = item.find('/', 1);
    const auto b = item.find('/', a + 1);
    fio::AnnotatedToken t;
    t.word = item.substr(0, a);
    const auto pos = item.substr(a + 1, b == std::string::npos ? std::string::npos : b - a - 1);
    const auto cat = b == std::string::npos ? std::string("NONE") : item.substr(b + 1);
    if (pos == "NOUN") t.pos = fio::PartOfSpeech::kNoun;
    else if (pos == "VERB") t.pos = fio::PartOfSpeech::kVerb;
    else if (pos == "ADJ") t.pos = fio::PartOfSpeech::kAdj;
    else if (pos == "ADV") t.pos = fio::PartOfSpeech::kAdv;
    for (auto c : {fio::EntityCategory::kPerson, fio::EntityCategory::kOrganization, fio::EntityCategory::kDate,
                   fio::EntityCategory::kTime, fio::EntityCategory::kSet, fio::EntityCategory::kLocation})
      if (fio::to_string(c) == cat) t.category = c;
    if (!s.sentence.empty() && t.word != ".") s.sentence += " ";
    s.sentence += t.word;
    s.tokens.push_back(std::move(t));
  }
  return s;
}

std::vector<double> center(std::size_t k) {
  std::vector<double> c(8, 0.2);
  c[k] += 1.0;
  return c;
}

}  // namespace

double Rng::normal() {
  const double u1 = std::max(unit(), 1e-300);
  const double u2 = unit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<Turn> schedule() {
  Rng rng(kCorpusSeed);
  std::vector<Turn> turns;
  double t = 0.5;
  std::size_t prev = 0;
  while (t < kDurationSeconds - 1.0) {
    std::size_t k = prev;
    if (turns.empty() || rng.unit() < 0.85) k = (prev + 1 + rng.pick(kRoster.size() - 1)) % kRoster.size();
    const double end = std::min(kDurationSeconds, t + rng.uniform(2.0, 9.0));
    turns.push_back({kRoster[k], t, end});
    prev = k;
    t = end + rng.uniform(-0.6, 1.2);
  }
  return turns;
}

fio::AudioBuffer synth_audio(const std::vector<Turn>& turns) {
  fio::AudioBuffer audio;
  audio.samples.assign(static_cast<std::size_t>(kDurationSeconds * fio::kCanonicalSampleRate), 0.0f);
  const double freq[] = {220.0, 330.0, 495.0};
  for (const auto& turn : turns) {
    const auto k = static_cast<std::size_t>(std::find(kRoster.begin(), kRoster.end(), turn.speaker) - kRoster.begin());
    const auto a = static_cast<std::size_t>(turn.start_s * fio::kCanonicalSampleRate);
    const auto b = std::min(audio.samples.size(), static_cast<std::size_t>(turn.end_s * fio::kCanonicalSampleRate));
    for (std::size_t i = a; i < b; ++i)
      audio.samples[i] += static_cast<float>(0.3 * std::sin(2.0 * std::numbers::pi * freq[k] * i / fio::kCanonicalSampleRate));
  }
  return audio;
}

void write_corpus(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  Rng rng(kCorpusSeed + 1);
  const auto turns = schedule();

  // One embedding per one-second window, labelled by whoever speaks at its centre.
  const std::size_t windows =
      fio::window_count(static_cast<std::size_t>(kDurationSeconds * fio::kCanonicalSampleRate));
  std::vector<fio::EmbeddingRow> rows;
  std::size_t label = 0;
  for (std::size_t i = 0; i < windows; ++i) {
    const double start = static_cast<double>(i) / 10.0;
    const double mid = start + 0.5;
    for (const auto& t : turns)
      if (t.start_s <= mid && mid < t.end_s)
        label = static_cast<std::size_t>(std::find(kRoster.begin(), kRoster.end(), t.speaker) - kRoster.begin());
    auto v = center(label);
    for (auto& x : v) x = std::round((x + 0.05 * rng.normal()) * 1e6) / 1e6;
    rows.push_back({start, v});
  }
  dialogic::write_file_atomic(dir / "embeddings.csv", fio::format_embeddings(rows));
  std::string roster;
  for (const auto& id : kRoster) roster += id + "\n";
  dialogic::write_file_atomic(dir / "roster.txt", roster);

  // Diarize exactly as the pipeline does so provider files index its utterances.
  const auto parsed = fio::parse_embeddings(fio::format_embeddings(rows));
  std::vector<fio::EmbeddingVector> vecs;
  std::vector<double> starts;
  for (const auto& r : parsed) {
    vecs.push_back(r.components);
    starts.push_back(r.start_s);
  }
  namespace dz = dialogic::diarize;
  const auto labels = dz::spectral_cluster(dz::affinity(vecs), kRoster.size(), kClusterSeed);
  auto utts = dz::assign_roster(dz::temporal_smooth(dz::labels_to_utterances(labels, starts)), dz::Roster(kRoster));
  dz::sort_utterances(utts);

  using dialogic::EmotionLabel;
  const EmotionLabel moods[] = {EmotionLabel::kSad, EmotionLabel::kNeutral, EmotionLabel::kHappy, EmotionLabel::kAnger};
  std::map<std::pair<std::string, int>, EmotionLabel> mood;
  std::vector<fio::EmotionRow> emotions;
  for (std::size_t u = 0; u < utts.size(); ++u) {
    const auto seconds = dialogic::emotion::segment_seconds(utts[u]);
    const auto id = dialogic::speaker_name(utts[u].speaker);
    for (std::size_t s = 0; s < seconds.size(); ++s) {
      const int minute = static_cast<int>(seconds[s] / 60.0);
      auto it = mood.find({id, minute});
      if (it == mood.end()) it = mood.emplace(std::make_pair(id, minute), moods[rng.pick(4)]).first;
      const auto lbl = rng.unit() < 0.7 ? it->second : dialogic::kAllEmotions[rng.pick(7)];
      emotions.push_back({u, s, lbl});
    }
  }
  dialogic::write_file_atomic(dir / "emotions.csv", fio::format_emotions(emotions));

  const auto trimmed = dialogic::text::privacy_trim(utts, dialogic::text::kDefaultTrimSeconds);
  std::vector<fio::TextRow> texts;
  std::vector<fio::AnnotatedSentence> annotations;
  for (std::size_t u = 0; u < trimmed.size(); ++u) {
    fio::TextRow row{u, ""};
    if (rng.unit() >= 0.08) {
      const std::size_t n = 1 + rng.pick(2);
      for (std::size_t k = 0; k < n; ++k) {
        auto s = parse_template(kTemplates[rng.pick(kTemplates.size())], u);
        row.text += (row.text.empty() ? "" : " ") + s.sentence;
        annotations.push_back(std::move(s));
      }
    }
    texts.push_back(std::move(row));
  }
  dialogic::write_file_atomic(dir / "texts.csv", fio::format_texts(texts));
  dialogic::write_file_atomic(dir / "annotations.jsonl", fio::format_annotations(annotations));

  nlohmann::ordered_json cfg;
  cfg["recording_id"] = "corpus";
  cfg["inputs"] = {{"embeddings", "embeddings.csv"}, {"emotions", "emotions.csv"}, {"texts", "texts.csv"},
                   {"annotations", "annotations.jsonl"}, {"roster", "roster.txt"}};
  cfg["speakers"] = kRoster.size();
  cfg["seed"] = kClusterSeed;
  cfg["interval_s"] = 60;
  cfg["trim_s"] = dialogic::text::kDefaultTrimSeconds;
  cfg["fallback_emotion"] = "Sad";
  cfg["output_dir"] = "out";
  dialogic::write_file_atomic(dir / "config.json", cfg.dump(2) + "\n");
}

}  // namespace corpus
