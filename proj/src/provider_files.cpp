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

#include <set>
#include <sstream>

#include "dialogic/error.hpp"
#include "dialogic/featureio.hpp"
#include "dialogic/io.hpp"

namespace dialogic::featureio {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kSchemaError, "line " + std::to_string(line) + ": " + what);
}

std::vector<csv::Row> rows_with_header(std::string_view text, const csv::Row& expected_prefix,
                                       bool exact) {
  auto rows = csv::parse(text);
  if (rows.empty()) schema_error(1, "missing header");
  const auto& header = rows.front();
  const bool ok = exact ? header == expected_prefix
                        : header.size() >= expected_prefix.size() &&
                              std::equal(expected_prefix.begin(), expected_prefix.end(), header.begin());
  if (!ok) schema_error(1, "unexpected header '" + csv::format_row(header).substr(0, 80) + "'");
  return rows;
}

std::size_t parse_index(const std::string& text, std::size_t line, std::string_view field) {
  const long long v = csv::parse_int(text, line, field);
  if (v < 0) schema_error(line, std::string(field) + " must be non-negative");
  return static_cast<std::size_t>(v);
}

constexpr std::array<std::pair<PartOfSpeech, const char*>, 5> kPosNames = {{
    {PartOfSpeech::kNoun, "NOUN"},
    {PartOfSpeech::kVerb, "VERB"},
    {PartOfSpeech::kAdj, "ADJ"},
    {PartOfSpeech::kAdv, "ADV"},
    {PartOfSpeech::kOther, "OTHER"},
}};

constexpr std::array<std::pair<EntityCategory, const char*>, 9> kCategoryNames = {{
    {EntityCategory::kPerson, "PERSON"},
    {EntityCategory::kOrganization, "ORGANIZATION"},
    {EntityCategory::kMisc, "MISC"},
    {EntityCategory::kDate, "DATE"},
    {EntityCategory::kTime, "TIME"},
    {EntityCategory::kDuration, "DURATION"},
    {EntityCategory::kSet, "SET"},
    {EntityCategory::kLocation, "LOCATION"},
    {EntityCategory::kNone, "NONE"},
}};

}  // namespace

std::string to_string(PartOfSpeech pos) {
  for (auto [p, name] : kPosNames)
    if (p == pos) return name;
  return "OTHER";
}

std::string to_string(EntityCategory category) {
  for (auto [c, name] : kCategoryNames)
    if (c == category) return name;
  return "NONE";
}

// --- embeddings -------------------------------------------------------------

std::vector<EmbeddingRow> parse_embeddings(std::string_view text) {
  auto rows = rows_with_header(text, {"start_s"}, false);
  const auto& header = rows.front();
  const std::size_t dim = header.size() - 1;
  if (dim == 0) schema_error(1, "embedding header has no components");
  for (std::size_t d = 0; d < dim; ++d) {
    if (header[d + 1] != "e" + std::to_string(d)) {
      schema_error(1, "expected column e" + std::to_string(d) + ", got '" + header[d + 1] + "'");
    }
  }
  std::vector<EmbeddingRow> out;
  out.reserve(rows.size() - 1);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line = r + 1;
    const auto& row = rows[r];
    if (row.size() != dim + 1) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "line " + std::to_string(line) + ": expected " + std::to_string(dim) +
                      " components, got " + std::to_string(row.size() - 1));
    }
    EmbeddingRow e;
    e.start_s = csv::parse_double(row[0], line, "start_s");
    if (e.start_s < 0.0) schema_error(line, "start_s must be >= 0");
    if (!out.empty() && e.start_s <= out.back().start_s) schema_error(line, "start_s not ascending");
    e.components.reserve(dim);
    for (std::size_t d = 0; d < dim; ++d) {
      e.components.push_back(csv::parse_double(row[d + 1], line, header[d + 1]));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::string format_embeddings(const std::vector<EmbeddingRow>& rows) {
  const std::size_t dim = rows.empty() ? 0 : rows.front().components.size();
  csv::Row header{"start_s"};
  for (std::size_t d = 0; d < dim; ++d) header.push_back("e" + std::to_string(d));
  std::string out = csv::format_row(header);
  for (const auto& e : rows) {
    if (e.components.size() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "inconsistent embedding dimension");
    }
    csv::Row row{csv::fixed(e.start_s, 3)};
    for (double v : e.components) row.push_back(csv::shortest(v));
    out += csv::format_row(row);
  }
  return out;
}

std::vector<EmbeddingRow> read_embeddings(const std::filesystem::path& path) {
  return parse_embeddings(read_text_file(path));
}

// --- emotions ---------------------------------------------------------------

std::vector<EmotionRow> parse_emotions(std::string_view text) {
  auto rows = rows_with_header(text, {"utt_index", "second_index", "label"}, true);
  std::vector<EmotionRow> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line = r + 1;
    const auto& row = rows[r];
    if (row.size() != 3) schema_error(line, "expected 3 fields");
    EmotionRow e;
    e.utt_index = parse_index(row[0], line, "utt_index");
    e.second_index = parse_index(row[1], line, "second_index");
    const auto label = parse_emotion(row[2]);
    if (!label) {
      throw Error(ErrorCode::kUnknownLabel,
                  "line " + std::to_string(line) + ": '" + row[2] + "' is not an EMODB label");
    }
    e.label = *label;
    out.push_back(e);
  }
  return out;
}

std::string format_emotions(const std::vector<EmotionRow>& rows) {
  std::string out = csv::format_row({"utt_index", "second_index", "label"});
  for (const auto& e : rows) {
    out += csv::format_row({std::to_string(e.utt_index), std::to_string(e.second_index),
                            std::string(to_string(e.label))});
  }
  return out;
}

std::vector<EmotionRow> read_emotions(const std::filesystem::path& path) {
  return parse_emotions(read_text_file(path));
}

// --- texts ------------------------------------------------------------------

std::vector<TextRow> parse_texts(std::string_view text, std::optional<std::size_t> expected_rows) {
  auto rows = rows_with_header(text, {"utt_index", "text"}, true);
  std::vector<TextRow> out;
  std::set<std::size_t> seen;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line = r + 1;
    const auto& row = rows[r];
    if (row.size() != 2) schema_error(line, "expected 2 fields");
    TextRow t;
    t.utt_index = parse_index(row[0], line, "utt_index");
    if (!seen.insert(t.utt_index).second) schema_error(line, "duplicate utt_index");
    t.text = row[1];
    out.push_back(std::move(t));
  }
  if (expected_rows && out.size() != *expected_rows) {
    throw Error(ErrorCode::kSchemaError, "texts file has " + std::to_string(out.size()) +
                                             " rows but there are " +
                                             std::to_string(*expected_rows) + " utterances");
  }
  return out;
}

std::string format_texts(const std::vector<TextRow>& rows) {
  std::string out = csv::format_row({"utt_index", "text"});
  for (const auto& t : rows) out += csv::format_row({std::to_string(t.utt_index), t.text});
  return out;
}

std::vector<TextRow> read_texts(const std::filesystem::path& path,
                                std::optional<std::size_t> expected_rows) {
  return parse_texts(read_text_file(path), expected_rows);
}

// --- annotations ------------------------------------------------------------

std::vector<AnnotatedSentence> parse_annotations(std::string_view text) {
  std::vector<AnnotatedSentence> out;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (raw.find_first_not_of(" \t") == std::string_view::npos) continue;

    json obj;
    try {
      obj = json::parse(raw);
    } catch (const json::parse_error& e) {
      schema_error(line, std::string("invalid JSON: ") + e.what());
    }
    if (!obj.is_object()) schema_error(line, "expected a JSON object");
    if (!obj.contains("utt_index") || !obj["utt_index"].is_number_integer() ||
        obj["utt_index"].get<long long>() < 0) {
      schema_error(line, "field utt_index must be a non-negative integer");
    }
    if (!obj.contains("sentence") || !obj["sentence"].is_string()) {
      schema_error(line, "field sentence must be a string");
    }
    if (!obj.contains("tokens") || !obj["tokens"].is_array() || obj["tokens"].empty()) {
      schema_error(line, "field tokens must be a non-empty array");
    }
    AnnotatedSentence s;
    s.utt_index = obj["utt_index"].get<std::size_t>();
    s.sentence = obj["sentence"].get<std::string>();
    for (const auto& tok : obj["tokens"]) {
      if (!tok.is_object() || !tok.contains("word") || !tok["word"].is_string() ||
          !tok.contains("pos") || !tok["pos"].is_string() || !tok.contains("category") ||
          !tok["category"].is_string()) {
        schema_error(line, "token needs string fields word, pos, category");
      }
      AnnotatedToken t;
      t.word = tok["word"].get<std::string>();
      const auto pos = tok["pos"].get<std::string>();
      const auto cat = tok["category"].get<std::string>();
      bool pos_ok = false, cat_ok = false;
      for (auto [p, name] : kPosNames)
        if (pos == name) t.pos = p, pos_ok = true;
      for (auto [c, name] : kCategoryNames)
        if (cat == name) t.category = c, cat_ok = true;
      if (!pos_ok) schema_error(line, "field pos: unknown value '" + pos + "'");
      if (!cat_ok) schema_error(line, "field category: unknown value '" + cat + "'");
      if (t.category != EntityCategory::kNone && t.pos != PartOfSpeech::kNoun) {
        schema_error(line, "field category: '" + t.word + "' has a category but is not a NOUN");
      }
      s.tokens.push_back(std::move(t));
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string format_annotations(const std::vector<AnnotatedSentence>& rows) {
  std::string out;
  for (const auto& s : rows) {
    ordered_json obj;
    obj["utt_index"] = s.utt_index;
    obj["sentence"] = s.sentence;
    obj["tokens"] = ordered_json::array();
    for (const auto& t : s.tokens) {
      ordered_json tok;
      tok["word"] = t.word;
      tok["pos"] = to_string(t.pos);
      tok["category"] = to_string(t.category);
      obj["tokens"].push_back(std::move(tok));
    }
    out += obj.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<AnnotatedSentence> read_annotations(const std::filesystem::path& path) {
  return parse_annotations(read_text_file(path));
}

// --- utterances / roster ----------------------------------------------------

std::string format_utterances(const std::vector<Utterance>& utts) {
  std::string out = csv::format_row({"speaker", "start_s", "end_s"});
  for (const auto& u : utts) {
    out += csv::format_row({speaker_name(u.speaker), csv::fixed(u.start_s, 3), csv::fixed(u.end_s, 3)});
  }
  return out;
}

std::vector<Utterance> parse_utterances(std::string_view text) {
  auto rows = rows_with_header(text, {"speaker", "start_s", "end_s"}, true);
  std::vector<Utterance> out;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const std::size_t line = r + 1;
    const auto& row = rows[r];
    if (row.size() != 3) schema_error(line, "expected 3 fields");
    if (row[0].empty()) schema_error(line, "field speaker is empty");
    Utterance u{ParticipantId(row[0]), csv::parse_double(row[1], line, "start_s"),
                csv::parse_double(row[2], line, "end_s")};
    if (!(u.end_s > u.start_s)) schema_error(line, "end_s must exceed start_s");
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<Utterance> read_utterances(const std::filesystem::path& path) {
  return parse_utterances(read_text_file(path));
}

std::vector<ParticipantId> read_roster(const std::filesystem::path& path) {
  std::istringstream in(read_text_file(path));
  std::vector<ParticipantId> ids;
  std::set<std::string> seen;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    std::string id = line.substr(b, e - b + 1);
    if (!seen.insert(id).second) schema_error(n, "duplicate roster ID '" + id + "'");
    ids.push_back(std::move(id));
  }
  return ids;
}

}  // namespace dialogic::featureio
