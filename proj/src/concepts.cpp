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
#include <cctype>

#include "dialogic/hypothesize.hpp"

namespace dialogic::hypothesize {
namespace {

bool ends_with(const std::string& s, std::string_view tail) {
  return s.size() >= tail.size() && s.compare(s.size() - tail.size(), tail.size(), tail) == 0;
}

}  // namespace

std::string lemmatize(std::string_view word) {
  std::string w;
  for (char ch : word) {
    const auto c = static_cast<unsigned char>(ch);
    if (std::isalnum(c) || ch == '-' || ch == '\'') w.push_back(static_cast<char>(std::tolower(c)));
  }
  while (!w.empty() && (w.back() == '\'' || w.back() == '-')) w.pop_back();
  if (ends_with(w, "'s")) w.resize(w.size() - 2);
  if (w.size() > 4 && ends_with(w, "ies")) return w.substr(0, w.size() - 3) + "y";
  if (w.size() > 4 && (ends_with(w, "sses") || ends_with(w, "ches") || ends_with(w, "shes") ||
                       ends_with(w, "xes")))
    return w.substr(0, w.size() - 2);
  if (w.size() > 3 && w.back() == 's' && !ends_with(w, "ss") && !ends_with(w, "us") && !ends_with(w, "is"))
    w.pop_back();
  return w;
}

std::vector<std::string> sentence_concepts(const featureio::AnnotatedSentence& s) {
  std::vector<std::string> out;
  for (const auto& t : s.tokens) {
    if (t.pos != featureio::PartOfSpeech::kNoun || t.category == featureio::EntityCategory::kPerson) continue;
    auto lemma = lemmatize(t.word);
    if (!lemma.empty()) out.push_back(std::move(lemma));
  }
  return out;
}

ConceptNetwork build_concept_network(const std::vector<featureio::AnnotatedSentence>& sentences,
                                     const Relatedness& relatedness) {
  ConceptNetwork net;
  std::vector<std::set<std::string>> per_sentence;
  std::map<std::string, std::size_t> sentence_count;
  for (const auto& s : sentences) {
    std::set<std::string> present;
    for (auto& c : sentence_concepts(s)) {
      ++net.concepts[c];
      present.insert(std::move(c));
    }
    for (const auto& c : present) ++sentence_count[c];
    if (!present.empty()) per_sentence.push_back(std::move(present));
  }

  std::map<std::pair<std::string, std::string>, std::size_t> co;
  if (!relatedness) {
    for (const auto& present : per_sentence)
      for (auto a = present.begin(); a != present.end(); ++a)
        for (auto b = std::next(a); b != present.end(); ++b) ++co[{*a, *b}];
  }

  for (auto a = net.concepts.begin(); a != net.concepts.end(); ++a) {
    for (auto b = std::next(a); b != net.concepts.end(); ++b) {
      double r = 0.0;
      if (relatedness) {
        r = std::clamp(relatedness(a->first, b->first), 0.0, 1.0);
      } else {
        const auto it = co.find({a->first, b->first});
        if (it == co.end()) continue;
        const auto denom = std::min(sentence_count[a->first], sentence_count[b->first]);
        r = static_cast<double>(it->second) / static_cast<double>(denom);
      }
      if (r >= kArcThreshold) net.arcs[{a->first, b->first}] = r;
    }
  }
  return net;
}

double breadth(const ConceptNetwork& n) { return static_cast<double>(n.concepts.size()); }

double depth(const ConceptNetwork& n) {
  if (n.concepts.empty()) return 0.0;
  std::size_t occurrences = 0;
  for (const auto& [c, k] : n.concepts) occurrences += k;
  const double count = static_cast<double>(n.concepts.size());
  return static_cast<double>(occurrences) / count + 2.0 * static_cast<double>(n.arcs.size()) / count;
}

}  // namespace dialogic::hypothesize
