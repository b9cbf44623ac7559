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
#include <numeric>

#include "dialogic/hypothesize.hpp"

namespace dialogic::hypothesize {
namespace {

double mean(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::set<std::string> concept_keys(const ConceptNetwork& n) {
  std::set<std::string> keys;
  for (const auto& [c, k] : n.concepts) keys.insert(c);
  return keys;
}

std::vector<double> label_counts(const std::map<EmotionLabel, std::size_t>& e) {
  std::vector<double> v;
  for (auto label : kAllEmotions) {
    const auto it = e.find(label);
    v.push_back(it == e.end() ? 0.0 : static_cast<double>(it->second));
  }
  return v;
}

template <typename F>
std::vector<double> motivation_component(const std::map<ParticipantId, Motivation>& m, F f) {
  std::vector<double> v;
  for (const auto& [id, mot] : m) v.push_back(f(mot));
  return v;
}

std::vector<double> values_of(const std::map<ParticipantId, double>& u) {
  std::vector<double> v;
  for (const auto& [id, x] : u) v.push_back(x);
  return v;
}

double sim_c(const TeamState& a, const TeamState& b) {
  const double bi = breadth(a.c);
  const double bj = breadth(b.c);
  const double br = 1.0 - std::abs(bi - bj) / std::max({bi, bj, 1.0});
  return 0.5 * jaccard(concept_keys(a.c), concept_keys(b.c)) + 0.5 * br;
}

double sim_e(const TeamState& a, const TeamState& b) { return tv_similarity(label_counts(a.e), label_counts(b.e)); }

double sim_u(const TeamState& a, const TeamState& b) { return l1_similarity(values_of(a.u), values_of(b.u)); }

double sim_m(const TeamState& a, const TeamState& b) {
  const auto words = [](const Motivation& m) { return m.mean_words; };
  const auto types = [](const Motivation& m) { return m.clause_types; };
  const auto concepts = [](const Motivation& m) { return m.concepts; };
  return (l1_similarity(motivation_component(a.m, words), motivation_component(b.m, words)) +
          l1_similarity(motivation_component(a.m, types), motivation_component(b.m, types)) +
          l1_similarity(motivation_component(a.m, concepts), motivation_component(b.m, concepts))) /
         3.0;
}

double sim_diff(const DiffVector& a, const DiffVector& b) {
  double total = 0.0;
  for (std::size_t k = 0; k < kDiffSize; ++k) total += std::abs(a[k] - b[k]);
  return std::clamp(1.0 - total / static_cast<double>(kDiffSize), 0.0, 1.0);
}

// Direct measurements tracked per set for the correlation terms.
std::array<double, 4> direct_measurements(const TeamState& s) {
  double labels = 0.0;
  for (const auto& [l, k] : s.e)
    if (k > 0) labels += 1.0;
  return {breadth(s.c), labels, mean(values_of(s.u)),
          mean(motivation_component(s.m, [](const Motivation& m) { return m.mean_words; }))};
}

}  // namespace

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t inter = 0;
  for (const auto& x : a) inter += b.count(x);
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

double tv_similarity(const std::vector<double>& a, const std::vector<double>& b) {
  const double sa = std::accumulate(a.begin(), a.end(), 0.0);
  const double sb = std::accumulate(b.begin(), b.end(), 0.0);
  if (sa <= 0.0 && sb <= 0.0) return 1.0;
  if (sa <= 0.0 || sb <= 0.0) return 0.0;
  const std::size_t n = std::max(a.size(), b.size());
  double tv = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double pa = k < a.size() ? a[k] / sa : 0.0;
    const double pb = k < b.size() ? b[k] / sb : 0.0;
    tv += std::abs(pa - pb);
  }
  return std::clamp(1.0 - 0.5 * tv, 0.0, 1.0);
}

double l1_similarity(std::vector<double> a, std::vector<double> b) {
  std::sort(a.begin(), a.end(), std::greater<>());
  std::sort(b.begin(), b.end(), std::greater<>());
  const std::size_t n = std::max(a.size(), b.size());
  a.resize(n, 0.0);
  b.resize(n, 0.0);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    num += std::abs(a[k] - b[k]);
    den += std::max(std::abs(a[k]), std::abs(b[k]));
  }
  if (den <= 0.0) return 1.0;
  return std::clamp(1.0 - num / den, 0.0, 1.0);
}

double ig_similarity(const interact::InteractionGraph& a, const interact::InteractionGraph& b) {
  const auto strengths = [](const interact::InteractionGraph& g) {
    std::map<ParticipantId, double> s;
    for (const auto& n : g.nodes) s[n] = 0.0;
    for (const auto& [e, w] : g.edges) {
      s[e.first] += w;
      s[e.second] += w;
    }
    std::vector<double> v = values_of(s);
    std::sort(v.begin(), v.end(), std::greater<>());
    return v;
  };
  return tv_similarity(strengths(a), strengths(b));
}

double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 3) return 0.0;
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  if (sxx <= 1e-18 || syy <= 1e-18) return 0.0;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

TeamState extract_team_state(const WindowData& w, const Relatedness& relatedness) {
  TeamState s;
  s.window = w.window;
  std::vector<featureio::AnnotatedSentence> sentences;
  std::map<ParticipantId, std::size_t> turns;
  std::map<ParticipantId, std::size_t> words;
  std::map<ParticipantId, std::vector<clauses::ClauseSet>> sets;
  std::map<ParticipantId, std::set<std::string>> concepts;
  for (const auto& id : w.roster) turns[id];
  for (const auto& t : w.turns) {
    ++turns[t.speaker];
    words[t.speaker] += t.words;
    for (const auto& r : t.records) {
      sentences.push_back(r.sentence);
      sets[t.speaker].push_back(r.clauses);
      for (auto& c : sentence_concepts(r.sentence)) concepts[t.speaker].insert(std::move(c));
    }
  }
  s.c = build_concept_network(sentences, relatedness);
  for (auto label : w.emotions) ++s.e[label];

  const double minutes = (w.window.end_s - w.window.start_s) / 60.0;
  for (const auto& [id, n] : turns) {
    s.u[id] = minutes > 0.0 ? static_cast<double>(n) / minutes : 0.0;
    Motivation m;
    if (n > 0) m.mean_words = static_cast<double>(words[id]) / static_cast<double>(n);
    const auto counts = clauses::count_clauses(sets[id]);
    m.clause_types = static_cast<double>(std::count_if(counts.begin(), counts.end(), [](auto k) { return k > 0; }));
    m.concepts = static_cast<double>(concepts[id].size());
    s.m[id] = m;
  }
  return s;
}

void fill_diff(std::vector<TeamState>& states) {
  std::array<std::vector<double>, 4> direct;
  std::array<std::vector<double>, 4> change;
  for (std::size_t t = 0; t < states.size(); ++t) {
    std::array<double, 4> ch{};
    if (t > 0) {
      const auto& p = states[t - 1];
      const auto& c = states[t];
      ch = {1.0 - sim_c(p, c), 1.0 - sim_e(p, c), 1.0 - sim_u(p, c), 1.0 - sim_m(p, c)};
    }
    const auto d = direct_measurements(states[t]);
    DiffVector diff{};
    for (std::size_t k = 0; k < 4; ++k) {
      direct[k].push_back(d[k]);
      change[k].push_back(ch[k]);
      diff[k] = std::clamp(ch[k], 0.0, 1.0);
      diff[4 + k] = std::abs(pearson(direct[k], change[k]));
    }
    states[t].diff = diff;
  }
}

std::vector<TeamState> state_series(const std::vector<WindowData>& windows, const Relatedness& relatedness) {
  std::vector<TeamState> states;
  states.reserve(windows.size());
  for (const auto& w : windows) states.push_back(extract_team_state(w, relatedness));
  fill_diff(states);
  return states;
}

SimScore sim_states(const TeamState& a, const TeamState& b) {
  SimScore s;
  s.c = std::clamp(sim_c(a, b), 0.0, 1.0);
  s.e = sim_e(a, b);
  s.u = sim_u(a, b);
  s.m = std::clamp(sim_m(a, b), 0.0, 1.0);
  s.diff = sim_diff(a.diff, b.diff);
  s.aggregate = (s.c + s.e + s.u + s.m + s.diff) / 5.0;
  return s;
}

SimScore sim_events(const Event& a, const Event& b) { return sim_states(a.state, b.state); }

ParamScores param_scores(const TeamState& a, const TeamState& b) {
  ParamScores p;
  const auto ratio = [](double x, double y) { return 1.0 - std::abs(x - y) / std::max({x, y, 1.0}); };
  const double bri = breadth(a.c);
  const double brj = breadth(b.c);
  if (bri > 0.0 || brj > 0.0) p.values.emplace_back("Br", ratio(bri, brj));
  const double dei = depth(a.c);
  const double dej = depth(b.c);
  if (dei > 0.0 || dej > 0.0) p.values.emplace_back("De", 1.0 - std::abs(dei - dej) / std::max(dei, dej));
  const auto nonzero = [](const std::vector<double>& v) {
    return std::any_of(v.begin(), v.end(), [](double x) { return x != 0.0; });
  };
  if (nonzero(label_counts(a.e)) || nonzero(label_counts(b.e))) p.values.emplace_back("E", sim_e(a, b));
  if (nonzero(values_of(a.u)) || nonzero(values_of(b.u))) p.values.emplace_back("U", sim_u(a, b));
  const auto m_nonzero = [&](const TeamState& s) {
    return std::any_of(s.m.begin(), s.m.end(), [](const auto& kv) {
      return kv.second.mean_words != 0.0 || kv.second.clause_types != 0.0 || kv.second.concepts != 0.0;
    });
  };
  if (m_nonzero(a) || m_nonzero(b)) p.values.emplace_back("M", std::clamp(sim_m(a, b), 0.0, 1.0));
  const auto d_nonzero = [](const DiffVector& d) {
    return std::any_of(d.begin(), d.end(), [](double x) { return x != 0.0; });
  };
  if (d_nonzero(a.diff) || d_nonzero(b.diff)) p.values.emplace_back("Diff", sim_diff(a.diff, b.diff));
  return p;
}

}  // namespace dialogic::hypothesize
