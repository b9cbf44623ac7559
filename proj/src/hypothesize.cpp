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
#include <tuple>

#include <json.hpp>

#include "dialogic/error.hpp"
#include "dialogic/hypothesize.hpp"

namespace dialogic::hypothesize {
namespace {

using ojson = nlohmann::ordered_json;

double round6(double v) {
  const double r = std::round(v * 1e6) / 1e6;
  return r == 0.0 ? 0.0 : r;
}

std::vector<Term> select(const ParamScores& p, bool sim, double theta) {
  std::vector<Term> out;
  for (const auto& [name, score] : p.values)
    if ((score >= theta) == sim) out.push_back({name, sim, score});
  return out;
}

// Parameters with the given predicate at both event pairs; score taken at the end pair.
std::vector<Term> select_both(const ParamScores& p0, const ParamScores& p1, bool sim, double theta) {
  std::vector<Term> out;
  for (const auto& [name, s1] : p1.values) {
    const auto it = std::find_if(p0.values.begin(), p0.values.end(), [&](const auto& v) { return v.first == name; });
    if (it == p0.values.end()) continue;
    if ((it->second >= theta) == sim && (s1 >= theta) == sim) out.push_back({name, sim, s1});
  }
  return out;
}

std::string render_terms(const std::vector<Term>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " ^ ";
    out += (t.sim ? "Sim(" : "DSim(") + t.param + ")";
  }
  return out;
}

ojson score_json(const SimScore& s) {
  ojson j;
  j["C"] = round6(s.c);
  j["E"] = round6(s.e);
  j["U"] = round6(s.u);
  j["M"] = round6(s.m);
  j["Diff"] = round6(s.diff);
  j["aggregate"] = round6(s.aggregate);
  return j;
}

ojson terms_json(const std::vector<Term>& terms) {
  ojson arr = ojson::array();
  for (const auto& t : terms) {
    ojson j;
    j["param"] = t.param;
    j["predicate"] = t.sim ? "Sim" : "DSim";
    j["score"] = round6(t.score);
    arr.push_back(std::move(j));
  }
  return arr;
}

ojson hypothesis_json(const Hypothesis& h) {
  ojson j;
  j["kind"] = std::string(to_string(h.kind));
  j["scope"] = std::string(to_string(h.scope));
  j["teams"] = {h.team_i, h.team_j};
  j["segments"] = {{round6(h.span_i.start_s), round6(h.span_i.end_s)},
                   {round6(h.span_j.start_s), round6(h.span_j.end_s)}};
  j["start_scores"] = score_json(h.s0);
  j["end_scores"] = score_json(h.s1);
  j["antecedent"] = terms_json(h.antecedent);
  j["consequent"] = terms_json(h.consequent);
  j["conditioning"] = terms_json(h.conditioning);
  j["ig"] = h.ig ? terms_json({*h.ig}).at(0) : ojson(nullptr);
  j["null_consequent"] = h.null_consequent;
  j["schema"] = h.rendered();
  return j;
}

ojson list_json(const std::vector<Hypothesis>& hs) {
  ojson arr = ojson::array();
  for (const auto& h : hs) arr.push_back(hypothesis_json(h));
  return arr;
}

ojson map_json(const std::map<std::string, std::vector<Hypothesis>>& m) {
  ojson j = ojson::object();
  for (const auto& [team, hs] : m) j[team] = list_json(hs);
  return j;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string_view to_string(Kind k) { return k == Kind::kInvariant ? "INVARIANT" : "DIFFERENTIATED"; }
std::string_view to_string(Scope s) { return s == Scope::kSameTeam ? "SAME_TEAM" : "CROSS_TEAM"; }
std::string_view to_string(Verdict v) { return v == Verdict::kHolds ? "HOLDS" : "FAILS"; }

std::vector<Event> detect_events(const std::string& team_id, const std::vector<TeamState>& states, double tau) {
  std::vector<Event> events;
  for (std::size_t t = 0; t < states.size(); ++t) {
    bool event = t == 0 || t + 1 == states.size();
    if (!event) {
      const auto s = sim_states(states[t - 1], states[t]);
      event = std::max({1.0 - s.c, 1.0 - s.e, 1.0 - s.u, 1.0 - s.m, 1.0 - s.diff}) > tau;
    }
    if (event) events.push_back({team_id, states[t].window.end_s, states[t]});
  }
  return events;
}

std::vector<LinearSegment> segments_from_events(const std::vector<Event>& events) {
  std::vector<LinearSegment> out;
  for (std::size_t k = 0; k + 1 < events.size(); ++k) out.push_back({events[k].team_id, events[k], events[k + 1], {}});
  return out;
}

std::string Hypothesis::rendered() const {
  std::string lhs = render_terms(antecedent);
  std::string rhs = null_consequent ? "⊥" : render_terms(consequent);
  if (lhs.empty()) lhs = "⊤";
  if (rhs.empty()) rhs = "⊤";
  auto cond = conditioning;
  if (ig) cond.push_back(*ig);
  std::string out = lhs + " => " + rhs;
  if (!cond.empty()) out += " | " + render_terms(cond);
  return out;
}

PairResult eval_pair(const LinearSegment& a, const LinearSegment& b, const Thresholds& th) {
  PairResult r;
  Hypothesis base;
  base.scope = a.team_id == b.team_id ? Scope::kSameTeam : Scope::kCrossTeam;
  base.team_i = a.team_id;
  base.team_j = b.team_id;
  base.span_i = {a.start.time_s, a.end.time_s};
  base.span_j = {b.start.time_s, b.end.time_s};
  base.s0 = sim_events(a.start, b.start);
  base.s1 = sim_events(a.end, b.end);
  if (a.ig && b.ig && !a.ig->edges.empty() && !b.ig->edges.empty()) {
    const double s = ig_similarity(*a.ig, *b.ig);
    base.ig = Term{"IG", s >= th.sim, s};
  }
  const auto p0 = param_scores(a.start.state, b.start.state);
  const auto p1 = param_scores(a.end.state, b.end.state);

  if (base.s0.aggregate >= th.sim && base.s1.aggregate >= th.sim) {
    Hypothesis h = base;
    h.kind = Kind::kInvariant;
    h.antecedent = select(p0, true, th.sim);
    h.consequent = select(p1, true, th.sim);
    h.conditioning = select_both(p0, p1, false, th.sim);
    r.invariant = std::move(h);

    Hypothesis n = base;
    n.kind = Kind::kDifferentiated;
    n.null_consequent = true;
    for (const auto& t : select(p0, false, th.sim)) {
      const auto it = std::find_if(p1.values.begin(), p1.values.end(), [&](const auto& v) { return v.first == t.param; });
      if (it != p1.values.end() && it->second >= th.sim) n.antecedent.push_back(t);
    }
    n.conditioning = select(p0, true, th.sim);
    if (!n.antecedent.empty()) r.null_consequent = std::move(n);
  }
  if (base.s0.aggregate <= th.dsim && base.s1.aggregate <= th.dsim) {
    Hypothesis h = base;
    h.kind = Kind::kDifferentiated;
    h.antecedent = select(p0, false, th.sim);
    h.consequent = select(p1, false, th.sim);
    h.conditioning = select_both(p0, p1, true, th.sim);
    r.differentiated = std::move(h);
  }
  return r;
}

HypothesisSets extract_all(std::vector<LinearSegment>& segments, const Thresholds& th) {
  std::stable_sort(segments.begin(), segments.end(), [](const LinearSegment& x, const LinearSegment& y) {
    return std::tie(x.team_id, x.start.time_s, x.end.time_s) < std::tie(y.team_id, y.start.time_s, y.end.time_s);
  });
  HypothesisSets out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    for (std::size_t j = i; j < segments.size(); ++j) {
      ++out.pairs_evaluated;
      auto r = eval_pair(segments[i], segments[j], th);
      if (i == j && !th.include_self_pairs) continue;
      const bool same = segments[i].team_id == segments[j].team_id;
      const auto& team = segments[i].team_id;
      for (auto* h : {&r.invariant, &r.differentiated, &r.null_consequent}) {
        if (!*h) continue;
        (*h)->seg_i = i;
        (*h)->seg_j = j;
        const bool eq1 = (*h)->kind == Kind::kInvariant;
        if (same)
          (eq1 ? out.eq1S : out.eq2S)[team].push_back(std::move(**h));
        else
          (eq1 ? out.eq1All : out.eq2All).push_back(std::move(**h));
      }
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> cluster_segments(const std::vector<LinearSegment>& segments, double theta) {
  UnionFind uf(segments.size());
  for (std::size_t i = 0; i < segments.size(); ++i)
    for (std::size_t j = i + 1; j < segments.size(); ++j)
      if (sim_events(segments[i].start, segments[j].start).aggregate >= theta) uf.unite(i, j);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < segments.size(); ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  return out;  // roots are the smallest member, so clusters come out ordered
}

ParameterRanges abstract_ranges(const std::vector<LinearSegment>& segments, const std::vector<std::size_t>& cluster) {
  if (cluster.empty()) throw Error(ErrorCode::kDegenerateInput, "abstract_ranges: empty cluster");
  ParameterRanges r;
  const auto add = [&](const std::string& name, double v) {
    auto it = r.numeric.find(name);
    if (it == r.numeric.end())
      r.numeric.emplace(name, std::make_pair(v, v));
    else
      it->second = {std::min(it->second.first, v), std::max(it->second.second, v)};
  };
  const auto mean = [](const std::vector<double>& v) {
    return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  for (auto idx : cluster) {
    if (idx >= segments.size()) throw Error(ErrorCode::kIndexError, "abstract_ranges: segment index out of range");
    for (const Event* ev : {&segments[idx].start, &segments[idx].end}) {
      const auto& s = ev->state;
      add("Br", breadth(s.c));
      add("De", depth(s.c));
      std::vector<double> u;
      for (const auto& [id, x] : s.u) u.push_back(x);
      add("U", mean(u));
      std::vector<double> m;
      for (const auto& [id, x] : s.m) m.push_back(x.mean_words);
      add("M", mean(m));
      add("Diff", mean(std::vector<double>(s.diff.begin(), s.diff.end())));
      for (const auto& [label, k] : s.e)
        if (k > 0) r.emotions.insert(label);
    }
  }
  return r;
}

std::vector<ParticipantId> least_delta_ig(const std::map<ParticipantId, double>& dig) {
  std::vector<std::pair<double, ParticipantId>> order;
  for (const auto& [id, v] : dig) order.emplace_back(v, id);
  std::sort(order.begin(), order.end());
  const std::size_t keep = (order.size() + 1) / 2;
  std::vector<ParticipantId> out;
  for (std::size_t k = 0; k < keep; ++k) out.push_back(order[k].second);
  std::sort(out.begin(), out.end());
  return out;
}

DeltaVerdict delta_verdict(const std::map<ParticipantId, double>& dig, const std::map<ParticipantId, double>& de) {
  DeltaVerdict v;
  v.least_ig = least_delta_ig(dig);
  v.max_e = emotion::argmax_key(de);
  const bool in_least = v.max_e && std::find(v.least_ig.begin(), v.least_ig.end(), *v.max_e) != v.least_ig.end();
  v.verdict = v.max_e && !in_least ? Verdict::kHolds : Verdict::kFails;
  return v;
}

std::vector<DeltaVerdict> check_delta_hypothesis(const std::vector<interact::InteractionGraph>& ig_series,
                                                 const emotion::EmotionTimeline& timeline,
                                                 const std::vector<TimeInterval>& intervals, EmotionLabel fallback) {
  if (intervals.size() < 2) throw Error(ErrorCode::kDegenerateInput, "check_delta_hypothesis: need at least 2 intervals");
  if (ig_series.size() != intervals.size())
    throw Error(ErrorCode::kAlignmentError, "check_delta_hypothesis: IG series and intervals differ in length");
  std::vector<DeltaVerdict> out;
  for (std::size_t k = 0; k + 1 < intervals.size(); ++k) {
    auto dig = interact::delta_ig(ig_series[k], ig_series[k + 1]).per_participant;
    std::map<ParticipantId, double> de;
    for (const auto& [id, n] : emotion::delta_e(timeline, intervals[k], intervals[k + 1], fallback).per_speaker) {
      de[id] = static_cast<double>(n);
      dig.try_emplace(id, 0.0);
    }
    auto v = delta_verdict(dig, de);
    v.from = intervals[k];
    v.to = intervals[k + 1];
    out.push_back(std::move(v));
  }
  return out;
}

std::string hypotheses_json(const HypothesisSets& sets, const std::vector<DeltaVerdict>& verdicts) {
  ojson j;
  j["pairs_evaluated"] = sets.pairs_evaluated;
  j["eq1S"] = map_json(sets.eq1S);
  j["eq2S"] = map_json(sets.eq2S);
  j["eq1All"] = list_json(sets.eq1All);
  j["eq2All"] = list_json(sets.eq2All);
  j["delta_checks"] = ojson::array();
  for (const auto& v : verdicts) {
    ojson d;
    d["from"] = {round6(v.from.start_s), round6(v.from.end_s)};
    d["to"] = {round6(v.to.start_s), round6(v.to.end_s)};
    d["least_delta_ig"] = v.least_ig;
    d["max_delta_e"] = v.max_e ? ojson(*v.max_e) : ojson(nullptr);
    d["verdict"] = std::string(to_string(v.verdict));
    j["delta_checks"].push_back(std::move(d));
  }
  return j.dump(2) + "\n";
}

std::string clusters_json(const std::vector<LinearSegment>& segments,
                          const std::vector<std::vector<std::size_t>>& clusters) {
  ojson j;
  j["clusters"] = ojson::array();
  for (const auto& c : clusters) {
    ojson cj;
    cj["members"] = ojson::array();
    for (auto idx : c) {
      ojson m;
      m["team"] = segments.at(idx).team_id;
      m["start_s"] = round6(segments[idx].start.time_s);
      m["end_s"] = round6(segments[idx].end.time_s);
      cj["members"].push_back(std::move(m));
    }
    const auto r = abstract_ranges(segments, c);
    cj["ranges"] = ojson::object();
    for (const auto& [name, mm] : r.numeric) cj["ranges"][name] = {round6(mm.first), round6(mm.second)};
    cj["emotions"] = ojson::array();
    for (auto label : r.emotions) cj["emotions"].push_back(std::string(to_string(label)));
    j["clusters"].push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

}  // namespace dialogic::hypothesize
