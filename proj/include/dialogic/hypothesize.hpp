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


#ifndef DIALOGIC_HYPOTHESIZE_HPP_
#define DIALOGIC_HYPOTHESIZE_HPP_

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dialogic/clauses.hpp"
#include "dialogic/emotion.hpp"
#include "dialogic/featureio.hpp"
#include "dialogic/interact.hpp"
#include "dialogic/types.hpp"

namespace dialogic::hypothesize {

// ---- concepts

struct ConceptNetwork {
  std::map<std::string, std::size_t> concepts;                     // lemma -> occurrences
  std::map<std::pair<std::string, std::string>, double> arcs;      // first < second

  bool operator==(const ConceptNetwork&) const = default;
};

// Returns relatedness in [0,1]; an empty function selects the co-occurrence fallback.
using Relatedness = std::function<double(const std::string&, const std::string&)>;

inline constexpr double kArcThreshold = 0.5;

std::string lemmatize(std::string_view word);

// Lemmas of the non-person nouns of one sentence, in token order (duplicates kept).
std::vector<std::string> sentence_concepts(const featureio::AnnotatedSentence& s);

ConceptNetwork build_concept_network(const std::vector<featureio::AnnotatedSentence>& sentences,
                                     const Relatedness& relatedness = {});

double breadth(const ConceptNetwork& n);
double depth(const ConceptNetwork& n);

// ---- team state

struct Motivation {
  double mean_words = 0.0;
  double clause_types = 0.0;
  double concepts = 0.0;
  bool operator==(const Motivation&) const = default;
};

inline constexpr std::size_t kDiffSize = 8;  // 4 changes (C,E,U,M) + 4 |Pearson|
using DiffVector = std::array<double, kDiffSize>;

struct TeamState {
  TimeInterval window;
  ConceptNetwork c;
  std::map<EmotionLabel, std::size_t> e;
  std::map<ParticipantId, double> u;  // utterances per minute
  std::map<ParticipantId, Motivation> m;
  DiffVector diff{};

  bool operator==(const TeamState&) const = default;
};

struct Turn {
  ParticipantId speaker;
  std::size_t words = 0;
  std::vector<clauses::ClauseRecord> records;
};

struct WindowData {
  TimeInterval window;
  std::vector<Turn> turns;
  std::vector<EmotionLabel> emotions;
  std::vector<ParticipantId> roster;  // listed speakers get zero U/M when silent
};

// Diff is left at zero; state_series fills it.
TeamState extract_team_state(const WindowData& w, const Relatedness& relatedness = {});

std::vector<TeamState> state_series(const std::vector<WindowData>& windows,
                                    const Relatedness& relatedness = {});

// Fills Diff of every state from its predecessors.
void fill_diff(std::vector<TeamState>& states);

double pearson(const std::vector<double>& x, const std::vector<double>& y);

// ---- similarity

struct SimScore {
  double c = 1.0;
  double e = 1.0;
  double u = 1.0;
  double m = 1.0;
  double diff = 1.0;
  double aggregate = 1.0;
};

SimScore sim_states(const TeamState& a, const TeamState& b);

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b);
double tv_similarity(const std::vector<double>& a, const std::vector<double>& b);
double l1_similarity(std::vector<double> a, std::vector<double> b);  // sorted descending, zero padded

double ig_similarity(const interact::InteractionGraph& a, const interact::InteractionGraph& b);

// ---- events and segments

struct Event {
  std::string team_id;
  double time_s = 0.0;
  TeamState state;
};

struct LinearSegment {
  std::string team_id;
  Event start;
  Event end;
  std::optional<interact::InteractionGraph> ig;  // interactions over the segment span
};

SimScore sim_events(const Event& a, const Event& b);

std::vector<Event> detect_events(const std::string& team_id, const std::vector<TeamState>& states, double tau);

std::vector<LinearSegment> segments_from_events(const std::vector<Event>& events);

// ---- hypotheses

struct Thresholds {
  double sim = 0.7;
  double dsim = 0.3;
  double tau = 0.5;
  double cluster = 0.7;
  bool include_self_pairs = false;
};

enum class Kind { kInvariant, kDifferentiated };
enum class Scope { kSameTeam, kCrossTeam };
std::string_view to_string(Kind k);
std::string_view to_string(Scope s);

struct Term {
  std::string param;  // Br, De, E, U, M, Diff, IG
  bool sim = true;
  double score = 0.0;
  bool operator==(const Term&) const = default;
};

struct ParamScores {
  std::vector<std::pair<std::string, double>> values;  // vacuous parameters omitted
};

ParamScores param_scores(const TeamState& a, const TeamState& b);

struct Hypothesis {
  Kind kind = Kind::kInvariant;
  Scope scope = Scope::kSameTeam;
  std::size_t seg_i = 0;
  std::size_t seg_j = 0;
  std::string team_i;
  std::string team_j;
  TimeInterval span_i;
  TimeInterval span_j;
  SimScore s0;
  SimScore s1;
  std::vector<Term> antecedent;
  std::vector<Term> consequent;
  std::vector<Term> conditioning;
  std::optional<Term> ig;  // auxiliary conditioning term
  bool null_consequent = false;

  std::string rendered() const;
};

struct PairResult {
  std::optional<Hypothesis> invariant;
  std::optional<Hypothesis> differentiated;
  std::optional<Hypothesis> null_consequent;  // DSim at the starts, Sim at the ends
};

PairResult eval_pair(const LinearSegment& a, const LinearSegment& b, const Thresholds& th);

struct HypothesisSets {
  std::map<std::string, std::vector<Hypothesis>> eq1S;
  std::map<std::string, std::vector<Hypothesis>> eq2S;
  std::vector<Hypothesis> eq1All;
  std::vector<Hypothesis> eq2All;
  std::size_t pairs_evaluated = 0;
};

// Sorts segments canonically (team id, start time) in place before pairing.
HypothesisSets extract_all(std::vector<LinearSegment>& segments, const Thresholds& th);

std::vector<std::vector<std::size_t>> cluster_segments(const std::vector<LinearSegment>& segments,
                                                       double theta);

struct ParameterRanges {
  std::map<std::string, std::pair<double, double>> numeric;
  std::set<EmotionLabel> emotions;
};

ParameterRanges abstract_ranges(const std::vector<LinearSegment>& segments,
                                const std::vector<std::size_t>& cluster);

// ---- interaction / emotion change check

enum class Verdict { kHolds, kFails };
std::string_view to_string(Verdict v);

struct DeltaVerdict {
  TimeInterval from;
  TimeInterval to;
  std::vector<ParticipantId> least_ig;
  std::optional<ParticipantId> max_e;
  Verdict verdict = Verdict::kFails;
};

std::vector<ParticipantId> least_delta_ig(const std::map<ParticipantId, double>& dig);

DeltaVerdict delta_verdict(const std::map<ParticipantId, double>& dig,
                           const std::map<ParticipantId, double>& de);

std::vector<DeltaVerdict> check_delta_hypothesis(const std::vector<interact::InteractionGraph>& ig_series,
                                                 const emotion::EmotionTimeline& timeline,
                                                 const std::vector<TimeInterval>& intervals,
                                                 EmotionLabel fallback = EmotionLabel::kSad);

// ---- output

std::string hypotheses_json(const HypothesisSets& sets, const std::vector<DeltaVerdict>& verdicts);
std::string clusters_json(const std::vector<LinearSegment>& segments,
                          const std::vector<std::vector<std::size_t>>& clusters);

}  // namespace dialogic::hypothesize

#endif  // DIALOGIC_HYPOTHESIZE_HPP_
