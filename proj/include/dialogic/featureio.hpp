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

#ifndef DIALOGIC_FEATUREIO_HPP_
#define DIALOGIC_FEATUREIO_HPP_

// Audio decoding, fixed-shape mel-spectrogram windows, and the canonical
// provider file formats (embeddings, emotions, texts, annotations).

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dialogic/types.hpp"

namespace dialogic::featureio {

inline constexpr int kCanonicalSampleRate = 16000;
inline constexpr double kWindowSeconds = 1.0;
inline constexpr double kWindowHopSeconds = 0.1;
inline constexpr double kLogFloorDb = -80.0;

struct AudioBuffer {
  std::vector<float> samples;
  int sample_rate = kCanonicalSampleRate;

  double duration_s() const {
    return static_cast<double>(samples.size()) / static_cast<double>(sample_rate);
  }
};

/// Decodes RIFF/WAVE (8/16-bit PCM or 32-bit float), downmixes to mono by
/// channel mean and resamples to 16 kHz by linear interpolation.
AudioBuffer load_wav(const std::filesystem::path& path);

/// Writes mono 16-bit PCM. Samples are clipped to [-1, 1].
void write_wav(const std::filesystem::path& path, const AudioBuffer& audio);

/// Linear-interpolation resampler.
AudioBuffer resample_linear(const AudioBuffer& audio, int target_rate);

struct WindowSlice {
  double start_s = 0.0;
  std::span<const float> samples;  // exactly one second
};

/// One-second windows every 0.1 s; the last window is the last full second.
/// Throws TooShort when the buffer holds less than one second.
std::vector<WindowSlice> frame_windows(const AudioBuffer& audio);

/// Number of windows frame_windows() yields for a given sample count.
std::size_t window_count(std::size_t num_samples, int sample_rate = kCanonicalSampleRate);

enum class MelMode { kDiar, kSer };

struct MelSpectrogram {
  MelMode mode = MelMode::kDiar;
  std::size_t frames = 0;
  std::size_t bands = 0;
  std::vector<double> values;  // row-major frames x bands, dB

  double at(std::size_t frame, std::size_t band) const { return values[frame * bands + band]; }
};

struct MelGeometry {
  std::size_t frame_length;
  std::size_t fft_size;
  std::size_t hop;
  std::size_t pad;  // reflect padding on each side
  std::size_t frames;
  std::size_t bands;
};

MelGeometry mel_geometry(MelMode mode);

/// Triangular HTK-mel filters spanning 0 .. sample_rate/2; row-major
/// bands x (fft_size/2 + 1).
std::vector<double> mel_filterbank(std::size_t bands, std::size_t fft_size, int sample_rate);

double hz_to_mel(double hz);
double mel_to_hz(double mel);

/// Log-mel spectrogram of one 16 kHz, 16000-sample slice. DIAR is 100x40,
/// SER is 126x128; values are 10*log10(power) floored at -80 dB.
MelSpectrogram mel_spectrogram(std::span<const float> slice, MelMode mode);

struct FeatureWindow {
  double start_s = 0.0;
  double duration_s = kWindowSeconds;
  MelSpectrogram spectrogram;
};

std::vector<FeatureWindow> feature_windows(const AudioBuffer& audio, MelMode mode);

// ---------------------------------------------------------------------------
// Provider files

using EmbeddingVector = std::vector<double>;

struct EmbeddingRow {
  double start_s = 0.0;
  EmbeddingVector components;
};

struct EmotionRow {
  std::size_t utt_index = 0;
  std::size_t second_index = 0;
  EmotionLabel label = EmotionLabel::kNeutral;
};

struct TextRow {
  std::size_t utt_index = 0;
  std::string text;
};

enum class PartOfSpeech { kNoun, kVerb, kAdj, kAdv, kOther };
enum class EntityCategory {
  kPerson,
  kOrganization,
  kMisc,
  kDate,
  kTime,
  kDuration,
  kSet,
  kLocation,
  kNone
};

std::string to_string(PartOfSpeech pos);
std::string to_string(EntityCategory category);

struct AnnotatedToken {
  std::string word;
  PartOfSpeech pos = PartOfSpeech::kOther;
  EntityCategory category = EntityCategory::kNone;

  bool operator==(const AnnotatedToken&) const = default;
};

struct AnnotatedSentence {
  std::size_t utt_index = 0;
  std::string sentence;
  std::vector<AnnotatedToken> tokens;

  bool operator==(const AnnotatedSentence&) const = default;
};

std::vector<EmbeddingRow> read_embeddings(const std::filesystem::path& path);
std::vector<EmotionRow> read_emotions(const std::filesystem::path& path);
/// `expected_rows`, when given, must equal the row count (one row per utterance).
std::vector<TextRow> read_texts(const std::filesystem::path& path,
                                std::optional<std::size_t> expected_rows = std::nullopt);
std::vector<AnnotatedSentence> read_annotations(const std::filesystem::path& path);

// String-level parsers behind the readers above.
std::vector<EmbeddingRow> parse_embeddings(std::string_view text);
std::vector<EmotionRow> parse_emotions(std::string_view text);
std::vector<TextRow> parse_texts(std::string_view text,
                                 std::optional<std::size_t> expected_rows = std::nullopt);
std::vector<AnnotatedSentence> parse_annotations(std::string_view text);

std::string format_embeddings(const std::vector<EmbeddingRow>& rows);
std::string format_emotions(const std::vector<EmotionRow>& rows);
std::string format_texts(const std::vector<TextRow>& rows);
std::string format_annotations(const std::vector<AnnotatedSentence>& rows);

// Canonical utterances file: header speaker,start_s,end_s; times with 3 decimals.
std::string format_utterances(const std::vector<Utterance>& utts);
std::vector<Utterance> parse_utterances(std::string_view text);
std::vector<Utterance> read_utterances(const std::filesystem::path& path);

/// One participant ID per non-blank line, in introduction order.
std::vector<ParticipantId> read_roster(const std::filesystem::path& path);

}  // namespace dialogic::featureio

#endif  // DIALOGIC_FEATUREIO_HPP_
