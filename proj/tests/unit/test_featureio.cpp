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


#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstring>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "dialogic/error.hpp"
#include "dialogic/featureio.hpp"
#include "dialogic/io.hpp"
#include "test_util.hpp"

using namespace dialogic;
using namespace dialogic::featureio;

namespace {

void put(std::string& s, std::uint32_t v, int bytes) {
  for (int i = 0; i < bytes; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

// Minimal WAV writer independent of the library's.
std::string wav_bytes(int format, int channels, int rate, int bits, const std::string& pcm) {
  std::string s = "RIFF";
  put(s, 36 + static_cast<std::uint32_t>(pcm.size()), 4);
  s += "WAVEfmt ";
  put(s, 16, 4);
  put(s, format, 2);
  put(s, channels, 2);
  put(s, rate, 4);
  put(s, rate * channels * bits / 8, 4);
  put(s, channels * bits / 8, 2);
  put(s, bits, 2);
  s += "data";
  put(s, static_cast<std::uint32_t>(pcm.size()), 4);
  return s + pcm;
}

std::string float_pcm(const std::vector<float>& v) {
  std::string s;
  for (float x : v) {
    std::uint32_t raw;
    std::memcpy(&raw, &x, 4);
    put(s, raw, 4);
  }
  return s;
}

ErrorCode code_of(const auto& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kIoError;
}

std::vector<float> tone(double hz, double amp, std::size_t n, int rate) {
  std::vector<float> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<float>(amp * std::sin(2 * std::numbers::pi * hz * i / rate));
  return v;
}

// Direct-DFT log-mel of one frame; independent of the FFT path.
std::vector<double> oracle_frame(const std::vector<float>& x, std::size_t t, std::size_t frame_len, std::size_t nfft,
                                 std::size_t hop, std::size_t pad, std::size_t bands) {
  const long n = static_cast<long>(x.size());
  std::vector<double> frame(nfft, 0.0);
  for (std::size_t i = 0; i < frame_len; ++i) {
    long src = static_cast<long>(t * hop + i) - static_cast<long>(pad);
    if (src < 0) src = -src;
    if (src >= n) src = 2 * (n - 1) - src;
    const double w = 0.5 * (1 - std::cos(2 * std::numbers::pi * i / frame_len));
    frame[i] = x[static_cast<std::size_t>(src)] * w;
  }
  const std::size_t bins = nfft / 2 + 1;
  std::vector<double> power(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    std::complex<double> acc = 0;
    for (std::size_t i = 0; i < nfft; ++i) acc += frame[i] * std::polar(1.0, -2 * std::numbers::pi * k * i / nfft);
    power[k] = std::norm(acc);
  }
  const double top = 2595 * std::log10(1 + 8000.0 / 700);
  std::vector<double> out(bands);
  for (std::size_t b = 0; b < bands; ++b) {
    const auto hz = [&](double j) { return 700 * (std::pow(10, top * j / (bands + 1) / 2595) - 1); };
    const double lo = hz(b), mid = hz(b + 1), hi = hz(b + 2);
    double e = 0;
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = 16000.0 * k / nfft;
      double w = 0;
      if (f > lo && f <= mid) w = (f - lo) / (mid - lo);
      else if (f > mid && f < hi) w = (hi - f) / (hi - mid);
      e += w * power[k];
    }
    out[b] = std::max(-80.0, e > 0 ? 10 * std::log10(e) : -80.0);
  }
  return out;
}

}  // namespace

TEST_CASE("load_wav decodes 16-bit silence") {
  testutil::TempDir dir("wav");
  write_file_atomic(dir / "s.wav", wav_bytes(1, 1, 16000, 16, std::string(32000, '\0')));
  const auto a = load_wav(dir / "s.wav");
  CHECK(a.sample_rate == 16000);
  REQUIRE(a.samples.size() == 16000);
  for (float s : a.samples) CHECK(s == 0.0f);
}

TEST_CASE("load_wav averages stereo channels") {
  testutil::TempDir dir("wav");
  std::vector<float> inter;
  for (int i = 0; i < 1000; ++i) {
    inter.push_back(0.5f);
    inter.push_back(-0.5f);
  }
  write_file_atomic(dir / "st.wav", wav_bytes(3, 2, 16000, 32, float_pcm(inter)));
  const auto a = load_wav(dir / "st.wav");
  REQUIRE(a.samples.size() == 1000);
  for (float s : a.samples) CHECK(s == 0.0f);
}

TEST_CASE("load_wav decodes 8-bit PCM") {
  testutil::TempDir dir("wav");
  std::string pcm = {static_cast<char>(128), static_cast<char>(192), static_cast<char>(64)};
  write_file_atomic(dir / "b.wav", wav_bytes(1, 1, 16000, 8, pcm));
  const auto a = load_wav(dir / "b.wav");
  REQUIRE(a.samples.size() == 3);
  CHECK(a.samples[0] == doctest::Approx(0.0));
  CHECK(a.samples[1] == doctest::Approx(0.5));
  CHECK(a.samples[2] == doctest::Approx(-0.5));
}

TEST_CASE("load_wav resamples 8 kHz tone to 16 kHz with the peak at 440 Hz") {
  testutil::TempDir dir("wav");
  const auto src = tone(440.0, 0.5, 8000, 8000);
  write_file_atomic(dir / "t.wav", wav_bytes(3, 1, 8000, 32, float_pcm(src)));
  const auto a = load_wav(dir / "t.wav");
  REQUIRE(a.samples.size() == 16000);
  // Direct DFT, 1 Hz bins.
  std::size_t best = 0;
  double best_mag = -1;
  for (std::size_t k = 1; k < 8000; ++k) {
    std::complex<double> acc = 0;
    const double w = -2 * std::numbers::pi * static_cast<double>(k) / 16000.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) acc += static_cast<double>(a.samples[i]) * std::polar(1.0, w * i);
    if (std::abs(acc) > best_mag) {
      best_mag = std::abs(acc);
      best = k;
    }
  }
  CHECK(std::abs(static_cast<long>(best) - 440) <= 1);
}

TEST_CASE("load_wav errors") {
  testutil::TempDir dir("wav");
  write_file_atomic(dir / "junk.wav", "hello world, not a wave");
  CHECK(code_of([&] { load_wav(dir / "junk.wav"); }) == ErrorCode::kNotWav);
  write_file_atomic(dir / "u.wav", wav_bytes(1, 1, 16000, 24, std::string(30, '\0')));
  CHECK(code_of([&] { load_wav(dir / "u.wav"); }) == ErrorCode::kUnsupportedEncoding);
  write_file_atomic(dir / "e.wav", wav_bytes(1, 1, 16000, 16, ""));
  CHECK(code_of([&] { load_wav(dir / "e.wav"); }) == ErrorCode::kEmptyAudio);
}

TEST_CASE("write_wav round trips within quantization") {
  testutil::TempDir dir("wav");
  AudioBuffer a;
  a.samples = tone(300.0, 0.8, 4000, 16000);
  write_wav(dir / "r.wav", a);
  const auto b = load_wav(dir / "r.wav");
  REQUIRE(b.samples.size() == a.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) CHECK(std::abs(a.samples[i] - b.samples[i]) < 1e-4);
}

TEST_CASE("frame_windows counts and starts") {
  AudioBuffer a;
  a.samples.assign(16000, 0.0f);
  auto w = frame_windows(a);
  REQUIRE(w.size() == 1);
  CHECK(w[0].start_s == 0.0);
  a.samples.assign(32000, 0.0f);
  w = frame_windows(a);
  REQUIRE(w.size() == 11);
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i].samples.size() == 16000);
    CHECK(w[i].start_s == doctest::Approx(0.1 * i).epsilon(1e-12));
  }
  CHECK(w.back().start_s == doctest::Approx(1.0));
  a.samples.assign(8000, 0.0f);
  CHECK(code_of([&] { frame_windows(a); }) == ErrorCode::kTooShort);
  CHECK(window_count(16000 * 180) == 1791);
}

TEST_CASE("mel shapes and silence floor") {
  const std::vector<float> silence(16000, 0.0f);
  const auto d = mel_spectrogram(silence, MelMode::kDiar);
  CHECK(d.frames == 100);
  CHECK(d.bands == 40);
  REQUIRE(d.values.size() == 4000);
  for (double v : d.values) CHECK(v == -80.0);
  const auto s = mel_spectrogram(tone(700, 0.3, 16000, 16000), MelMode::kSer);
  CHECK(s.frames == 126);
  CHECK(s.bands == 128);
  CHECK(s.values.size() == 126u * 128u);
  CHECK(code_of([&] { mel_spectrogram(std::vector<float>(15999), MelMode::kDiar); }) == ErrorCode::kBadLength);
}

TEST_CASE("mel matches a direct DFT oracle") {
  std::mt19937_64 rng(3);
  std::vector<float> x(16000);
  for (auto& v : x) v = static_cast<float>(static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5);
  const auto d = mel_spectrogram(x, MelMode::kDiar);
  for (std::size_t t : {0u, 1u, 50u, 99u}) {
    const auto o = oracle_frame(x, t, 400, 512, 160, 120, 40);
    for (std::size_t b = 0; b < 40; ++b) CHECK(d.at(t, b) == doctest::Approx(o[b]).epsilon(1e-9));
  }
  const auto s = mel_spectrogram(x, MelMode::kSer);
  for (std::size_t t : {0u, 125u}) {
    const auto o = oracle_frame(x, t, 1024, 2048, 128, 512, 128);
    for (std::size_t b = 0; b < 128; ++b) CHECK(s.at(t, b) == doctest::Approx(o[b]).epsilon(1e-9));
  }
}

TEST_CASE("1 kHz tone peaks in the band whose triangle covers 1 kHz most") {
  const double top = hz_to_mel(8000.0);
  std::size_t expect = 0;
  double best = -1;
  for (std::size_t b = 0; b < 40; ++b) {
    const double lo = mel_to_hz(top * b / 41), mid = mel_to_hz(top * (b + 1) / 41), hi = mel_to_hz(top * (b + 2) / 41);
    const double w = std::min((1000 - lo) / (mid - lo), (hi - 1000) / (hi - mid));
    if (w > best) {
      best = w;
      expect = b;
    }
  }
  const auto m = mel_spectrogram(tone(1000, 0.5, 16000, 16000), MelMode::kDiar);
  for (std::size_t t = 0; t < m.frames; ++t) {
    std::size_t arg = 0;
    for (std::size_t b = 1; b < m.bands; ++b)
      if (m.at(t, b) > m.at(t, arg)) arg = b;
    CHECK(arg == expect);
  }
}

TEST_CASE("doubling amplitude adds 6.02 dB to unfloored cells") {
  std::mt19937_64 rng(11);
  std::vector<float> x(16000), y(16000);
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = static_cast<float>((static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5) * 0.4);
    y[i] = 2.0f * x[i];
  }
  for (auto mode : {MelMode::kDiar, MelMode::kSer}) {
    const auto a = mel_spectrogram(x, mode);
    const auto b = mel_spectrogram(y, mode);
    for (std::size_t i = 0; i < a.values.size(); ++i)
      if (a.values[i] > -79.0) CHECK(std::abs(b.values[i] - a.values[i] - 20 * std::log10(2.0)) < 0.01);
  }
}

TEST_CASE("filterbank rows peak at one and span 0 to 8 kHz") {
  const auto fb = mel_filterbank(40, 512, 16000);
  const std::size_t bins = 257;
  for (std::size_t b = 0; b < 40; ++b) {
    double mx = 0;
    for (std::size_t k = 0; k < bins; ++k) {
      CHECK(fb[b * bins + k] >= 0.0);
      mx = std::max(mx, fb[b * bins + k]);
    }
    CHECK(mx > 0.5);
    CHECK(mx <= 1.0);
  }
  CHECK(mel_to_hz(hz_to_mel(1234.5)) == doctest::Approx(1234.5));
}

TEST_CASE("embeddings parse, validate and round trip") {
  const std::string text = "start_s,e0,e1,e2,e3\n0.000,1,0,0,0\n0.100,0,1,0,0\n0.200,0.5,0.25,0,1\n";
  const auto rows = parse_embeddings(text);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) CHECK(r.components.size() == 4);
  CHECK(rows[2].components[1] == 0.25);
  CHECK(format_embeddings(rows) == text);
  CHECK(code_of([] { parse_embeddings("start_s,e0,e1\n0.0,1,2\n0.1,1\n"); }) == ErrorCode::kDimensionMismatch);
  CHECK(code_of([] { parse_embeddings("start_s,e0\n0.2,1\n0.1,1\n"); }) == ErrorCode::kSchemaError);
  CHECK(code_of([] { parse_embeddings("start,e0\n0.0,1\n"); }) == ErrorCode::kSchemaError);
  CHECK(code_of([] { parse_embeddings("start_s,e0\n0.0,abc\n"); }) == ErrorCode::kSchemaError);
}

TEST_CASE("emotions reject labels outside the seven classes") {
  const std::string ok = "utt_index,second_index,label\n0,0,Sad\n0,1,Happy\n";
  const auto rows = parse_emotions(ok);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].label == EmotionLabel::kHappy);
  CHECK(format_emotions(rows) == ok);
  CHECK(code_of([] { parse_emotions("utt_index,second_index,label\n0,0,Calm\n"); }) == ErrorCode::kUnknownLabel);
}

TEST_CASE("texts check cardinality and quoting") {
  const std::string text = "utt_index,text\n0,\"Hello, there\"\n1,\n2,\"He said \"\"hi\"\"\"\n";
  const auto rows = parse_texts(text, 3);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].text == "Hello, there");
  CHECK(rows[1].text.empty());
  CHECK(rows[2].text == "He said \"hi\"");
  CHECK(format_texts(rows) == text);
  CHECK(code_of([&] { parse_texts(text, 4); }) == ErrorCode::kSchemaError);
  CHECK(code_of([] { parse_texts("utt_index,text\n0,a\n0,b\n"); }) == ErrorCode::kSchemaError);
}

TEST_CASE("annotations validate and round trip") {
  const std::string line =
      "{\"utt_index\":2,\"sentence\":\"I got one\",\"tokens\":[{\"word\":\"I\",\"pos\":\"NOUN\",\"category\":\"PERSON\"},"
      "{\"word\":\"got\",\"pos\":\"VERB\",\"category\":\"NONE\"}]}\n";
  const auto rows = parse_annotations(line);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].utt_index == 2);
  CHECK(rows[0].tokens[0].category == EntityCategory::kPerson);
  CHECK(format_annotations(rows) == line);
  CHECK(parse_annotations(format_annotations(rows)) == rows);
  CHECK(code_of([] { parse_annotations("{\"utt_index\":0,\"sentence\":\"x\",\"tokens\":[{\"word\":\"x\",\"pos\":\"VERB\",\"category\":\"PERSON\"}]}\n"); }) ==
        ErrorCode::kSchemaError);
  CHECK(code_of([] { parse_annotations("{\"utt_index\":0,\"sentence\":\"x\",\"tokens\":[{\"word\":\"x\",\"pos\":\"NOUNS\",\"category\":\"NONE\"}]}\n"); }) ==
        ErrorCode::kSchemaError);
  CHECK(code_of([] { parse_annotations("not json\n"); }) == ErrorCode::kSchemaError);
}

TEST_CASE("utterance files and rosters") {
  const std::vector<Utterance> u = {{ParticipantId("A"), 0.0, 1.25}, {ClusterIndex{1}, 1.25, 3.0}};
  const auto text = format_utterances(u);
  CHECK(text == "speaker,start_s,end_s\nA,0.000,1.250\n1,1.250,3.000\n");
  const auto back = parse_utterances(text);
  REQUIRE(back.size() == 2);
  CHECK(speaker_name(back[1].speaker) == "1");
  CHECK(back[0].end_s == 1.25);
  CHECK(code_of([] { parse_utterances("speaker,start_s,end_s\nA,2.0,1.0\n"); }) == ErrorCode::kSchemaError);

  testutil::TempDir dir("roster");
  write_file_atomic(dir / "r.txt", "P1\n\n  P2 \nP3\n");
  CHECK(read_roster(dir / "r.txt") == std::vector<ParticipantId>{"P1", "P2", "P3"});
  write_file_atomic(dir / "d.txt", "P1\nP1\n");
  CHECK(code_of([&] { read_roster(dir / "d.txt"); }) == ErrorCode::kSchemaError);
}

TEST_CASE("shipped corpus files are canonical") {
  const std::string dir = DIALOGIC_FIXTURES "/corpus/";
  const auto emb = read_text_file(dir + "embeddings.csv");
  CHECK(format_embeddings(parse_embeddings(emb)) == emb);
  const auto emo = read_text_file(dir + "emotions.csv");
  CHECK(format_emotions(parse_emotions(emo)) == emo);
  const auto txt = read_text_file(dir + "texts.csv");
  CHECK(format_texts(parse_texts(txt)) == txt);
  const auto ann = read_text_file(dir + "annotations.jsonl");
  CHECK(format_annotations(parse_annotations(ann)) == ann);
}
