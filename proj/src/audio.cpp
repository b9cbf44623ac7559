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
#include <cstdint>
#include <cstring>

#include "dialogic/error.hpp"
#include "dialogic/featureio.hpp"
#include "dialogic/io.hpp"

namespace dialogic::featureio {
namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

std::uint32_t le32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) | (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t le16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put16(std::string& out, std::uint16_t v) {
  out.push_back(static_cast<char>(v & 0xFF));
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
}

}  // namespace

AudioBuffer load_wav(const std::filesystem::path& path) {
  const std::string bytes = read_text_file(path);
  const auto* data = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t size = bytes.size();
  if (size < 12 || std::memcmp(data, "RIFF", 4) != 0 || std::memcmp(data + 8, "WAVE", 4) != 0) {
    throw Error(ErrorCode::kNotWav, path.string() + " is not a RIFF/WAVE file");
  }

  std::uint16_t format = 0, channels = 0, bits = 0;
  std::uint32_t rate = 0;
  const unsigned char* pcm = nullptr;
  std::size_t pcm_bytes = 0;
  bool have_fmt = false;

  std::size_t pos = 12;
  while (pos + 8 <= size) {
    const unsigned char* chunk = data + pos;
    const std::size_t chunk_size = le32(chunk + 4);
    const std::size_t body = pos + 8;
    const std::size_t avail = std::min(chunk_size, size - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (avail < 16) throw Error(ErrorCode::kNotWav, "truncated fmt chunk");
      format = le16(data + body);
      channels = le16(data + body + 2);
      rate = le32(data + body + 4);
      bits = le16(data + body + 14);
      if (format == kFormatExtensible && avail >= 26) format = le16(data + body + 24);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      pcm = data + body;
      pcm_bytes = avail;
    }
    pos = body + chunk_size + (chunk_size & 1);
  }
  if (!have_fmt || pcm == nullptr) throw Error(ErrorCode::kNotWav, "missing fmt or data chunk");
  if (channels == 0 || rate == 0) throw Error(ErrorCode::kNotWav, "zero channels or sample rate");

  const bool int8 = format == kFormatPcm && bits == 8;
  const bool int16 = format == kFormatPcm && bits == 16;
  const bool f32 = format == kFormatFloat && bits == 32;
  if (!int8 && !int16 && !f32) {
    throw Error(ErrorCode::kUnsupportedEncoding,
                "format " + std::to_string(format) + " with " + std::to_string(bits) + " bits");
  }

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frames = pcm_bytes / (bytes_per_sample * channels);
  if (frames == 0) throw Error(ErrorCode::kEmptyAudio, path.string() + " holds no samples");

  AudioBuffer mono;
  mono.sample_rate = static_cast<int>(rate);
  mono.samples.resize(frames);
  for (std::size_t f = 0; f < frames; ++f) {
    double acc = 0.0;
    for (std::size_t c = 0; c < channels; ++c) {
      const unsigned char* s = pcm + (f * channels + c) * bytes_per_sample;
      double v = 0.0;
      if (int8) {
        v = (static_cast<double>(s[0]) - 128.0) / 128.0;
      } else if (int16) {
        v = static_cast<double>(static_cast<std::int16_t>(le16(s))) / 32768.0;
      } else {
        const std::uint32_t raw = le32(s);
        float x;
        std::memcpy(&x, &raw, sizeof x);
        v = std::isfinite(x) ? static_cast<double>(x) : 0.0;
      }
      acc += v;
    }
    mono.samples[f] = static_cast<float>(std::clamp(acc / channels, -1.0, 1.0));
  }
  if (mono.sample_rate != kCanonicalSampleRate) return resample_linear(mono, kCanonicalSampleRate);
  return mono;
}

void write_wav(const std::filesystem::path& path, const AudioBuffer& audio) {
  const auto n = static_cast<std::uint32_t>(audio.samples.size());
  std::string out;
  out.reserve(44 + 2 * n);
  out += "RIFF";
  put32(out, 36 + 2 * n);
  out += "WAVEfmt ";
  put32(out, 16);
  put16(out, kFormatPcm);
  put16(out, 1);
  put32(out, static_cast<std::uint32_t>(audio.sample_rate));
  put32(out, static_cast<std::uint32_t>(audio.sample_rate) * 2);
  put16(out, 2);
  put16(out, 16);
  out += "data";
  put32(out, 2 * n);
  for (float s : audio.samples) {
    const double clipped = std::clamp(static_cast<double>(s), -1.0, 1.0);
    const auto q = static_cast<std::int16_t>(std::lround(clipped * 32767.0));
    put16(out, static_cast<std::uint16_t>(q));
  }
  write_file_atomic(path, out);
}

AudioBuffer resample_linear(const AudioBuffer& audio, int target_rate) {
  if (audio.sample_rate == target_rate) return audio;
  AudioBuffer out;
  out.sample_rate = target_rate;
  const std::size_t n_in = audio.samples.size();
  if (n_in == 0) return out;
  const auto n_out = static_cast<std::size_t>(
      std::llround(static_cast<double>(n_in) * target_rate / audio.sample_rate));
  out.samples.resize(n_out);
  const double step = static_cast<double>(audio.sample_rate) / target_rate;
  for (std::size_t i = 0; i < n_out; ++i) {
    const double x = static_cast<double>(i) * step;
    const auto i0 = static_cast<std::size_t>(x);
    if (i0 + 1 >= n_in) {
      out.samples[i] = audio.samples[n_in - 1];
      continue;
    }
    const double frac = x - static_cast<double>(i0);
    out.samples[i] = static_cast<float>((1.0 - frac) * audio.samples[i0] + frac * audio.samples[i0 + 1]);
  }
  return out;
}

std::size_t window_count(std::size_t num_samples, int sample_rate) {
  const auto window = static_cast<std::size_t>(sample_rate);
  const auto hop = static_cast<std::size_t>(sample_rate / 10);
  if (num_samples < window) return 0;
  return (num_samples - window) / hop + 1;
}

std::vector<WindowSlice> frame_windows(const AudioBuffer& audio) {
  const std::size_t count = window_count(audio.samples.size(), audio.sample_rate);
  if (count == 0) {
    throw Error(ErrorCode::kTooShort,
                "need at least 1.0 s of audio, got " + std::to_string(audio.duration_s()) + " s");
  }
  const auto window = static_cast<std::size_t>(audio.sample_rate);
  const auto hop = static_cast<std::size_t>(audio.sample_rate / 10);
  std::vector<WindowSlice> out;
  out.reserve(count);
  const std::span<const float> all(audio.samples);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back({static_cast<double>(i) / 10.0, all.subspan(i * hop, window)});
  }
  return out;
}

std::vector<FeatureWindow> feature_windows(const AudioBuffer& audio, MelMode mode) {
  std::vector<FeatureWindow> out;
  for (const auto& w : frame_windows(audio)) {
    out.push_back({w.start_s, kWindowSeconds, mel_spectrogram(w.samples, mode)});
  }
  return out;
}

}  // namespace dialogic::featureio
