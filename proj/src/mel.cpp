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

#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "dialogic/error.hpp"
#include "dialogic/featureio.hpp"

namespace dialogic::featureio {

MelGeometry mel_geometry(MelMode mode) {
  // Padding is chosen so (16000 + 2*pad - frame_length) / hop + 1 hits the
  // required frame count exactly.
  if (mode == MelMode::kDiar) return {400, 512, 160, 120, 100, 40};
  return {1024, 2048, 128, 512, 126, 128};
}

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

std::vector<double> mel_filterbank(std::size_t bands, std::size_t fft_size, int sample_rate) {
  const std::size_t bins = fft_size / 2 + 1;
  const double nyquist = sample_rate / 2.0;
  const double mel_max = hz_to_mel(nyquist);
  std::vector<double> edges(bands + 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    edges[i] = mel_to_hz(mel_max * static_cast<double>(i) / static_cast<double>(bands + 1));
  }
  std::vector<double> fb(bands * bins, 0.0);
  for (std::size_t b = 0; b < bands; ++b) {
    const double lo = edges[b], mid = edges[b + 1], hi = edges[b + 2];
    for (std::size_t k = 0; k < bins; ++k) {
      const double f = static_cast<double>(k) * sample_rate / static_cast<double>(fft_size);
      const double w = std::min((f - lo) / (mid - lo), (hi - f) / (hi - mid));
      fb[b * bins + k] = std::max(0.0, w);
    }
  }
  return fb;
}

MelSpectrogram mel_spectrogram(std::span<const float> slice, MelMode mode) {
  if (slice.size() != static_cast<std::size_t>(kCanonicalSampleRate)) {
    throw Error(ErrorCode::kBadLength,
                "expected 16000 samples, got " + std::to_string(slice.size()));
  }
  const MelGeometry g = mel_geometry(mode);
  const std::size_t n = slice.size();
  const std::size_t bins = g.fft_size / 2 + 1;

  // numpy-style reflect padding (edge sample not repeated).
  std::vector<double> padded(n + 2 * g.pad);
  for (std::size_t i = 0; i < padded.size(); ++i) {
    std::ptrdiff_t src = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(g.pad);
    if (src < 0) src = -src;
    const auto last = static_cast<std::ptrdiff_t>(n - 1);
    if (src > last) src = 2 * last - src;
    padded[i] = slice[static_cast<std::size_t>(src)];
  }

  std::vector<double> window(g.frame_length);
  for (std::size_t i = 0; i < g.frame_length; ++i) {
    window[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                     static_cast<double>(g.frame_length));
  }
  const std::vector<double> fb = mel_filterbank(g.bands, g.fft_size, kCanonicalSampleRate);

  MelSpectrogram out;
  out.mode = mode;
  out.frames = g.frames;
  out.bands = g.bands;
  out.values.resize(g.frames * g.bands);

  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::HalfSpectrum);
  std::vector<double> frame(g.fft_size, 0.0);
  std::vector<std::complex<double>> spectrum;
  std::vector<double> power(bins);
  for (std::size_t t = 0; t < g.frames; ++t) {
    const std::size_t offset = t * g.hop;
    for (std::size_t i = 0; i < g.frame_length; ++i) frame[i] = padded[offset + i] * window[i];
    fft.fwd(spectrum, frame);
    for (std::size_t k = 0; k < bins; ++k) power[k] = std::norm(spectrum[k]);
    for (std::size_t b = 0; b < g.bands; ++b) {
      double energy = 0.0;
      const double* row = fb.data() + b * bins;
      for (std::size_t k = 0; k < bins; ++k) energy += row[k] * power[k];
      const double db = energy > 0.0 ? 10.0 * std::log10(energy) : kLogFloorDb;
      out.values[t * g.bands + b] = std::max(db, kLogFloorDb);
    }
  }
  return out;
}

}  // namespace dialogic::featureio
