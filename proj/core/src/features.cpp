// core/src/features.cpp

// Copyright 2026  Songkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "songkit/features.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace songkit {

namespace {

// Feature values are log-compressed and divided by this to land in a range
// the tanh encoder handles without input whitening.
constexpr double kLogScale = 4.0;
constexpr double kBandFloor = 1e-4;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// In-place iterative radix-2 FFT; size must be a power of two.
void fft(std::vector<std::complex<double>>* buf) {
  auto& a = *buf;
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wlen(std::cos(angle), std::sin(angle));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        std::complex<double> u = a[i + k];
        std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

double hz_to_midi(double hz) {
  return 69.0 + 12.0 * std::log2(hz / 440.0);
}

}  // namespace

double midi_to_hz(double midi) {
  return 440.0 * std::pow(2.0, (midi - 69.0) / 12.0);
}

FrameSeries frame_features(const AudioSegment& audio, const FeatureConfig& config) {
  check_audio(audio);
  if (config.bands <= 1) throw std::invalid_argument("frame_features: need at least 2 bands");
  if (config.hop_cs <= 0) throw std::invalid_argument("frame_features: hop_cs must be positive");

  const auto window_samples = static_cast<std::size_t>(
      std::lround(config.window_ms / 1000.0 * audio.sample_rate_hz));
  const auto hop_samples =
      static_cast<std::size_t>(config.hop_cs) * static_cast<std::size_t>(audio.sample_rate_hz) / 100;
  if (hop_samples == 0 || window_samples < hop_samples) {
    throw std::invalid_argument("frame_features: window must be at least one hop");
  }
  if (audio.samples.size() < window_samples) {
    throw std::invalid_argument("frame_features: audio shorter than one analysis window");
  }

  const std::size_t fft_size = next_pow2(window_samples);
  const std::size_t n_bins = fft_size / 2;
  const double bin_hz = static_cast<double>(audio.sample_rate_hz) / static_cast<double>(fft_size);

  std::vector<double> hann(window_samples);
  double window_sum = 0.0;
  for (std::size_t i = 0; i < window_samples; ++i) {
    hann[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                   static_cast<double>(window_samples));
    window_sum += hann[i];
  }

  // Triangular filters with centers uniformly spaced in log frequency
  // (equivalently, in MIDI pitch). Triangle half-width = center spacing, so
  // a pure tone excites two neighboring bands with a ratio that moves
  // smoothly with pitch.
  const int bands = config.bands;
  const double spacing = (config.band_hi_midi - config.band_lo_midi) / (bands - 1);
  std::vector<std::vector<std::pair<std::size_t, double>>> filters(bands);
  for (std::size_t k = 1; k <= n_bins; ++k) {
    const double midi = hz_to_midi(static_cast<double>(k) * bin_hz);
    for (int j = 0; j < bands; ++j) {
      const double center = config.band_lo_midi + j * spacing;
      const double w = 1.0 - std::abs(midi - center) / spacing;
      if (w > 0.0) filters[j].emplace_back(k, w);
    }
  }

  FrameSeries series;
  series.hop_cs = config.hop_cs;
  series.dim = 1 + bands;
  series.frames = static_cast<int>((audio.samples.size() + hop_samples - 1) / hop_samples);
  series.data.assign(static_cast<std::size_t>(series.frames) * series.dim, 0.0);

  std::vector<std::complex<double>> buf(fft_size);
  std::vector<double> magnitudes(n_bins + 1, 0.0);
  for (int f = 0; f < series.frames; ++f) {
    const std::size_t begin = static_cast<std::size_t>(f) * hop_samples;
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < fft_size; ++i) {
      const std::size_t src = begin + i;
      double s = (i < window_samples && src < audio.samples.size()) ? audio.samples[src] : 0.0;
      if (i < window_samples) {
        sum_sq += s * s;
        buf[i] = s * hann[i];
      } else {
        buf[i] = 0.0;
      }
    }
    fft(&buf);
    for (std::size_t k = 1; k <= n_bins; ++k) {
      // Amplitude-normalized so a unit sine peaks near 1.
      magnitudes[k] = 2.0 * std::abs(buf[k]) / window_sum;
    }

    auto row = series.row(f);
    const double mean_square = sum_sq / static_cast<double>(window_samples);
    row[0] = std::log10(mean_square + config.log_floor) / kLogScale;
    for (int j = 0; j < bands; ++j) {
      double acc = 0.0;
      for (const auto& [bin, weight] : filters[j]) acc += weight * magnitudes[bin];
      row[1 + j] = std::log10(acc + kBandFloor) / kLogScale;
    }
  }
  return series;
}

}  // namespace songkit
