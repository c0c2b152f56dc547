// core/include/songkit/features.hpp

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

#pragma once

#include <span>
#include <vector>

#include "songkit/annotation.hpp"

namespace songkit {

/// Per-frame feature matrix with a fixed hop.  Row-major, frames x dim.
struct FrameSeries {
  int frames = 0;
  int dim = 0;
  int hop_cs = 1;
  std::vector<double> data;

  std::span<const double> row(int i) const {
    return {data.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
  }
  std::span<double> row(int i) {
    return {data.data() + static_cast<std::size_t>(i) * dim, static_cast<std::size_t>(dim)};
  }
};

/// Configuration of the acoustic front end.  With the defaults a frame is a
/// 25 ms Hann window advanced by 10 ms, so frame indices coincide with
/// centiseconds.
struct FeatureConfig {
  double window_ms = 25.0;
  int hop_cs = 1;
  int bands = 16;
  // Triangular filters with centers uniformly spaced in log frequency
  // between these two MIDI pitches.
  double band_lo_midi = 36.0;
  double band_hi_midi = 96.0;
  double log_floor = 1e-8;  // energy floor inside the log
};

double midi_to_hz(double midi);

/// Per-frame vector: log energy followed by `bands` log band magnitudes.
/// Frame i starts at sample i*hop; windows reaching past the end are
/// zero-padded, giving ceil(samples/hop) frames.  Deterministic for
/// identical input.  Throws when the audio is shorter than one window.
FrameSeries frame_features(const AudioSegment& audio, const FeatureConfig& config = {});

}  // namespace songkit
