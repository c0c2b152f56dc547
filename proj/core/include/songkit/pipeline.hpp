// core/include/songkit/pipeline.hpp

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

#include <string>
#include <vector>

#include "songkit/annotation.hpp"

namespace songkit {

// ---------------------------------------------------------------------------
// Silence-based resegmentation.
// ---------------------------------------------------------------------------

struct SilenceParams {
  double energy_threshold_db = -40.0;  // RMS dB relative to full scale
  int min_silence_cs = 30;             // runs shorter than this stay voiced
  int frame_hop_cs = 1;
};

struct VoicedSpan {
  AudioSegment audio;
  int offset_cs = 0;  // position of the span in the original timeline
};

/// Cuts at every maximal run of sub-threshold frames lasting at least
/// min_silence_cs and drops those runs.  The returned spans plus the dropped
/// silence tile the input exactly.  Fully silent audio yields an empty
/// result.
std::vector<VoicedSpan> segment_by_silence(const AudioSegment& audio,
                                           const SilenceParams& params = {});

// ---------------------------------------------------------------------------
// Transcript filtering.
// ---------------------------------------------------------------------------

enum class GateDecision { AcceptWord, AcceptPhone, Reject };

const char* gate_decision_name(GateDecision decision);

/// AcceptWord iff word_wer < word_threshold; else AcceptPhone iff
/// phone_wer < phone_threshold; else Reject.  Both comparisons are strict.
GateDecision filter_gate(double word_wer, double phone_wer, double word_threshold = 0.3,
                         double phone_threshold = 0.4);

// ---------------------------------------------------------------------------
// Aligner output refinement.
// ---------------------------------------------------------------------------

inline constexpr const char* kSilenceLabel = "SIL";

/// One aligner interval.  Within a sequence the intervals must be contiguous
/// and non-overlapping with start < end.
struct AlignedPhone {
  std::string phone;
  int start_cs = 0;
  int end_cs = 0;

  bool is_silence() const { return phone == kSilenceLabel; }
  bool operator==(const AlignedPhone&) const = default;
};

/// Removes every silence interval: its span extends the end of the preceding
/// phone; leading silence extends the start of the following phone.  The
/// total span is preserved.  Throws when the alignment is entirely silence.
std::vector<AlignedPhone> merge_silence(const std::vector<AlignedPhone>& alignment);

/// One interval per line: start_cs<TAB>end_cs<TAB>label, label SIL for
/// silence.
std::vector<AlignedPhone> load_alignment(const std::string& path);
void save_alignment(const std::vector<AlignedPhone>& alignment, const std::string& path);

// ---------------------------------------------------------------------------
// Zero-pitch repair.
// ---------------------------------------------------------------------------

struct PitchFillResult {
  std::vector<NoteEvent> notes;
  bool all_silent = false;  // every pitch was 0; notes returned unchanged
};

/// Each zero-pitch note takes the pitch of the nearest non-zero neighbor,
/// preferring the preceding one on distance ties.  Durations never change.
PitchFillResult pitch_fill(const std::vector<NoteEvent>& notes);

}  // namespace songkit
