// core/include/songkit/annotation.hpp

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
#include <unordered_map>
#include <vector>

namespace songkit {

// All durations are integer centiseconds (1 cs = 0.01 s).  Integer time keeps
// file round-trips exact and makes frame indices at a 1 cs hop coincide with
// timestamps.

/// Mono audio in [-1, 1].
struct AudioSegment {
  std::vector<double> samples;
  int sample_rate_hz = 16000;
  std::string id;
};

/// One note: MIDI pitch in [0, 127], pitch 0 is reserved for silence/rest.
struct NoteEvent {
  int pitch_midi = 0;
  int duration_cs = 0;

  bool operator==(const NoteEvent&) const = default;
};

/// One lyric word with its duration and the notes sung under it.
/// The note durations must sum to the word duration within +/- 1 cs
/// (rounding slack when a word duration is split across notes).
struct WordAnnotation {
  std::string text;
  std::vector<std::string> phones;  // empty when no lexicon entry was found
  int duration_cs = 0;
  std::vector<NoteEvent> notes;

  bool operator==(const WordAnnotation&) const = default;
};

/// One audio segment with its lyric/duration/note annotation.  Silence is
/// merged into words upstream, so the word durations tile the whole segment.
struct SegmentAnnotation {
  std::string segment_id;
  std::string audio_ref;  // empty = no audio file recorded
  std::vector<WordAnnotation> words;

  bool operator==(const SegmentAnnotation&) const = default;

  int total_duration_cs() const;
};

/// Allowed slack between a word duration and the sum of its note durations.
inline constexpr int kDurationSlackCs = 1;

/// Returns one human-readable diagnostic per violated invariant, with the
/// word index where applicable.  Empty result means the annotation is valid.
std::vector<std::string> annotation_diagnostics(const SegmentAnnotation& segment);

/// Throw std::invalid_argument naming the violated invariant.
void check_audio(const AudioSegment& audio);
void check_note(const NoteEvent& note);
void check_word(const WordAnnotation& word);
void check_segment(const SegmentAnnotation& segment);

// ---------------------------------------------------------------------------
// Persistence: line-delimited JSON, one segment per line, schema_version 1.
// See README for the exact schema.
// ---------------------------------------------------------------------------

inline constexpr int kAnnotationSchemaVersion = 1;

/// Parses and validates a whole annotation file.  Throws std::runtime_error
/// naming the line and cause on malformed records or invariant violations.
std::vector<SegmentAnnotation> load_annotations(const std::string& path);

/// Writes annotations so that load_annotations() reproduces them
/// field-for-field.  Inputs are validated first.
void save_annotations(const std::vector<SegmentAnnotation>& annotations,
                      const std::string& path);

std::string annotation_to_line(const SegmentAnnotation& segment);
SegmentAnnotation annotation_from_line(const std::string& line);

// ---------------------------------------------------------------------------
// Lexicon: word -> phone sequence.
// ---------------------------------------------------------------------------

struct Lexicon {
  std::unordered_map<std::string, std::vector<std::string>> entries;
};

/// One entry per line: word<TAB>phone phone ..., UTF-8.  A later entry for
/// the same word overrides an earlier one.
Lexicon load_lexicon(const std::string& path);

struct PhoneLookup {
  std::vector<std::string> phones;
  bool fallback = false;  // true when the word was out of vocabulary
};

/// Lexicon entry when present; otherwise one phone per code point of the
/// word, flagged as fallback.  Total: never fails for a nonempty word.
PhoneLookup phones_of(const std::string& word, const Lexicon& lexicon);

}  // namespace songkit
