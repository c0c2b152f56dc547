// core/include/songkit/arformat.hpp

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
#include <utility>
#include <vector>

#include "songkit/annotation.hpp"

namespace songkit {

// Text format for the sequence heads: the word tokens, one literal <SEP>
// token, then one integer per word.  A WordDuration record carries per-word
// durations in centiseconds; a NoteNumber record carries per-word note
// counts.  Tokens are space-delimited, so tokens themselves must contain no
// whitespace and must not equal the separator.

inline constexpr const char* kArSeparator = "<SEP>";

enum class ArKind { WordDuration, NoteNumber };

const char* ar_kind_name(ArKind kind);

struct ArRecord {
  ArKind kind = ArKind::WordDuration;
  std::vector<std::string> tokens;
  std::vector<int> values;  // same length as tokens, every value >= 1

  bool operator==(const ArRecord&) const = default;
};

/// Throws std::invalid_argument naming the violated rule.
void check_record(const ArRecord& record);

/// "tok tok ... <SEP> v v ..." with single spaces.
std::string encode_ar(const ArRecord& record);

/// Inverse of encode_ar; whitespace-normalized.  Throws std::runtime_error
/// on a missing/duplicate separator, token/value length mismatch,
/// non-integer values, or a value below 1.
ArRecord decode_ar(const std::string& text, ArKind kind);

/// Deterministic stand-in for the sequence transcription models: projects a
/// ground-truth annotation onto its WordDuration and NoteNumber records.
std::pair<ArRecord, ArRecord> ar_oracle(const SegmentAnnotation& annotation);

// One record per line with a kind prefix, e.g. "WD|la la <SEP> 30 40".
std::string to_prefixed_line(const ArRecord& record);
ArRecord from_prefixed_line(const std::string& line);

std::vector<ArRecord> load_ar_records(const std::string& path);
void save_ar_records(const std::vector<ArRecord>& records, const std::string& path);

}  // namespace songkit
