// core/include/songkit/metrics.hpp

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

#include <stdexcept>
#include <string>
#include <vector>

#include "songkit/annotation.hpp"

namespace songkit {

/// Error counts from a minimal-cost Levenshtein alignment with unit costs.
struct EditStats {
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int ref_len = 0;

  int errors() const { return substitutions + deletions + insertions; }
  double rate() const {
    if (ref_len == 0) throw std::invalid_argument("WER undefined for empty reference");
    return static_cast<double>(errors()) / static_cast<double>(ref_len);
  }
};

/// Minimal edit distance with unit costs and a deterministic traceback
/// (diagonal preferred, then deletion, then insertion).
template <class Token>
EditStats edit_stats(const std::vector<Token>& reference, const std::vector<Token>& hypothesis) {
  const std::size_t m = reference.size();
  const std::size_t n = hypothesis.size();
  std::vector<int> cost((m + 1) * (n + 1), 0);
  auto at = [n](std::size_t i, std::size_t j) { return i * (n + 1) + j; };
  for (std::size_t i = 1; i <= m; ++i) cost[at(i, 0)] = static_cast<int>(i);
  for (std::size_t j = 1; j <= n; ++j) cost[at(0, j)] = static_cast<int>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      int sub = cost[at(i - 1, j - 1)] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      int del = cost[at(i - 1, j)] + 1;  // reference token dropped
      int ins = cost[at(i, j - 1)] + 1;  // extra hypothesis token
      int best = sub;
      if (del < best) best = del;
      if (ins < best) best = ins;
      cost[at(i, j)] = best;
    }
  }

  EditStats stats;
  stats.ref_len = static_cast<int>(m);
  std::size_t i = m;
  std::size_t j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0) {
      int diag = cost[at(i - 1, j - 1)] + (reference[i - 1] == hypothesis[j - 1] ? 0 : 1);
      if (diag == cost[at(i, j)]) {
        if (!(reference[i - 1] == hypothesis[j - 1])) ++stats.substitutions;
        --i;
        --j;
        continue;
      }
    }
    if (i > 0 && cost[at(i - 1, j)] + 1 == cost[at(i, j)]) {
      ++stats.deletions;
      --i;
      continue;
    }
    ++stats.insertions;
    --j;
  }
  return stats;
}

/// (S + D + I) / |reference|.  Throws std::invalid_argument on an empty
/// reference.
double wer(const std::vector<std::string>& reference, const std::vector<std::string>& hypothesis);

/// WER over the concatenated phone expansions of the word sequences,
/// via phones_of (lexicon entry or per-code-point fallback).
double phone_wer(const std::vector<std::string>& reference_words,
                 const std::vector<std::string>& hypothesis_words, const Lexicon& lexicon);
double phone_wer(const SegmentAnnotation& reference, const SegmentAnnotation& hypothesis,
                 const Lexicon& lexicon);

/// Zero-pads the shorter sequence at the end, then takes the mean absolute
/// difference over the padded length.  Throws when both inputs are empty.
double padded_mae(const std::vector<int>& predicted, const std::vector<int>& truth);

/// WER over the pitch symbol sequences, one token per note.
double note_pitch_wer(const std::vector<NoteEvent>& predicted,
                      const std::vector<NoteEvent>& truth);

struct MatchScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  int matched = 0;
  int predicted = 0;
  int truth = 0;
};

/// Greedy earliest-first one-to-one matching of onset times within the
/// tolerance.  Precision is defined as 0 when there are no predictions.
MatchScore boundary_f1(std::vector<int> predicted_cs, std::vector<int> truth_cs,
                       int tolerance_cs = 3);

/// Corpus-level report over two annotation files matched by segment_id.
/// WER-style metrics pool edit counts; MAE-style metrics pool absolute
/// differences over the padded lengths.
struct EvalReport {
  double lyric_wer = 0.0;
  double phone_wer = 0.0;
  double word_dur_mae_cs = 0.0;
  double note_num_mae = 0.0;
  double pitch_wer = 0.0;
  double note_dur_mae_cs = 0.0;
  int segments = 0;
};

EvalReport evaluate_annotations(const std::vector<SegmentAnnotation>& predicted,
                                const std::vector<SegmentAnnotation>& truth,
                                const Lexicon& lexicon);

}  // namespace songkit
