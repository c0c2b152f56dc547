// core/src/metrics.cpp

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

#include "songkit/metrics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace songkit {

namespace {

std::vector<std::string> expand_phones(const std::vector<std::string>& words,
                                       const Lexicon& lexicon) {
  std::vector<std::string> phones;
  for (const auto& word : words) {
    auto lookup = phones_of(word, lexicon);
    phones.insert(phones.end(), lookup.phones.begin(), lookup.phones.end());
  }
  return phones;
}

std::vector<std::string> word_texts(const SegmentAnnotation& segment) {
  std::vector<std::string> out;
  out.reserve(segment.words.size());
  for (const auto& word : segment.words) out.push_back(word.text);
  return out;
}

// Pooled-count accumulators for corpus metrics.
struct WerPool {
  long long errors = 0;
  long long ref_len = 0;
  void add(const EditStats& s) {
    errors += s.errors();
    ref_len += s.ref_len;
  }
  double rate() const {
    if (ref_len == 0) throw std::invalid_argument("WER undefined for empty reference pool");
    return static_cast<double>(errors) / static_cast<double>(ref_len);
  }
};

struct MaePool {
  long long abs_sum = 0;
  long long count = 0;
  void add(const std::vector<int>& pred, const std::vector<int>& truth) {
    std::size_t len = std::max(pred.size(), truth.size());
    for (std::size_t i = 0; i < len; ++i) {
      int p = i < pred.size() ? pred[i] : 0;
      int t = i < truth.size() ? truth[i] : 0;
      abs_sum += std::llabs(static_cast<long long>(p) - t);
    }
    count += static_cast<long long>(len);
  }
  double mean() const { return count == 0 ? 0.0 : static_cast<double>(abs_sum) / count; }
};

}  // namespace

double wer(const std::vector<std::string>& reference, const std::vector<std::string>& hypothesis) {
  if (reference.empty()) throw std::invalid_argument("wer: reference must be nonempty");
  return edit_stats(reference, hypothesis).rate();
}

double phone_wer(const std::vector<std::string>& reference_words,
                 const std::vector<std::string>& hypothesis_words, const Lexicon& lexicon) {
  if (reference_words.empty()) throw std::invalid_argument("phone_wer: reference must be nonempty");
  return wer(expand_phones(reference_words, lexicon), expand_phones(hypothesis_words, lexicon));
}

double phone_wer(const SegmentAnnotation& reference, const SegmentAnnotation& hypothesis,
                 const Lexicon& lexicon) {
  return phone_wer(word_texts(reference), word_texts(hypothesis), lexicon);
}

double padded_mae(const std::vector<int>& predicted, const std::vector<int>& truth) {
  if (predicted.empty() && truth.empty()) {
    throw std::invalid_argument("padded_mae: both sequences are empty");
  }
  MaePool pool;
  pool.add(predicted, truth);
  return pool.mean();
}

double note_pitch_wer(const std::vector<NoteEvent>& predicted,
                      const std::vector<NoteEvent>& truth) {
  if (truth.empty()) throw std::invalid_argument("note_pitch_wer: truth must be nonempty");
  std::vector<int> pred_pitches;
  std::vector<int> truth_pitches;
  pred_pitches.reserve(predicted.size());
  truth_pitches.reserve(truth.size());
  for (const auto& n : predicted) pred_pitches.push_back(n.pitch_midi);
  for (const auto& n : truth) truth_pitches.push_back(n.pitch_midi);
  return edit_stats(truth_pitches, pred_pitches).rate();
}

MatchScore boundary_f1(std::vector<int> predicted_cs, std::vector<int> truth_cs,
                       int tolerance_cs) {
  if (tolerance_cs < 0) throw std::invalid_argument("boundary_f1: tolerance must be >= 0");
  std::sort(predicted_cs.begin(), predicted_cs.end());
  std::sort(truth_cs.begin(), truth_cs.end());
  MatchScore score;
  score.predicted = static_cast<int>(predicted_cs.size());
  score.truth = static_cast<int>(truth_cs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < predicted_cs.size() && j < truth_cs.size()) {
    long long diff = static_cast<long long>(predicted_cs[i]) - truth_cs[j];
    if (std::llabs(diff) <= tolerance_cs) {
      ++score.matched;
      ++i;
      ++j;
    } else if (diff < 0) {
      ++i;
    } else {
      ++j;
    }
  }
  score.precision = score.predicted == 0 ? 0.0 : static_cast<double>(score.matched) / score.predicted;
  score.recall = score.truth == 0 ? 0.0 : static_cast<double>(score.matched) / score.truth;
  score.f1 = (score.precision + score.recall) == 0.0
                 ? 0.0
                 : 2.0 * score.precision * score.recall / (score.precision + score.recall);
  return score;
}

EvalReport evaluate_annotations(const std::vector<SegmentAnnotation>& predicted,
                                const std::vector<SegmentAnnotation>& truth,
                                const Lexicon& lexicon) {
  std::map<std::string, const SegmentAnnotation*> by_id;
  for (const auto& segment : predicted) {
    if (!by_id.emplace(segment.segment_id, &segment).second) {
      throw std::runtime_error("duplicate predicted segment_id: " + segment.segment_id);
    }
  }

  WerPool lyric_pool;
  WerPool phone_pool;
  WerPool pitch_pool;
  MaePool word_dur_pool;
  MaePool note_num_pool;
  MaePool note_dur_pool;

  EvalReport report;
  for (const auto& ref : truth) {
    auto it = by_id.find(ref.segment_id);
    if (it == by_id.end()) {
      throw std::runtime_error("no prediction for segment_id: " + ref.segment_id);
    }
    const SegmentAnnotation& hyp = *it->second;
    ++report.segments;

    lyric_pool.add(edit_stats(word_texts(ref), word_texts(hyp)));
    phone_pool.add(edit_stats(expand_phones(word_texts(ref), lexicon),
                              expand_phones(word_texts(hyp), lexicon)));

    std::vector<int> ref_word_durs;
    std::vector<int> hyp_word_durs;
    std::vector<int> ref_counts;
    std::vector<int> hyp_counts;
    std::vector<int> ref_pitches;
    std::vector<int> hyp_pitches;
    std::vector<int> ref_note_durs;
    std::vector<int> hyp_note_durs;
    for (const auto& w : ref.words) {
      ref_word_durs.push_back(w.duration_cs);
      ref_counts.push_back(static_cast<int>(w.notes.size()));
      for (const auto& n : w.notes) {
        ref_pitches.push_back(n.pitch_midi);
        ref_note_durs.push_back(n.duration_cs);
      }
    }
    for (const auto& w : hyp.words) {
      hyp_word_durs.push_back(w.duration_cs);
      hyp_counts.push_back(static_cast<int>(w.notes.size()));
      for (const auto& n : w.notes) {
        hyp_pitches.push_back(n.pitch_midi);
        hyp_note_durs.push_back(n.duration_cs);
      }
    }
    pitch_pool.add(edit_stats(ref_pitches, hyp_pitches));
    word_dur_pool.add(hyp_word_durs, ref_word_durs);
    note_num_pool.add(hyp_counts, ref_counts);
    note_dur_pool.add(hyp_note_durs, ref_note_durs);
  }
  if (report.segments == 0) throw std::runtime_error("evaluate_annotations: no truth segments");

  report.lyric_wer = lyric_pool.rate();
  report.phone_wer = phone_pool.rate();
  report.pitch_wer = pitch_pool.rate();
  report.word_dur_mae_cs = word_dur_pool.mean();
  report.note_num_mae = note_num_pool.mean();
  report.note_dur_mae_cs = note_dur_pool.mean();
  return report;
}

}  // namespace songkit
