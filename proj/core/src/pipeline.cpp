// core/src/pipeline.cpp

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

#include "songkit/pipeline.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace songkit {

namespace {

void check_alignment(const std::vector<AlignedPhone>& alignment) {
  if (alignment.empty()) throw std::invalid_argument("alignment is empty");
  for (std::size_t i = 0; i < alignment.size(); ++i) {
    const auto& p = alignment[i];
    if (p.start_cs >= p.end_cs) {
      throw std::invalid_argument("alignment interval " + std::to_string(i) +
                                  " has start_cs >= end_cs");
    }
    if (i > 0 && alignment[i - 1].end_cs != p.start_cs) {
      throw std::invalid_argument("alignment intervals must be contiguous (gap before interval " +
                                  std::to_string(i) + ")");
    }
  }
}

int parse_int_field(const std::string& s, const char* what, std::size_t line_no,
                    const std::string& path) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error(path + ":" + std::to_string(line_no) + ": non-integer " + what +
                             " '" + s + "'");
  }
  return value;
}

}  // namespace

std::vector<VoicedSpan> segment_by_silence(const AudioSegment& audio,
                                           const SilenceParams& params) {
  check_audio(audio);
  if (params.frame_hop_cs <= 0) throw std::invalid_argument("frame_hop_cs must be positive");
  if (params.min_silence_cs < params.frame_hop_cs) {
    throw std::invalid_argument("min_silence_cs must be >= frame_hop_cs");
  }

  const std::size_t hop_samples =
      static_cast<std::size_t>(params.frame_hop_cs) * audio.sample_rate_hz / 100;
  if (hop_samples == 0) throw std::invalid_argument("frame hop shorter than one sample");
  const std::size_t n_frames = (audio.samples.size() + hop_samples - 1) / hop_samples;
  const double threshold_rms = std::pow(10.0, params.energy_threshold_db / 20.0);

  std::vector<bool> silent(n_frames);
  for (std::size_t f = 0; f < n_frames; ++f) {
    std::size_t begin = f * hop_samples;
    std::size_t end = std::min(begin + hop_samples, audio.samples.size());
    double sum_sq = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum_sq += audio.samples[i] * audio.samples[i];
    double rms = std::sqrt(sum_sq / static_cast<double>(end - begin));
    silent[f] = rms < threshold_rms;
  }

  // A frame is removed only when it sits in a silent run of at least
  // min_silence frames; shorter silent runs stay voiced.
  const std::size_t min_silence_frames =
      static_cast<std::size_t>(params.min_silence_cs / params.frame_hop_cs);
  std::vector<bool> removed(n_frames, false);
  for (std::size_t f = 0; f < n_frames;) {
    if (!silent[f]) {
      ++f;
      continue;
    }
    std::size_t run_end = f;
    while (run_end < n_frames && silent[run_end]) ++run_end;
    if (run_end - f >= min_silence_frames) {
      for (std::size_t i = f; i < run_end; ++i) removed[i] = true;
    }
    f = run_end;
  }

  std::vector<VoicedSpan> spans;
  for (std::size_t f = 0; f < n_frames;) {
    if (removed[f]) {
      ++f;
      continue;
    }
    std::size_t span_end = f;
    while (span_end < n_frames && !removed[span_end]) ++span_end;
    VoicedSpan span;
    span.offset_cs = static_cast<int>(f) * params.frame_hop_cs;
    span.audio.sample_rate_hz = audio.sample_rate_hz;
    span.audio.id = audio.id.empty() ? "" : audio.id + "+" + std::to_string(span.offset_cs);
    std::size_t begin = f * hop_samples;
    std::size_t end = std::min(span_end * hop_samples, audio.samples.size());
    span.audio.samples.assign(audio.samples.begin() + static_cast<std::ptrdiff_t>(begin),
                              audio.samples.begin() + static_cast<std::ptrdiff_t>(end));
    spans.push_back(std::move(span));
    f = span_end;
  }
  return spans;
}

const char* gate_decision_name(GateDecision decision) {
  switch (decision) {
    case GateDecision::AcceptWord: return "AcceptWord";
    case GateDecision::AcceptPhone: return "AcceptPhone";
    default: return "Reject";
  }
}

GateDecision filter_gate(double word_wer, double phone_wer, double word_threshold,
                         double phone_threshold) {
  if (word_wer < 0.0 || phone_wer < 0.0) {
    throw std::invalid_argument("filter_gate: WER inputs must be >= 0");
  }
  if (word_wer < word_threshold) return GateDecision::AcceptWord;
  if (phone_wer < phone_threshold) return GateDecision::AcceptPhone;
  return GateDecision::Reject;
}

std::vector<AlignedPhone> merge_silence(const std::vector<AlignedPhone>& alignment) {
  check_alignment(alignment);
  std::vector<AlignedPhone> out;
  int pending_start = -1;  // start of a leading silence run not yet absorbed
  for (const auto& interval : alignment) {
    if (interval.is_silence()) {
      if (out.empty()) {
        if (pending_start < 0) pending_start = interval.start_cs;
      } else {
        out.back().end_cs = interval.end_cs;
      }
      continue;
    }
    AlignedPhone phone = interval;
    if (out.empty() && pending_start >= 0) {
      phone.start_cs = pending_start;
      pending_start = -1;
    }
    out.push_back(phone);
  }
  if (out.empty()) throw std::invalid_argument("merge_silence: alignment is entirely silence");
  return out;
}

std::vector<AlignedPhone> load_alignment(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open alignment file: " + path);
  std::vector<AlignedPhone> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected start_cs<TAB>end_cs<TAB>label");
    }
    AlignedPhone p;
    p.start_cs = parse_int_field(line.substr(0, tab1), "start_cs", line_no, path);
    p.end_cs = parse_int_field(line.substr(tab1 + 1, tab2 - tab1 - 1), "end_cs", line_no, path);
    p.phone = line.substr(tab2 + 1);
    if (p.phone.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": empty label");
    }
    out.push_back(std::move(p));
  }
  return out;
}

void save_alignment(const std::vector<AlignedPhone>& alignment, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  for (const auto& p : alignment) {
    out << p.start_cs << '\t' << p.end_cs << '\t' << p.phone << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

PitchFillResult pitch_fill(const std::vector<NoteEvent>& notes) {
  if (notes.empty()) throw std::invalid_argument("pitch_fill: notes must be nonempty");
  PitchFillResult result;
  result.notes = notes;

  bool any_pitched = false;
  for (const auto& note : notes) {
    if (note.pitch_midi != 0) {
      any_pitched = true;
      break;
    }
  }
  if (!any_pitched) {
    result.all_silent = true;
    return result;
  }

  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(notes.size());
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    if (notes[i].pitch_midi != 0) continue;
    std::ptrdiff_t best = -1;
    std::ptrdiff_t best_dist = n + 1;
    // Scan outward; the preceding side wins distance ties.
    for (std::ptrdiff_t d = 1; d <= n; ++d) {
      if (i - d >= 0 && notes[i - d].pitch_midi != 0) {
        best = i - d;
        best_dist = d;
        break;
      }
      if (i + d < n && notes[i + d].pitch_midi != 0) {
        best = i + d;
        best_dist = d;
        break;
      }
    }
    (void)best_dist;
    result.notes[i].pitch_midi = notes[best].pitch_midi;
  }
  return result;
}

}  // namespace songkit
