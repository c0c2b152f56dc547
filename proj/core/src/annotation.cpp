// core/src/annotation.cpp

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

#include "songkit/annotation.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "songkit/text.hpp"

namespace songkit {

namespace {

using nlohmann::json;

std::string word_prefix(std::size_t index) {
  return "word " + std::to_string(index) + ": ";
}

void collect_word_diagnostics(const WordAnnotation& word, std::size_t index,
                              std::vector<std::string>* out) {
  const std::string at = word_prefix(index);
  if (word.text.empty()) out->push_back(at + "text is empty");
  for (const auto& phone : word.phones) {
    if (phone.empty()) {
      out->push_back(at + "phone sequence contains an empty phone");
      break;
    }
  }
  if (word.duration_cs <= 0) out->push_back(at + "duration_cs must be positive");
  if (word.notes.empty()) {
    out->push_back(at + "notes must be nonempty");
    return;
  }
  long long note_sum = 0;
  for (std::size_t n = 0; n < word.notes.size(); ++n) {
    const NoteEvent& note = word.notes[n];
    if (note.pitch_midi < 0 || note.pitch_midi > 127) {
      out->push_back(at + "note " + std::to_string(n) + " pitch_midi " +
                     std::to_string(note.pitch_midi) + " outside [0, 127]");
    }
    if (note.duration_cs < 0) {
      out->push_back(at + "note " + std::to_string(n) + " duration_cs is negative");
    }
    note_sum += note.duration_cs;
  }
  if (std::llabs(note_sum - word.duration_cs) > kDurationSlackCs) {
    out->push_back(at + "note durations sum to " + std::to_string(note_sum) +
                   " but word duration is " + std::to_string(word.duration_cs) +
                   " (duration-sum invariant allows +/-" +
                   std::to_string(kDurationSlackCs) + " cs)");
  }
}

int require_int(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number_integer()) {
    throw std::runtime_error(std::string("missing or non-integer field '") + field + "'");
  }
  return j[field].get<int>();
}

std::string require_string(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw std::runtime_error(std::string("missing or non-string field '") + field + "'");
  }
  return j[field].get<std::string>();
}

}  // namespace

int SegmentAnnotation::total_duration_cs() const {
  int total = 0;
  for (const auto& word : words) total += word.duration_cs;
  return total;
}

std::vector<std::string> annotation_diagnostics(const SegmentAnnotation& segment) {
  std::vector<std::string> out;
  if (segment.segment_id.empty()) out.push_back("segment_id is empty");
  if (segment.words.empty()) out.push_back("words must be nonempty");
  for (std::size_t i = 0; i < segment.words.size(); ++i) {
    collect_word_diagnostics(segment.words[i], i, &out);
  }
  return out;
}

void check_audio(const AudioSegment& audio) {
  if (audio.samples.empty()) throw std::invalid_argument("audio samples must be nonempty");
  if (audio.sample_rate_hz <= 0) throw std::invalid_argument("sample_rate_hz must be positive");
  for (double s : audio.samples) {
    if (!std::isfinite(s) || s < -1.0 || s > 1.0) {
      throw std::invalid_argument("audio samples must be finite and within [-1, 1]");
    }
  }
}

void check_note(const NoteEvent& note) {
  if (note.pitch_midi < 0 || note.pitch_midi > 127) {
    throw std::invalid_argument("pitch_midi " + std::to_string(note.pitch_midi) +
                                " outside [0, 127]");
  }
  if (note.duration_cs < 0) throw std::invalid_argument("note duration_cs is negative");
}

void check_word(const WordAnnotation& word) {
  std::vector<std::string> diags;
  collect_word_diagnostics(word, 0, &diags);
  if (!diags.empty()) throw std::invalid_argument(diags.front());
}

void check_segment(const SegmentAnnotation& segment) {
  auto diags = annotation_diagnostics(segment);
  if (!diags.empty()) {
    throw std::invalid_argument("segment '" + segment.segment_id + "': " + diags.front());
  }
}

std::string annotation_to_line(const SegmentAnnotation& segment) {
  json j;
  j["schema_version"] = kAnnotationSchemaVersion;
  j["segment_id"] = segment.segment_id;
  if (!segment.audio_ref.empty()) j["audio_ref"] = segment.audio_ref;
  json words = json::array();
  for (const auto& word : segment.words) {
    json w;
    w["text"] = word.text;
    w["phones"] = word.phones;
    w["duration_cs"] = word.duration_cs;
    json notes = json::array();
    for (const auto& note : word.notes) {
      notes.push_back({{"pitch_midi", note.pitch_midi}, {"duration_cs", note.duration_cs}});
    }
    w["notes"] = std::move(notes);
    words.push_back(std::move(w));
  }
  j["words"] = std::move(words);
  return j.dump();
}

SegmentAnnotation annotation_from_line(const std::string& line) {
  json j = json::parse(line);
  if (!j.is_object()) throw std::runtime_error("record is not a JSON object");
  int version = require_int(j, "schema_version");
  if (version != kAnnotationSchemaVersion) {
    throw std::runtime_error("unsupported schema_version " + std::to_string(version));
  }
  SegmentAnnotation segment;
  segment.segment_id = require_string(j, "segment_id");
  if (j.contains("audio_ref")) segment.audio_ref = require_string(j, "audio_ref");
  if (!j.contains("words") || !j["words"].is_array()) {
    throw std::runtime_error("missing or non-array field 'words'");
  }
  for (const auto& w : j["words"]) {
    WordAnnotation word;
    word.text = require_string(w, "text");
    word.duration_cs = require_int(w, "duration_cs");
    if (!w.contains("phones") || !w["phones"].is_array()) {
      throw std::runtime_error("missing or non-array field 'phones'");
    }
    for (const auto& p : w["phones"]) {
      if (!p.is_string()) throw std::runtime_error("field 'phones' must hold strings");
      word.phones.push_back(p.get<std::string>());
    }
    if (!w.contains("notes") || !w["notes"].is_array()) {
      throw std::runtime_error("missing or non-array field 'notes'");
    }
    for (const auto& n : w["notes"]) {
      NoteEvent note;
      note.pitch_midi = require_int(n, "pitch_midi");
      note.duration_cs = require_int(n, "duration_cs");
      word.notes.push_back(note);
    }
    segment.words.push_back(std::move(word));
  }
  return segment;
}

std::vector<SegmentAnnotation> load_annotations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open annotation file: " + path);
  std::vector<SegmentAnnotation> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    SegmentAnnotation segment;
    try {
      segment = annotation_from_line(line);
    } catch (const json::exception& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": malformed record: " + e.what());
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
    auto diags = annotation_diagnostics(segment);
    if (!diags.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": invariant violation: " + diags.front());
    }
    out.push_back(std::move(segment));
  }
  return out;
}

void save_annotations(const std::vector<SegmentAnnotation>& annotations,
                      const std::string& path) {
  for (const auto& segment : annotations) check_segment(segment);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  for (const auto& segment : annotations) {
    out << annotation_to_line(segment) << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": expected word<TAB>phone phone ...");
    }
    std::string word = line.substr(0, tab);
    auto phones = split_whitespace(line.substr(tab + 1));
    if (phones.empty()) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) +
                               ": phone sequence for '" + word + "' is empty");
    }
    lexicon.entries[word] = std::move(phones);
  }
  return lexicon;
}

PhoneLookup phones_of(const std::string& word, const Lexicon& lexicon) {
  if (word.empty()) throw std::invalid_argument("phones_of: word is empty");
  auto it = lexicon.entries.find(word);
  if (it != lexicon.entries.end()) return {it->second, false};
  return {utf8_codepoints(word), true};
}

}  // namespace songkit
