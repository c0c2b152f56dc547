// core/src/arformat.cpp

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

#include "songkit/arformat.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "songkit/text.hpp"

namespace songkit {

const char* ar_kind_name(ArKind kind) {
  return kind == ArKind::WordDuration ? "WordDuration" : "NoteNumber";
}

void check_record(const ArRecord& record) {
  if (record.tokens.empty()) throw std::invalid_argument("ArRecord: tokens must be nonempty");
  if (record.tokens.size() != record.values.size()) {
    throw std::invalid_argument("ArRecord: |values| = " + std::to_string(record.values.size()) +
                                " but |tokens| = " + std::to_string(record.tokens.size()));
  }
  for (const auto& token : record.tokens) {
    if (token.empty()) throw std::invalid_argument("ArRecord: empty token");
    if (contains_whitespace(token)) {
      throw std::invalid_argument("ArRecord: token '" + token +
                                  "' contains whitespace; not representable");
    }
    if (token == kArSeparator) {
      throw std::invalid_argument("ArRecord: token equals the separator; not representable");
    }
  }
  for (int v : record.values) {
    if (v < 1) {
      throw std::invalid_argument(std::string("ArRecord: ") + ar_kind_name(record.kind) +
                                  " value " + std::to_string(v) + " must be >= 1");
    }
  }
}

std::string encode_ar(const ArRecord& record) {
  check_record(record);
  std::string out;
  for (const auto& token : record.tokens) {
    out += token;
    out += ' ';
  }
  out += kArSeparator;
  for (int v : record.values) {
    out += ' ';
    out += std::to_string(v);
  }
  return out;
}

ArRecord decode_ar(const std::string& text, ArKind kind) {
  auto parts = split_whitespace(text);
  ArRecord record;
  record.kind = kind;
  std::size_t sep_count = 0;
  std::size_t sep_pos = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] == kArSeparator) {
      ++sep_count;
      sep_pos = i;
    }
  }
  if (sep_count == 0) throw std::runtime_error("decode_ar: missing <SEP> token");
  if (sep_count > 1) throw std::runtime_error("decode_ar: duplicate <SEP> token");

  record.tokens.assign(parts.begin(), parts.begin() + sep_pos);
  for (std::size_t i = sep_pos + 1; i < parts.size(); ++i) {
    const std::string& s = parts[i];
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw std::runtime_error("decode_ar: non-integer value '" + s + "'");
    }
    record.values.push_back(value);
  }
  if (record.tokens.empty()) throw std::runtime_error("decode_ar: no tokens before <SEP>");
  if (record.tokens.size() != record.values.size()) {
    throw std::runtime_error("decode_ar: " + std::to_string(record.tokens.size()) +
                             " tokens but " + std::to_string(record.values.size()) + " values");
  }
  for (int v : record.values) {
    if (v < 1) {
      throw std::runtime_error(std::string("decode_ar: ") + ar_kind_name(kind) + " value " +
                               std::to_string(v) + " must be >= 1");
    }
  }
  return record;
}

std::pair<ArRecord, ArRecord> ar_oracle(const SegmentAnnotation& annotation) {
  check_segment(annotation);
  ArRecord durations;
  durations.kind = ArKind::WordDuration;
  ArRecord counts;
  counts.kind = ArKind::NoteNumber;
  for (const auto& word : annotation.words) {
    durations.tokens.push_back(word.text);
    durations.values.push_back(word.duration_cs);
    counts.tokens.push_back(word.text);
    counts.values.push_back(static_cast<int>(word.notes.size()));
  }
  check_record(durations);
  check_record(counts);
  return {std::move(durations), std::move(counts)};
}

std::string to_prefixed_line(const ArRecord& record) {
  return (record.kind == ArKind::WordDuration ? std::string("WD|") : std::string("NN|")) +
         encode_ar(record);
}

ArRecord from_prefixed_line(const std::string& line) {
  if (line.rfind("WD|", 0) == 0) return decode_ar(line.substr(3), ArKind::WordDuration);
  if (line.rfind("NN|", 0) == 0) return decode_ar(line.substr(3), ArKind::NoteNumber);
  throw std::runtime_error("record line must start with WD| or NN|");
}

std::vector<ArRecord> load_ar_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open record file: " + path);
  std::vector<ArRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(from_prefixed_line(line));
    } catch (const std::runtime_error& e) {
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

void save_ar_records(const std::vector<ArRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  for (const auto& record : records) out << to_prefixed_line(record) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace songkit
