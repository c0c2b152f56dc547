// core/src/wav.cpp

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

#include "songkit/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace songkit {

namespace {

void put_u32(std::vector<char>* out, std::uint32_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
  out->push_back(static_cast<char>((v >> 16) & 0xFF));
  out->push_back(static_cast<char>((v >> 24) & 0xFF));
}

void put_u16(std::vector<char>* out, std::uint16_t v) {
  out->push_back(static_cast<char>(v & 0xFF));
  out->push_back(static_cast<char>((v >> 8) & 0xFF));
}

std::uint32_t get_u32(const char* p) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(p[0])) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(p[1])) << 8) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(p[2])) << 16) |
         (static_cast<std::uint32_t>(static_cast<unsigned char>(p[3])) << 24);
}

std::uint16_t get_u16(const char* p) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(p[0]) |
                                    (static_cast<unsigned char>(p[1]) << 8));
}

}  // namespace

void write_wav(const std::string& path, const AudioSegment& audio) {
  check_audio(audio);
  const std::uint32_t data_bytes = static_cast<std::uint32_t>(audio.samples.size() * 2);
  std::vector<char> bytes;
  bytes.reserve(44 + data_bytes);
  bytes.insert(bytes.end(), {'R', 'I', 'F', 'F'});
  put_u32(&bytes, 36 + data_bytes);
  bytes.insert(bytes.end(), {'W', 'A', 'V', 'E', 'f', 'm', 't', ' '});
  put_u32(&bytes, 16);
  put_u16(&bytes, 1);  // PCM
  put_u16(&bytes, 1);  // mono
  put_u32(&bytes, static_cast<std::uint32_t>(audio.sample_rate_hz));
  put_u32(&bytes, static_cast<std::uint32_t>(audio.sample_rate_hz) * 2);
  put_u16(&bytes, 2);
  put_u16(&bytes, 16);
  bytes.insert(bytes.end(), {'d', 'a', 't', 'a'});
  put_u32(&bytes, data_bytes);
  for (double s : audio.samples) {
    double clamped = std::clamp(s, -1.0, 1.0);
    auto q = static_cast<std::int16_t>(
        std::clamp(std::lround(clamped * 32767.0), -32768L, 32767L));
    put_u16(&bytes, static_cast<std::uint16_t>(q));
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path);
}

AudioSegment read_wav(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open wav file: " + path);
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    throw std::runtime_error("not a RIFF/WAVE file: " + path);
  }

  AudioSegment audio;
  audio.id = path;
  bool have_fmt = false;
  bool have_data = false;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const char* chunk_id = bytes.data() + pos;
    std::uint32_t chunk_size = get_u32(bytes.data() + pos + 4);
    std::size_t body = pos + 8;
    if (body + chunk_size > bytes.size()) {
      throw std::runtime_error("truncated chunk in wav file: " + path);
    }
    if (std::memcmp(chunk_id, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw std::runtime_error("short fmt chunk: " + path);
      std::uint16_t format = get_u16(bytes.data() + body);
      std::uint16_t channels = get_u16(bytes.data() + body + 2);
      std::uint32_t rate = get_u32(bytes.data() + body + 4);
      std::uint16_t bits = get_u16(bytes.data() + body + 14);
      if (format != 1 || bits != 16) {
        throw std::runtime_error("only PCM16 wav is supported: " + path);
      }
      if (channels != 1) throw std::runtime_error("only mono wav is supported: " + path);
      audio.sample_rate_hz = static_cast<int>(rate);
      have_fmt = true;
    } else if (std::memcmp(chunk_id, "data", 4) == 0) {
      if (!have_fmt) throw std::runtime_error("data chunk before fmt chunk: " + path);
      std::size_t count = chunk_size / 2;
      audio.samples.resize(count);
      for (std::size_t i = 0; i < count; ++i) {
        auto v = static_cast<std::int16_t>(get_u16(bytes.data() + body + 2 * i));
        audio.samples[i] = static_cast<double>(v) / 32768.0;
      }
      have_data = true;
    }
    pos = body + chunk_size + (chunk_size & 1u);  // chunks are word-aligned
  }
  if (!have_data) throw std::runtime_error("no data chunk in wav file: " + path);
  return audio;
}

}  // namespace songkit
