// core/include/songkit/wav.hpp

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

#include "songkit/annotation.hpp"

namespace songkit {

/// PCM16 mono only.  Samples are clamped to [-1, 1] and quantized with
/// round(x * 32767).
void write_wav(const std::string& path, const AudioSegment& audio);

/// Reads a PCM16 mono RIFF file; other encodings are rejected.
AudioSegment read_wav(const std::string& path);

}  // namespace songkit
