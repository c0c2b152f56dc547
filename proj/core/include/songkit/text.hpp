// core/include/songkit/text.hpp

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
#include <string_view>
#include <vector>

namespace songkit {

/// Splits on runs of ASCII whitespace; never returns empty tokens.
std::vector<std::string> split_whitespace(std::string_view text);

/// One string per Unicode code point. Invalid UTF-8 bytes are kept as
/// single-byte units so the split is total.
std::vector<std::string> utf8_codepoints(std::string_view text);

bool contains_whitespace(std::string_view text);

}  // namespace songkit
