// Copyright 2026 The radevent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "radevent/text.h"

#include "radevent/errors.h"

namespace radevent {
namespace {

// Length of the UTF-8 sequence starting at s[i], or 0 if it is malformed.
std::size_t SequenceLength(std::string_view s, std::size_t i) {
  const auto lead = static_cast<unsigned char>(s[i]);
  std::size_t len;
  char32_t min;
  char32_t cp;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) {
    len = 2, min = 0x80, cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    len = 3, min = 0x800, cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    len = 4, min = 0x10000, cp = lead & 0x07;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const auto c = static_cast<unsigned char>(s[i + k]);
    if ((c & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (c & 0x3F);
  }
  // Overlong forms, surrogates and values past U+10FFFF are not scalars.
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  return len;
}

}  // namespace

CodepointIndex::CodepointIndex(std::string_view utf8) {
  boundaries_.reserve(utf8.size() + 1);
  std::size_t i = 0;
  while (i < utf8.size()) {
    const std::size_t len = SequenceLength(utf8, i);
    if (len == 0) {
      throw ParseError("invalid UTF-8 at byte " + std::to_string(i));
    }
    boundaries_.push_back(i);
    i += len;
  }
  boundaries_.push_back(utf8.size());
}

std::string_view CodepointIndex::slice(std::string_view utf8,
                                       std::size_t start,
                                       std::size_t end) const {
  return utf8.substr(boundaries_[start],
                     boundaries_[end] - boundaries_[start]);
}

std::size_t CodepointLength(std::string_view utf8) {
  return CodepointIndex(utf8).size();
}

}  // namespace radevent
