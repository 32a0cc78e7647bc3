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

#ifndef RADEVENT_TEXT_H_
#define RADEVENT_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace radevent {

// Maps Unicode scalar value offsets onto byte offsets of a UTF-8 string.
// Standoff offsets count characters, so every slice of report text goes
// through one of these.
class CodepointIndex {
 public:
  // Throws ParseError if the text is not valid UTF-8.
  explicit CodepointIndex(std::string_view utf8);

  // Number of scalar values in the text.
  std::size_t size() const { return boundaries_.size() - 1; }

  // Byte offset of scalar value `pos` (pos == size() gives the byte length).
  std::size_t byte_offset(std::size_t pos) const { return boundaries_[pos]; }

  // Text between scalar offsets [start, end). Requires start <= end <= size().
  std::string_view slice(std::string_view utf8, std::size_t start,
                         std::size_t end) const;

 private:
  std::vector<std::size_t> boundaries_;
};

// Number of Unicode scalar values in a valid UTF-8 string.
std::size_t CodepointLength(std::string_view utf8);

}  // namespace radevent

#endif  // RADEVENT_TEXT_H_
