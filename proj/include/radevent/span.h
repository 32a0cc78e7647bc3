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

#ifndef RADEVENT_SPAN_H_
#define RADEVENT_SPAN_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace radevent {

// Half-open [start, end) interval of character offsets.
struct Fragment {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  auto operator<=>(const Fragment &) const = default;
};

// Location of one annotation: sorted, non-overlapping, non-empty fragments.
// Offsets count Unicode scalar values of the document text.
class TextSpan {
 public:
  TextSpan() = default;

  // Throws AlignmentError unless the fragments are non-empty, sorted and
  // pairwise disjoint.
  explicit TextSpan(std::vector<Fragment> fragments);
  TextSpan(std::size_t start, std::size_t end);

  const std::vector<Fragment> &fragments() const { return fragments_; }
  bool empty() const { return fragments_.empty(); }
  std::size_t start() const { return fragments_.front().start; }
  std::size_t end() const { return fragments_.back().end; }

  // Total number of covered characters.
  std::size_t length() const;

  // Number of characters covered by both spans.
  std::size_t OverlapLength(const TextSpan &other) const;

  // True when every character of this span is also covered by `other`.
  bool IsSubsetOf(const TextSpan &other) const;

  // "0 9;15 19" as written in standoff files.
  std::string ToStandoff() const;

  // Returns a description of the problem, if the fragments would not form a
  // valid span.
  static std::optional<std::string> Check(const std::vector<Fragment> &frags);

  auto operator<=>(const TextSpan &) const = default;

 private:
  std::vector<Fragment> fragments_;
};

}  // namespace radevent

#endif  // RADEVENT_SPAN_H_
