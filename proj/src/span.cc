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

#include "radevent/span.h"

#include <algorithm>

#include "radevent/errors.h"

namespace radevent {

std::optional<std::string> TextSpan::Check(
    const std::vector<Fragment> &frags) {
  if (frags.empty()) return "span has no fragments";
  for (std::size_t i = 0; i < frags.size(); ++i) {
    if (frags[i].start >= frags[i].end) {
      return "fragment " + std::to_string(frags[i].start) + " " +
             std::to_string(frags[i].end) + " is empty or reversed";
    }
    if (i > 0 && frags[i].start < frags[i - 1].end) {
      return "fragments are unsorted or overlap at offset " +
             std::to_string(frags[i].start);
    }
  }
  return std::nullopt;
}

TextSpan::TextSpan(std::vector<Fragment> fragments)
    : fragments_(std::move(fragments)) {
  if (auto problem = Check(fragments_)) throw AlignmentError(*problem);
}

TextSpan::TextSpan(std::size_t start, std::size_t end)
    : TextSpan(std::vector<Fragment>{{start, end}}) {}

std::size_t TextSpan::length() const {
  std::size_t total = 0;
  for (const auto &f : fragments_) total += f.length();
  return total;
}

std::size_t TextSpan::OverlapLength(const TextSpan &other) const {
  // Both fragment lists are sorted and disjoint, so a merge walk suffices.
  std::size_t total = 0;
  std::size_t i = 0, j = 0;
  const auto &a = fragments_;
  const auto &b = other.fragments_;
  while (i < a.size() && j < b.size()) {
    const std::size_t lo = std::max(a[i].start, b[j].start);
    const std::size_t hi = std::min(a[i].end, b[j].end);
    if (lo < hi) total += hi - lo;
    if (a[i].end < b[j].end) {
      ++i;
    } else {
      ++j;
    }
  }
  return total;
}

bool TextSpan::IsSubsetOf(const TextSpan &other) const {
  return OverlapLength(other) == length();
}

std::string TextSpan::ToStandoff() const {
  std::string out;
  for (std::size_t i = 0; i < fragments_.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(fragments_[i].start);
    out += ' ';
    out += std::to_string(fragments_[i].end);
  }
  return out;
}

}  // namespace radevent
