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

#ifndef RADEVENT_ALIGNMENT_H_
#define RADEVENT_ALIGNMENT_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radevent/span.h"

namespace radevent {

// One annotation as seen by the aligner: its span plus a key (normally the
// annotation id) that orders annotations sharing a span.
struct AlignItem {
  TextSpan span;
  std::string key;
};

// One-to-one pairing between reference and predicted items. Indices refer to
// the positions in the input lists.
struct Matching {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (ref, pred)
  std::vector<std::size_t> unmatched_ref;
  std::vector<std::size_t> unmatched_pred;
};

using EquivalenceFn = std::function<bool(std::size_t ref, std::size_t pred)>;

// Maximum-cardinality matching over the bipartite graph whose edges are the
// equivalent (ref, pred) pairs. Among maximum matchings it picks the one
// with the largest total number of overlapping characters, then the one
// whose pair sequence, sorted by the items' canonical order (span start
// first, then full span, then key), is lexicographically smallest. The
// result depends only on the items, not on their order in the inputs.
// `pairs` is returned sorted by reference index.
Matching Align(std::span<const AlignItem> refs,
               std::span<const AlignItem> preds,
               const EquivalenceFn &equivalent);

// Optimal value of a maximum-weight assignment on a non-negative integer
// weight matrix (rows x cols, row-major). Zero-weight cells mean "no edge".
// Exposed for testing.
long long MaxWeightAssignment(const std::vector<long long> &weights,
                              std::size_t rows, std::size_t cols,
                              std::vector<long> *row_to_col = nullptr);

}  // namespace radevent

#endif  // RADEVENT_ALIGNMENT_H_
