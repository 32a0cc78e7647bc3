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

#ifndef RADEVENT_SIGNIFICANCE_H_
#define RADEVENT_SIGNIFICANCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radevent/scoring.h"

namespace radevent {

// Which F1 the test compares: one category row, or the micro overall.
struct MetricSelector {
  std::optional<CategoryKey> category;  // nullopt = overall

  // "overall" or "<event type>/<role>", e.g. "Lesion/TRIGGER".
  static MetricSelector Parse(std::string_view text, const Schema &schema);
  std::string ToString() const;
};

struct BootstrapOptions {
  MatchMode mode = MatchMode::kOverlap;
  std::size_t replicates = 10000;
  std::uint64_t seed = 42;
  // Worker threads; the result does not depend on this.
  unsigned workers = 1;
  // Enumerate every one of the n^n resamples instead of sampling. Only for
  // small corpora; `replicates` and `seed` are ignored.
  bool exhaustive = false;
};

struct BootstrapResult {
  double observed_delta = 0;  // F1(A) - F1(B) on the full corpus
  double p_value = 1.0;
  std::size_t replicates = 0;
  std::size_t exceed_count = 0;
  std::uint64_t seed = 0;
  std::string metric;
  bool exhaustive = false;

  bool significant(double alpha = 0.05) const { return p_value < alpha; }
};

// Per-document counts of one metric, the unit that gets resampled.
std::vector<Counts> PerDocumentCounts(std::span<const Document> refs,
                                      std::span<const Document> preds,
                                      const Schema &schema,
                                      const MetricSelector &metric,
                                      MatchMode mode);

// Shift-corrected paired bootstrap over per-document count tuples.
// Each replicate draws n document indices with replacement and recomputes
// delta = F1(A) - F1(B) from the summed counts. With observed delta d > 0 the
// p-value is #{replicates with delta > 2d} / B. When d < 0 the systems swap
// roles (every delta is negated) before counting, and d == 0 reports 1.0.
// Replicate i draws from its own generator seeded from (seed, i), so the
// result is the same for any worker count.
BootstrapResult BootstrapFromCounts(std::span<const Counts> a,
                                    std::span<const Counts> b,
                                    const BootstrapOptions &options);

// Pairs the three corpora by document id and runs BootstrapFromCounts.
// Throws PairingError for mismatched id sets, ParameterError for zero
// replicates and ValidationError for invalid documents.
BootstrapResult PairedBootstrap(std::span<const Document> refs,
                                std::span<const Document> preds_a,
                                std::span<const Document> preds_b,
                                const Schema &schema,
                                const MetricSelector &metric,
                                const BootstrapOptions &options = {});

}  // namespace radevent

#endif  // RADEVENT_SIGNIFICANCE_H_
