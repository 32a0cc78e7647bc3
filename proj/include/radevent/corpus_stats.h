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

#ifndef RADEVENT_CORPUS_STATS_H_
#define RADEVENT_CORPUS_STATS_H_

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "radevent/document.h"
#include "radevent/schema.h"
#include "radevent/scoring.h"

namespace radevent {

enum class Grouping { kAll, kModality, kSplit };

// Throws ParameterError for anything but "all", "modality" or "split".
Grouping ParseGrouping(std::string_view s);
std::string_view ToString(Grouping g);

struct MeanStd {
  double mean = 0;
  double std = 0;  // population standard deviation
};

// Population mean and standard deviation; {0, 0} for an empty input.
MeanStd ComputeMeanStd(std::span<const double> values);

struct GroupStats {
  std::string name;
  std::size_t doc_count = 0;
  // Annotation counts per category in schema order (trigger rows count
  // events, argument rows count (event, argument) links).
  std::vector<std::pair<CategoryKey, std::int64_t>> counts;
  // Triggers per report for each event type, in schema order.
  std::vector<std::pair<std::string, MeanStd>> triggers_per_report;
  // "<event type>/<subtype slot>" -> value -> count over argument links.
  std::map<std::string, std::map<std::string, std::int64_t>> subtype_values;

  std::int64_t Count(const CategoryKey &key) const;
};

struct StatsReport {
  Grouping grouping = Grouping::kAll;
  // Non-empty groups in a fixed order (CT, MRI, PET-CT or train, validation,
  // test), then "unspecified" for documents without the tag.
  std::vector<GroupStats> groups;
  GroupStats total;
};

StatsReport CorpusSummary(std::span<const Document> docs, const Schema &schema,
                          Grouping grouping);

nlohmann::ordered_json StatsReportToJson(const StatsReport &report);
// Rows are categories and columns are groups; trigger cells carry the
// per-report average in parentheses.
std::string StatsReportToTable(const StatsReport &report);

struct SplitRatios {
  double train = 0.7;
  double validation = 0.1;
  double test = 0.2;
};

// Group sizes by largest-remainder rounding of n * ratio. Ties on the
// remainder go to the earlier group (train, validation, test).
std::array<std::size_t, 3> LargestRemainderSizes(std::size_t n,
                                                 const SplitRatios &ratios);

struct SplitManifest {
  std::map<std::string, Split> assignment;
  SplitRatios ratios;
  std::uint64_t seed = 0;
  std::array<std::size_t, 3> sizes{};
};

// Sorts the ids, shuffles them with a generator seeded by `seed` and cuts
// the shuffled list at the largest-remainder sizes. Throws ParameterError for
// an empty or duplicated id list and for ratios that are not positive or do
// not sum to 1 within 1e-9.
SplitManifest MakeSplits(std::vector<std::string> doc_ids,
                         const SplitRatios &ratios, std::uint64_t seed);

nlohmann::ordered_json SplitManifestToJson(const SplitManifest &manifest);

}  // namespace radevent

#endif  // RADEVENT_CORPUS_STATS_H_
