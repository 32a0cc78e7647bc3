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

#ifndef RADEVENT_SCORING_H_
#define RADEVENT_SCORING_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "radevent/alignment.h"
#include "radevent/document.h"
#include "radevent/equivalence.h"
#include "radevent/errors.h"
#include "radevent/schema.h"

namespace radevent {

// Role used for the trigger row of an event type.
inline constexpr std::string_view kTriggerRole = "TRIGGER";

// A scoring row: the trigger of an event type, or one argument role within
// an event type (Lesion/Anatomy and Medical Problem/Anatomy are separate).
struct CategoryKey {
  std::string event_type;
  std::string role;

  bool is_trigger() const { return role == kTriggerRole; }
  std::string ToString() const { return event_type + "/" + role; }
  auto operator<=>(const CategoryKey &) const = default;
};

struct Counts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  Counts &operator+=(const Counts &o) {
    tp += o.tp, fp += o.fp, fn += o.fn;
    return *this;
  }
  bool operator==(const Counts &) const = default;
};

// Precision is reported as 1.0 and flagged vacuous when nothing was
// predicted (tp + fp == 0); recall likewise when nothing was expected.
struct Metrics {
  Counts counts;
  double precision = 1.0;
  double recall = 1.0;
  double f1 = 1.0;
  bool precision_vacuous = true;
  bool recall_vacuous = true;

  // No reference and no predicted annotations at all.
  bool vacuous() const { return precision_vacuous && recall_vacuous; }
};

Metrics Prf(std::int64_t tp, std::int64_t fp, std::int64_t fn);
inline Metrics Prf(const Counts &c) { return Prf(c.tp, c.fp, c.fn); }

struct ErrorBreakdown {
  std::int64_t exact = 0;
  std::int64_t pred_shorter = 0;  // predicted characters a proper subset
  std::int64_t pred_longer = 0;   // reference characters a proper subset
  std::int64_t pred_other_overlap = 0;
  std::int64_t spurious = 0;  // unmatched predictions
  std::int64_t missing = 0;   // unmatched references

  std::int64_t matched() const {
    return exact + pred_shorter + pred_longer + pred_other_overlap;
  }
  ErrorBreakdown &operator+=(const ErrorBreakdown &o);
  bool operator==(const ErrorBreakdown &) const = default;
};

// Classifies every matched pair by span containment and counts unmatched
// items on each side.
ErrorBreakdown CategorizeSpanErrors(const Matching &matching,
                                    std::span<const TextSpan> refs,
                                    std::span<const TextSpan> preds);

// How argument comparison decides that two triggers are connected.
enum class TriggerLink {
  // The triggers are equivalent under the match mode. With this policy the
  // argument edge sets grow monotonically from strict to overlap mode, so
  // overlap counts never fall below strict counts.
  kEquivalent,
  // The triggers were paired by the trigger alignment.
  kAligned,
};

struct ScoreOptions {
  MatchMode mode = MatchMode::kOverlap;
  TriggerLink trigger_link = TriggerLink::kEquivalent;
};

struct CategoryResult {
  CategoryKey key;
  Counts counts;
  ErrorBreakdown errors;
};

// Per-category counts for one (reference, prediction) document pair, in
// schema order: for each event type its trigger row, then one row per role.
std::vector<CategoryResult> ScoreDocument(const Document &ref,
                                          const Document &pred,
                                          const Schema &schema,
                                          const ScoreOptions &options = {});

struct ScoreRow {
  CategoryKey key;
  Metrics metrics;
  ErrorBreakdown errors;
};

struct ScoreReport {
  MatchMode mode = MatchMode::kOverlap;
  std::vector<ScoreRow> rows;  // schema order
  Metrics overall;             // micro average over all rows
  ErrorBreakdown overall_errors;
  std::size_t doc_count = 0;

  const ScoreRow *Find(const CategoryKey &key) const;
};

// Raised when documents fail schema validation before scoring.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  const std::vector<Violation> &violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Pairs documents by id. Throws PairingError listing orphans or duplicate
// ids. The result holds (ref, pred) pointers sorted by document id.
std::vector<std::pair<const Document *, const Document *>> PairDocuments(
    std::span<const Document> refs, std::span<const Document> preds);

// Throws ValidationError if any document violates the schema.
void RequireValid(const Schema &schema, std::span<const Document> docs);

// Aligns each document pair, sums counts over documents and computes
// per-category and micro-averaged overall metrics.
ScoreReport ScoreCorpus(std::span<const Document> refs,
                        std::span<const Document> preds, const Schema &schema,
                        const ScoreOptions &options = {});

// Builds a report from already-summed per-category results.
ScoreReport MakeReport(MatchMode mode, std::vector<CategoryResult> totals,
                       std::size_t doc_count);

}  // namespace radevent

#endif  // RADEVENT_SCORING_H_
