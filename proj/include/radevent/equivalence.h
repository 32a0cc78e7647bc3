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

#ifndef RADEVENT_EQUIVALENCE_H_
#define RADEVENT_EQUIVALENCE_H_

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "radevent/span.h"

namespace radevent {

// Overlap: spans are equivalent when they share at least one character.
// Strict: spans are equivalent only when their fragment lists are identical.
enum class MatchMode { kOverlap, kStrict };

std::string_view ToString(MatchMode mode);
std::optional<MatchMode> ParseMatchMode(std::string_view s);

// True iff some fragment of `a` intersects some fragment of `b`.
bool SpansOverlap(const TextSpan &a, const TextSpan &b);
bool SpansEquivalent(MatchMode mode, const TextSpan &a, const TextSpan &b);

struct TriggerInstance {
  std::string event_id;
  std::string event_type;
  TextSpan span;
};

// One (event, role, span) argument occurrence. `subtypes` holds the values of
// the role's subtype slots in slot order; it is empty for span-only roles.
struct ArgumentInstance {
  std::string event_id;
  std::string role;
  std::string entity_id;
  TextSpan span;
  std::vector<std::optional<std::string>> subtypes;
};

bool TriggersEquivalent(MatchMode mode, const TriggerInstance &ref,
                        const TriggerInstance &pred);

// Set of (reference event id, predicted event id) pairs whose triggers count
// as connected when comparing their arguments.
class TriggerLinks {
 public:
  TriggerLinks() = default;

  void Add(std::string ref_event, std::string pred_event) {
    links_.emplace(std::move(ref_event), std::move(pred_event));
  }
  bool Contains(const std::string &ref_event,
                const std::string &pred_event) const {
    return links_.count({ref_event, pred_event}) > 0;
  }
  std::size_t size() const { return links_.size(); }

 private:
  std::set<std::pair<std::string, std::string>> links_;
};

// Role names equal, spans equivalent under `mode`, the owning triggers
// linked, and every subtype slot equal (a missing value never equals a
// present one).
bool ArgumentsEquivalent(MatchMode mode, const ArgumentInstance &ref,
                         const ArgumentInstance &pred,
                         const TriggerLinks &triggers);

}  // namespace radevent

#endif  // RADEVENT_EQUIVALENCE_H_
