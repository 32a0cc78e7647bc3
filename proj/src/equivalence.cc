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

#include "radevent/equivalence.h"

namespace radevent {

std::string_view ToString(MatchMode mode) {
  return mode == MatchMode::kOverlap ? "overlap" : "strict";
}

std::optional<MatchMode> ParseMatchMode(std::string_view s) {
  if (s == "overlap") return MatchMode::kOverlap;
  if (s == "strict") return MatchMode::kStrict;
  return std::nullopt;
}

bool SpansOverlap(const TextSpan &a, const TextSpan &b) {
  for (const auto &fa : a.fragments()) {
    for (const auto &fb : b.fragments()) {
      if (fa.start < fb.end && fb.start < fa.end) return true;
    }
  }
  return false;
}

bool SpansEquivalent(MatchMode mode, const TextSpan &a, const TextSpan &b) {
  return mode == MatchMode::kStrict ? a == b : SpansOverlap(a, b);
}

bool TriggersEquivalent(MatchMode mode, const TriggerInstance &ref,
                        const TriggerInstance &pred) {
  return ref.event_type == pred.event_type &&
         SpansEquivalent(mode, ref.span, pred.span);
}

bool ArgumentsEquivalent(MatchMode mode, const ArgumentInstance &ref,
                         const ArgumentInstance &pred,
                         const TriggerLinks &triggers) {
  return ref.role == pred.role && SpansEquivalent(mode, ref.span, pred.span) &&
         triggers.Contains(ref.event_id, pred.event_id) &&
         ref.subtypes == pred.subtypes;
}

}  // namespace radevent
