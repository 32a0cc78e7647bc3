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

#ifndef RADEVENT_AGREEMENT_H_
#define RADEVENT_AGREEMENT_H_

#include <span>

#include "radevent/scoring.h"

namespace radevent {

// Inter-annotator agreement over doubly annotated documents: annotator A is
// scored as reference and annotator B as prediction. The F1 column is the
// agreement and does not depend on which annotator is called A; precision and
// recall swap when the annotators are swapped. Overlap mode is the standard
// setting; strict mode is for analysis.
ScoreReport PairwiseAgreement(std::span<const Document> annotator_a,
                              std::span<const Document> annotator_b,
                              const Schema &schema,
                              MatchMode mode = MatchMode::kOverlap);

}  // namespace radevent

#endif  // RADEVENT_AGREEMENT_H_
