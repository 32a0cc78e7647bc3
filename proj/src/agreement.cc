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

#include "radevent/agreement.h"

namespace radevent {

ScoreReport PairwiseAgreement(std::span<const Document> annotator_a,
                              std::span<const Document> annotator_b,
                              const Schema &schema, MatchMode mode) {
  ScoreOptions options;
  options.mode = mode;
  return ScoreCorpus(annotator_a, annotator_b, schema, options);
}

}  // namespace radevent
