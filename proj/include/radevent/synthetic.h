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

#ifndef RADEVENT_SYNTHETIC_H_
#define RADEVENT_SYNTHETIC_H_

#include <cstdint>
#include <vector>

#include "radevent/document.h"
#include "radevent/schema.h"

namespace radevent {

// Deterministic templated radiology-style reports with schema-conformant
// events. The text is invented and every document is marked synthetic.
//
// Per report the generator draws 2-3 Indication, 8-11 Lesion and 9-12
// Medical Problem events (uniformly), so the per-report averages sit near
// 2.5, 9.5 and 10.5. Every required role is always present; optional roles
// appear at random. Some spans are discontinuous, some contain non-ASCII
// text, and some argument spans are shared by two events.
//
// Event types and roles come from `schema`; vocabulary values are drawn from
// it, so any document produced here validates against the same schema.
// Throws ParameterError if n_docs is 0.
std::vector<Document> GenerateSyntheticCorpus(const Schema &schema,
                                              std::size_t n_docs,
                                              std::uint64_t seed);

}  // namespace radevent

#endif  // RADEVENT_SYNTHETIC_H_
