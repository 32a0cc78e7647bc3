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

#ifndef RADEVENT_STANDOFF_H_
#define RADEVENT_STANDOFF_H_

#include <string>
#include <string_view>

#include "radevent/document.h"

namespace radevent {

// Parses a report and its standoff annotations.
//
// Accepted lines (fields separated by a single tab):
//   T<n>  <Label> <start> <end>[;<start> <end>]*  <surface>
//   E<n>  <Type>:<Tid>[ <Role>:<Tid>]*
//   A<n>  <Name> <Tid|Eid>[ <Value>]
// Blank lines and lines starting with '#' are ignored. Relation (R),
// normalization (N) and modifier (M) lines are rejected.
//
// Attributes addressed to a trigger entity are stored on every event that
// uses it as trigger, so that "A1 Assertion T1 present" and
// "A1 Assertion E1 present" parse to the same Document.
//
// Throws ParseError (with line number) for malformed lines, ReferenceError
// for E/A lines naming unknown ids and AlignmentError for offsets outside the
// text or surface strings that do not match the text.
Document ParseDocument(std::string_view text_content,
                       std::string_view ann_content, std::string doc_id);

struct StandoffFiles {
  std::string text;
  std::string ann;
};

// Emits T lines, then E lines, then A lines, each group sorted by id.
// Throws StructuralError naming the broken invariant if `doc` is invalid.
StandoffFiles SerializeDocument(const Document &doc);

}  // namespace radevent

#endif  // RADEVENT_STANDOFF_H_
