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

#ifndef RADEVENT_DOCUMENT_H_
#define RADEVENT_DOCUMENT_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radevent/span.h"

namespace radevent {

// Subtype values keyed by attribute name, e.g. {"Assertion": "present"} or
// {"Anatomy Parent": "Respiratory", "Anatomy Child": "Lung"}.
using AttributeMap = std::map<std::string, std::string>;

struct Entity {
  std::string id;     // "T3"
  std::string label;  // event type for triggers, role name for arguments
  TextSpan span;
  std::string surface;  // fragment texts joined by one space
  // Subtypes attached to this span. Attributes addressed to a trigger are
  // moved onto the owning event during parsing and never stored here.
  AttributeMap attributes;
};

struct Argument {
  std::string role;
  std::string target;  // entity id
};

struct EventAnnotation {
  std::string id;  // "E1"
  std::string event_type;
  std::string trigger;  // entity id
  std::vector<Argument> arguments;
  AttributeMap attributes;
};

enum class Modality { kCT, kMRI, kPETCT };
enum class Split { kTrain, kValidation, kTest };

std::string_view ToString(Modality m);
std::string_view ToString(Split s);
std::optional<Modality> ParseModality(std::string_view s);
std::optional<Split> ParseSplit(std::string_view s);

struct DocumentMetadata {
  std::optional<Modality> modality;
  std::optional<Split> split;
  bool synthetic = false;

  bool operator==(const DocumentMetadata &) const = default;
};

struct Document {
  std::string id;
  std::string text;
  std::vector<Entity> entities;
  std::vector<EventAnnotation> events;
  DocumentMetadata metadata;

  const Entity *FindEntity(std::string_view entity_id) const;
  const EventAnnotation *FindEvent(std::string_view event_id) const;
};

// Text covered by `span`, fragments joined by a single space. Throws
// AlignmentError when the span runs past the end of the text.
std::string SurfaceText(std::string_view text, const TextSpan &span);

// Returns a description of the first broken Document invariant, or nullopt.
// Checked: spans lie within the text and match their surface strings, ids are
// unique, every trigger and argument reference resolves, and each event type
// equals its trigger's label.
std::optional<std::string> FindInvariantViolation(const Document &doc);

// Deterministic rendering of a document with all annotation ids replaced by
// positions in a sorted order. Two documents are structurally equal modulo id
// renaming and line order exactly when their canonical forms are equal.
std::string CanonicalForm(const Document &doc);

inline bool StructurallyEqual(const Document &a, const Document &b) {
  return CanonicalForm(a) == CanonicalForm(b);
}

}  // namespace radevent

#endif  // RADEVENT_DOCUMENT_H_
