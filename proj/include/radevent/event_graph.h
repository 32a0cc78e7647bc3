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

#ifndef RADEVENT_EVENT_GRAPH_H_
#define RADEVENT_EVENT_GRAPH_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "radevent/document.h"
#include "radevent/schema.h"

namespace radevent {

// Entity/relation form of a document: every trigger and argument span is an
// entity, every event argument is a (trigger, argument, role) relation.
struct ViewEntity {
  std::string id;
  std::string label;
  TextSpan span;
  std::string surface;
  // Subtypes on the span. For triggers these are the event-level attributes.
  AttributeMap subtypes;
};

struct Relation {
  std::string head;  // trigger entity id
  std::string tail;  // argument entity id
  std::string role;

  auto operator<=>(const Relation &) const = default;
};

struct EntityRelationView {
  std::string doc_id;
  DocumentMetadata metadata;
  std::vector<ViewEntity> entities;
  std::vector<Relation> relations;
};

// One trigger entity per event and one relation per argument. Shared
// argument spans stay a single entity with several inbound relations.
// Throws StructuralError for dangling references, triggers shared by two
// events, or repeated (head, tail, role) triples.
EntityRelationView Decompose(const Document &doc);

// Inverse of Decompose. Entities whose label is an event type of `schema`
// become events (with no arguments if no relation starts at them); events get
// fresh ids E1, E2, ... in entity order. Throws StructuralError when a
// relation head is not a trigger or a relation names an unknown entity.
Document Recompose(const EntityRelationView &view, std::string_view doc_text,
                   const Schema &schema);

// Interchange JSON for systems that do not read standoff:
//   {"id", "text", "metadata": {...}, "entities": [{"id", "label",
//    "spans": [[start, end], ...], "text", "subtypes": {...}}],
//    "relations": [{"head", "tail", "role"}]}
nlohmann::ordered_json DocumentToJson(const Document &doc);
// Throws ParseError for missing or mistyped fields, AlignmentError for bad
// spans and StructuralError for relations that do not fit the schema.
Document DocumentFromJson(const nlohmann::json &j, const Schema &schema);

nlohmann::ordered_json MetadataToJson(const DocumentMetadata &meta);
DocumentMetadata MetadataFromJson(const nlohmann::json &j);

}  // namespace radevent

#endif  // RADEVENT_EVENT_GRAPH_H_
