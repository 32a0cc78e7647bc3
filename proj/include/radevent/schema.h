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

#ifndef RADEVENT_SCHEMA_H_
#define RADEVENT_SCHEMA_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "radevent/document.h"

namespace radevent {

enum class RoleKind { kSpanOnly, kSpanWithValue };

struct RoleDef {
  std::string name;
  RoleKind kind = RoleKind::kSpanOnly;
  bool required = false;
  // Allowed subtype values; empty for span-only roles. For a hierarchical
  // role this holds the anatomy parent labels.
  std::vector<std::string> vocabulary;
  // Hierarchical roles carry two subtype slots, "<name> Parent" and
  // "<name> Child", checked against the anatomy hierarchy.
  bool hierarchical = false;

  // Attribute names that hold this role's subtype values.
  std::vector<std::string> Slots() const;
  bool Allows(std::string_view value) const;
};

struct EventTypeDef {
  std::string name;
  std::vector<RoleDef> roles;

  const RoleDef *FindRole(std::string_view role) const;
};

struct AnatomyParent {
  std::string name;
  std::vector<std::string> children;
};

class AnatomyHierarchy {
 public:
  AnatomyHierarchy() = default;
  explicit AnatomyHierarchy(std::vector<AnatomyParent> parents)
      : parents_(std::move(parents)) {}

  const std::vector<AnatomyParent> &parents() const { return parents_; }
  std::vector<std::string> ParentLabels() const;
  // Distinct child labels in first-appearance order.
  std::vector<std::string> ChildLabels() const;
  // Child entries summed over parents; "Undetermined" counts once per parent.
  std::size_t ChildCount() const;

  const AnatomyParent *FindParent(std::string_view name) const;
  bool HasChild(std::string_view parent, std::string_view child) const;
  bool IsChildLabel(std::string_view child) const;

 private:
  std::vector<AnatomyParent> parents_;
};

inline constexpr std::string_view kUndeterminedChild = "Undetermined";

// Event types, their argument roles and the anatomy hierarchy. Immutable
// once loaded.
class Schema {
 public:
  // Throws SchemaError naming the broken rule.
  Schema(std::vector<EventTypeDef> event_types, AnatomyHierarchy anatomy);

  const std::vector<EventTypeDef> &event_types() const { return event_types_; }
  const AnatomyHierarchy &anatomy() const { return anatomy_; }

  const EventTypeDef *FindEventType(std::string_view name) const;
  bool IsEventType(std::string_view name) const {
    return FindEventType(name) != nullptr;
  }

 private:
  std::vector<EventTypeDef> event_types_;
  AnatomyHierarchy anatomy_;
};

// Parses the JSON schema configuration:
//   {"event_types": [{"name": ..., "roles": [{"name", "kind", "required",
//                      "vocabulary", "hierarchical"}]}],
//    "anatomy": {"parents": [{"name": ..., "children": [...]}]}}
// Keys starting with '_' are comments. Throws ParseError on malformed JSON
// and SchemaError when a schema rule is broken.
Schema LoadSchema(std::string_view config_content);

// The shipped configuration (data/schema/default_schema.json, compiled in).
std::string_view DefaultSchemaConfig();
const Schema &DefaultSchema();

struct Violation {
  std::string doc_id;
  std::string annotation_id;
  std::string rule;
  std::string message;

  auto operator<=>(const Violation &) const = default;
};

// Rule names reported by ValidateDocument.
namespace rules {
inline constexpr std::string_view kUnknownEventType = "unknown_event_type";
inline constexpr std::string_view kUnknownRole = "role_not_allowed";
inline constexpr std::string_view kRequiredRoleAbsent = "required_role_absent";
inline constexpr std::string_view kSubtypeAbsent = "subtype_absent";
inline constexpr std::string_view kSubtypeOutOfVocabulary =
    "subtype_out_of_vocabulary";
inline constexpr std::string_view kChildNotUnderParent = "child_not_under_parent";
inline constexpr std::string_view kSpanOnlyHasSubtype = "span_only_has_subtype";
inline constexpr std::string_view kUnknownAttribute = "unknown_attribute";
inline constexpr std::string_view kArgumentLabelMismatch =
    "argument_label_mismatch";
inline constexpr std::string_view kTriggerWithoutEvent = "trigger_without_event";
inline constexpr std::string_view kSharedTrigger = "shared_trigger";
inline constexpr std::string_view kDuplicateArgument = "duplicate_argument";
}  // namespace rules

// Subtype value for one slot of an argument: the target entity's attribute
// if present, otherwise the event-level attribute of the same name.
std::optional<std::string> ArgumentSubtype(const EventAnnotation &event,
                                           const Entity &target,
                                           std::string_view slot);

// Checks `doc` against `schema`. The result is sorted, so it does not depend
// on the order of annotations in the document. Never throws for a document
// that satisfies the Document invariants.
std::vector<Violation> ValidateDocument(const Schema &schema,
                                        const Document &doc);

}  // namespace radevent

#endif  // RADEVENT_SCHEMA_H_
