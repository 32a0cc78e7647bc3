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

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "radevent/schema.h"

namespace radevent {

std::optional<std::string> ArgumentSubtype(const EventAnnotation &event,
                                           const Entity &target,
                                           std::string_view slot) {
  const std::string key(slot);
  if (auto it = target.attributes.find(key); it != target.attributes.end()) {
    return it->second;
  }
  if (auto it = event.attributes.find(key); it != event.attributes.end()) {
    return it->second;
  }
  return std::nullopt;
}

namespace {

class Validator {
 public:
  Validator(const Schema &schema, const Document &doc)
      : schema_(schema), doc_(doc) {}

  std::vector<Violation> Run() {
    CheckTriggers();
    for (const auto &ev : doc_.events) CheckEvent(ev);
    CheckEntityAttributes();
    std::sort(out_.begin(), out_.end());
    out_.erase(std::unique(out_.begin(), out_.end()), out_.end());
    return std::move(out_);
  }

 private:
  void Add(const std::string &id, std::string_view rule, std::string message) {
    out_.push_back({doc_.id, id, std::string(rule), std::move(message)});
  }

  void CheckTriggers() {
    std::map<std::string, std::vector<std::string>> events_by_trigger;
    for (const auto &ev : doc_.events) {
      events_by_trigger[ev.trigger].push_back(ev.id);
    }
    for (auto &[trigger, events] : events_by_trigger) {
      if (events.size() > 1) {
        std::sort(events.begin(), events.end());
        std::string ids;
        for (const auto &e : events) ids += (ids.empty() ? "" : ", ") + e;
        Add(trigger, rules::kSharedTrigger,
            "trigger is shared by events " + ids);
      }
    }
    for (const auto &ent : doc_.entities) {
      if (schema_.IsEventType(ent.label) &&
          !events_by_trigger.count(ent.id)) {
        Add(ent.id, rules::kTriggerWithoutEvent,
            "'" + ent.label + "' span is not the trigger of any event");
      }
    }
  }

  void CheckEvent(const EventAnnotation &ev) {
    const EventTypeDef *type = schema_.FindEventType(ev.event_type);
    if (type == nullptr) {
      Add(ev.id, rules::kUnknownEventType,
          "event type '" + ev.event_type + "' is not in the schema");
      return;
    }

    std::set<std::pair<std::string, std::string>> seen_args;
    std::set<std::string> present_roles;
    std::set<std::string> valid_slots;
    for (const auto &role : type->roles) {
      for (const auto &slot : role.Slots()) valid_slots.insert(slot);
    }

    for (const auto &arg : ev.arguments) {
      if (!seen_args.emplace(arg.role, arg.target).second) {
        Add(ev.id, rules::kDuplicateArgument,
            arg.role + ":" + arg.target + " appears more than once");
      }
      const RoleDef *role = type->FindRole(arg.role);
      if (role == nullptr) {
        Add(ev.id, rules::kUnknownRole,
            "role '" + arg.role + "' is not allowed for " + ev.event_type);
        continue;
      }
      present_roles.insert(arg.role);
      const Entity &target = *doc_.FindEntity(arg.target);
      used_as_.emplace_back(&target, role);
      if (target.label != arg.role) {
        Add(arg.target, rules::kArgumentLabelMismatch,
            "span labelled '" + target.label + "' used as " + arg.role);
      }
      CheckSubtypes(ev, *role, target);
    }

    for (const auto &role : type->roles) {
      if (role.required && !present_roles.count(role.name)) {
        Add(ev.id, rules::kRequiredRoleAbsent,
            ev.event_type + " event has no " + role.name + " argument");
      }
    }
    for (const auto &[name, value] : ev.attributes) {
      if (!valid_slots.count(name)) {
        Add(ev.id, rules::kUnknownAttribute,
            "attribute '" + name + "' is not a subtype of any " +
                ev.event_type + " role");
      }
    }
  }

  void CheckSubtypes(const EventAnnotation &ev, const RoleDef &role,
                     const Entity &target) {
    if (role.kind == RoleKind::kSpanOnly) {
      if (!target.attributes.empty()) {
        Add(target.id, rules::kSpanOnlyHasSubtype,
            role.name + " is span-only but carries '" +
                target.attributes.begin()->first + "'");
      }
      return;
    }
    const auto slots = role.Slots();
    std::vector<std::optional<std::string>> values;
    for (const auto &slot : slots) {
      values.push_back(ArgumentSubtype(ev, target, slot));
      if (!values.back()) {
        Add(target.id, rules::kSubtypeAbsent,
            role.name + " argument of " + ev.id + " has no '" + slot +
                "' value");
      }
    }
    if (!role.hierarchical) {
      if (values[0] && !role.Allows(*values[0])) {
        Add(target.id, rules::kSubtypeOutOfVocabulary,
            "'" + *values[0] + "' is not a " + role.name + " value");
      }
      return;
    }
    const auto &anatomy = schema_.anatomy();
    const bool parent_ok = values[0] && role.Allows(*values[0]);
    if (values[0] && !parent_ok) {
      Add(target.id, rules::kSubtypeOutOfVocabulary,
          "'" + *values[0] + "' is not an anatomy parent");
    }
    if (values[1]) {
      if (!anatomy.IsChildLabel(*values[1])) {
        Add(target.id, rules::kSubtypeOutOfVocabulary,
            "'" + *values[1] + "' is not an anatomy child");
      } else if (parent_ok && !anatomy.HasChild(*values[0], *values[1])) {
        Add(target.id, rules::kChildNotUnderParent,
            "child '" + *values[1] + "' is not under parent '" + *values[0] +
                "'");
      }
    }
  }

  // Entity-level attributes must belong to a role the entity is used for.
  void CheckEntityAttributes() {
    for (const auto &ent : doc_.entities) {
      if (ent.attributes.empty()) continue;
      std::set<std::string> slots;
      bool span_only = false;
      for (const auto &[e, role] : used_as_) {
        if (e != &ent) continue;
        if (role->kind == RoleKind::kSpanOnly) span_only = true;
        for (const auto &s : role->Slots()) slots.insert(s);
      }
      for (const auto &[name, value] : ent.attributes) {
        // Span-only usage is already reported by CheckSubtypes.
        if (!slots.count(name) && !span_only) {
          Add(ent.id, rules::kUnknownAttribute,
              "attribute '" + name + "' does not belong to any role of " +
                  ent.id);
        }
      }
    }
  }

  const Schema &schema_;
  const Document &doc_;
  std::vector<std::pair<const Entity *, const RoleDef *>> used_as_;
  std::vector<Violation> out_;
};

}  // namespace

std::vector<Violation> ValidateDocument(const Schema &schema,
                                        const Document &doc) {
  return Validator(schema, doc).Run();
}

}  // namespace radevent
