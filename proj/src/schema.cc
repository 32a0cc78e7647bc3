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

#include "radevent/schema.h"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "radevent/errors.h"
#include "default_schema_config.h"

namespace radevent {

using json = nlohmann::json;

std::vector<std::string> RoleDef::Slots() const {
  if (kind == RoleKind::kSpanOnly) return {};
  if (hierarchical) return {name + " Parent", name + " Child"};
  return {name};
}

bool RoleDef::Allows(std::string_view value) const {
  return std::find(vocabulary.begin(), vocabulary.end(), value) !=
         vocabulary.end();
}

const RoleDef *EventTypeDef::FindRole(std::string_view role) const {
  for (const auto &r : roles) {
    if (r.name == role) return &r;
  }
  return nullptr;
}

std::vector<std::string> AnatomyHierarchy::ParentLabels() const {
  std::vector<std::string> out;
  for (const auto &p : parents_) out.push_back(p.name);
  return out;
}

std::vector<std::string> AnatomyHierarchy::ChildLabels() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto &p : parents_) {
    for (const auto &c : p.children) {
      if (seen.insert(c).second) out.push_back(c);
    }
  }
  return out;
}

std::size_t AnatomyHierarchy::ChildCount() const {
  std::size_t n = 0;
  for (const auto &p : parents_) n += p.children.size();
  return n;
}

const AnatomyParent *AnatomyHierarchy::FindParent(std::string_view name) const {
  for (const auto &p : parents_) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

bool AnatomyHierarchy::HasChild(std::string_view parent,
                                std::string_view child) const {
  const AnatomyParent *p = FindParent(parent);
  return p != nullptr && std::find(p->children.begin(), p->children.end(),
                                   child) != p->children.end();
}

bool AnatomyHierarchy::IsChildLabel(std::string_view child) const {
  for (const auto &p : parents_) {
    if (std::find(p.children.begin(), p.children.end(), child) !=
        p.children.end()) {
      return true;
    }
  }
  return false;
}

Schema::Schema(std::vector<EventTypeDef> event_types, AnatomyHierarchy anatomy)
    : event_types_(std::move(event_types)), anatomy_(std::move(anatomy)) {
  std::set<std::string> parent_names;
  for (const auto &p : anatomy_.parents()) {
    if (!parent_names.insert(p.name).second) {
      throw SchemaError("unique_parent", "anatomy parent '" + p.name +
                                             "' is listed twice");
    }
    if (p.children.empty()) {
      throw SchemaError("parent_has_children",
                        "anatomy parent '" + p.name + "' has no children");
    }
    std::set<std::string> children;
    for (const auto &c : p.children) {
      if (!children.insert(c).second) {
        throw SchemaError("unique_child", "child '" + c +
                                              "' repeated under parent '" +
                                              p.name + "'");
      }
    }
    if (!children.count(std::string(kUndeterminedChild))) {
      throw SchemaError("undetermined_child",
                        "anatomy parent '" + p.name +
                            "' must include an Undetermined child");
    }
  }

  std::set<std::string> type_names;
  for (auto &et : event_types_) {
    if (et.name.empty()) {
      throw SchemaError("event_type_name", "event type with empty name");
    }
    if (!type_names.insert(et.name).second) {
      throw SchemaError("unique_event_type",
                        "event type '" + et.name + "' is defined twice");
    }
    std::set<std::string> role_names;
    for (auto &role : et.roles) {
      if (role.name.empty() || role.name == "TRIGGER") {
        throw SchemaError("role_name", "event type '" + et.name +
                                           "' has an invalid role name '" +
                                           role.name + "'");
      }
      if (!role_names.insert(role.name).second) {
        throw SchemaError("unique_role", "role '" + role.name +
                                             "' repeated in event type '" +
                                             et.name + "'");
      }
      const std::string where = et.name + "/" + role.name;
      if (role.hierarchical) {
        if (role.kind != RoleKind::kSpanWithValue) {
          throw SchemaError("hierarchical_role",
                            where + " is hierarchical but span_only");
        }
        if (anatomy_.parents().empty()) {
          throw SchemaError("hierarchical_role",
                            where + " needs a non-empty anatomy hierarchy");
        }
        if (role.vocabulary.empty()) {
          role.vocabulary = anatomy_.ParentLabels();
        } else if (role.vocabulary != anatomy_.ParentLabels()) {
          throw SchemaError("anatomy_vocabulary",
                            where + " vocabulary differs from anatomy parents");
        }
      }
      if (role.kind == RoleKind::kSpanWithValue && role.vocabulary.empty()) {
        throw SchemaError("value_vocabulary",
                          where + " is span_with_value but has no vocabulary");
      }
      if (role.kind == RoleKind::kSpanOnly && !role.vocabulary.empty()) {
        throw SchemaError("span_only_vocabulary",
                          where + " is span_only but has a vocabulary");
      }
      if (std::set<std::string>(role.vocabulary.begin(), role.vocabulary.end())
              .size() != role.vocabulary.size()) {
        throw SchemaError("unique_value", where + " repeats a vocabulary value");
      }
      // Roles that spell the hierarchy out as two separate roles must agree
      // with it.
      if (role.name == "Anatomy Parent" &&
          role.vocabulary != anatomy_.ParentLabels()) {
        throw SchemaError("anatomy_vocabulary",
                          where + " vocabulary differs from anatomy parents");
      }
      if (role.name == "Anatomy Child") {
        const auto children = anatomy_.ChildLabels();
        if (std::set<std::string>(role.vocabulary.begin(),
                                  role.vocabulary.end()) !=
            std::set<std::string>(children.begin(), children.end())) {
          throw SchemaError("anatomy_vocabulary",
                            where + " vocabulary differs from anatomy children");
        }
      }
    }
  }
}

const EventTypeDef *Schema::FindEventType(std::string_view name) const {
  for (const auto &et : event_types_) {
    if (et.name == name) return &et;
  }
  return nullptr;
}

namespace {

const json &Require(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw SchemaError("config_field", where + " is missing '" + key + "'");
  }
  return *it;
}

std::string RequireString(const json &obj, const char *key,
                          const std::string &where) {
  const json &v = Require(obj, key, where);
  if (!v.is_string()) {
    throw SchemaError("config_field", where + "." + key + " must be a string");
  }
  return v.get<std::string>();
}

std::vector<std::string> StringList(const json &v, const std::string &where) {
  if (!v.is_array()) {
    throw SchemaError("config_field", where + " must be a list of strings");
  }
  std::vector<std::string> out;
  for (const auto &item : v) {
    if (!item.is_string()) {
      throw SchemaError("config_field", where + " must be a list of strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

RoleDef ParseRole(const json &j, const std::string &where) {
  if (!j.is_object()) throw SchemaError("config_field", where + " must be an object");
  RoleDef role;
  role.name = RequireString(j, "name", where);
  const std::string kind = RequireString(j, "kind", where);
  if (kind == "span_only") {
    role.kind = RoleKind::kSpanOnly;
  } else if (kind == "span_with_value") {
    role.kind = RoleKind::kSpanWithValue;
  } else {
    throw SchemaError("config_field",
                      where + ".kind must be span_only or span_with_value");
  }
  if (auto it = j.find("required"); it != j.end()) {
    if (!it->is_boolean()) {
      throw SchemaError("config_field", where + ".required must be a boolean");
    }
    role.required = it->get<bool>();
  }
  if (auto it = j.find("hierarchical"); it != j.end()) {
    if (!it->is_boolean()) {
      throw SchemaError("config_field",
                        where + ".hierarchical must be a boolean");
    }
    role.hierarchical = it->get<bool>();
  }
  if (auto it = j.find("vocabulary"); it != j.end()) {
    role.vocabulary = StringList(*it, where + ".vocabulary");
  }
  return role;
}

}  // namespace

Schema LoadSchema(std::string_view config_content) {
  json root;
  try {
    root = json::parse(config_content);
  } catch (const json::parse_error &e) {
    throw ParseError("schema config: " + std::string(e.what()));
  }
  if (!root.is_object()) {
    throw SchemaError("config_field", "schema config must be a JSON object");
  }

  std::vector<EventTypeDef> types;
  const json &types_json = Require(root, "event_types", "schema");
  if (!types_json.is_array()) {
    throw SchemaError("config_field", "event_types must be a list");
  }
  for (std::size_t i = 0; i < types_json.size(); ++i) {
    const json &tj = types_json[i];
    const std::string where = "event_types[" + std::to_string(i) + "]";
    if (!tj.is_object()) throw SchemaError("config_field", where + " must be an object");
    EventTypeDef et;
    et.name = RequireString(tj, "name", where);
    if (auto it = tj.find("roles"); it != tj.end()) {
      if (!it->is_array()) {
        throw SchemaError("config_field", where + ".roles must be a list");
      }
      for (std::size_t r = 0; r < it->size(); ++r) {
        et.roles.push_back(ParseRole(
            (*it)[r], where + ".roles[" + std::to_string(r) + "]"));
      }
    }
    types.push_back(std::move(et));
  }

  std::vector<AnatomyParent> parents;
  if (auto it = root.find("anatomy"); it != root.end()) {
    const json &pj = Require(*it, "parents", "anatomy");
    if (!pj.is_array()) {
      throw SchemaError("config_field", "anatomy.parents must be a list");
    }
    for (std::size_t i = 0; i < pj.size(); ++i) {
      const std::string where = "anatomy.parents[" + std::to_string(i) + "]";
      if (!pj[i].is_object()) throw SchemaError("config_field", where + " must be an object");
      AnatomyParent parent;
      parent.name = RequireString(pj[i], "name", where);
      parent.children =
          StringList(Require(pj[i], "children", where), where + ".children");
      parents.push_back(std::move(parent));
    }
  }
  return Schema(std::move(types), AnatomyHierarchy(std::move(parents)));
}

std::string_view DefaultSchemaConfig() { return kDefaultSchemaConfig; }

const Schema &DefaultSchema() {
  static const Schema schema = LoadSchema(kDefaultSchemaConfig);
  return schema;
}

}  // namespace radevent
