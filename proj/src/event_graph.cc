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

#include "radevent/event_graph.h"

#include <map>
#include <set>

#include "radevent/errors.h"

namespace radevent {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

EntityRelationView Decompose(const Document &doc) {
  EntityRelationView view;
  view.doc_id = doc.id;
  view.metadata = doc.metadata;

  std::map<std::string, const EventAnnotation *> event_of_trigger;
  for (const auto &ev : doc.events) {
    if (doc.FindEntity(ev.trigger) == nullptr) {
      throw StructuralError(doc.id + ": " + ev.id + " has unknown trigger " +
                            ev.trigger);
    }
    if (!event_of_trigger.emplace(ev.trigger, &ev).second) {
      throw StructuralError(doc.id + ": trigger " + ev.trigger +
                            " is shared by several events");
    }
  }

  for (const auto &ent : doc.entities) {
    ViewEntity ve{ent.id, ent.label, ent.span, ent.surface, ent.attributes};
    if (auto it = event_of_trigger.find(ent.id);
        it != event_of_trigger.end()) {
      for (const auto &[name, value] : it->second->attributes) {
        ve.subtypes[name] = value;
      }
    }
    view.entities.push_back(std::move(ve));
  }

  std::set<Relation> seen;
  for (const auto &ev : doc.events) {
    for (const auto &arg : ev.arguments) {
      if (doc.FindEntity(arg.target) == nullptr) {
        throw StructuralError(doc.id + ": " + ev.id +
                              " has unknown argument " + arg.target);
      }
      Relation rel{ev.trigger, arg.target, arg.role};
      if (!seen.insert(rel).second) {
        throw StructuralError(doc.id + ": " + ev.id + " repeats " + arg.role +
                              ":" + arg.target);
      }
      view.relations.push_back(std::move(rel));
    }
  }
  return view;
}

Document Recompose(const EntityRelationView &view, std::string_view doc_text,
                   const Schema &schema) {
  Document doc;
  doc.id = view.doc_id;
  doc.text = std::string(doc_text);
  doc.metadata = view.metadata;

  std::map<std::string, std::size_t> event_at;
  for (const auto &ve : view.entities) {
    Entity ent{ve.id, ve.label, ve.span, ve.surface, {}};
    if (schema.IsEventType(ve.label)) {
      EventAnnotation ev;
      ev.id = "E" + std::to_string(doc.events.size() + 1);
      ev.event_type = ve.label;
      ev.trigger = ve.id;
      ev.attributes = ve.subtypes;
      if (!event_at.emplace(ve.id, doc.events.size()).second) {
        throw StructuralError(view.doc_id + ": entity id " + ve.id +
                              " is repeated");
      }
      doc.events.push_back(std::move(ev));
    } else {
      ent.attributes = ve.subtypes;
    }
    doc.entities.push_back(std::move(ent));
  }

  std::set<Relation> seen;
  for (const auto &rel : view.relations) {
    auto head = event_at.find(rel.head);
    if (head == event_at.end()) {
      const bool known = doc.FindEntity(rel.head) != nullptr;
      throw StructuralError(view.doc_id + ": relation head " + rel.head +
                            (known ? " is not labelled with an event type"
                                   : " is not an entity"));
    }
    if (doc.FindEntity(rel.tail) == nullptr) {
      throw StructuralError(view.doc_id + ": relation tail " + rel.tail +
                            " is not an entity");
    }
    if (!seen.insert(rel).second) {
      throw StructuralError(view.doc_id + ": duplicate relation " + rel.head +
                            " -" + rel.role + "-> " + rel.tail);
    }
    doc.events[head->second].arguments.push_back({rel.role, rel.tail});
  }
  if (auto problem = FindInvariantViolation(doc)) {
    throw StructuralError(view.doc_id + ": " + *problem);
  }
  return doc;
}

ordered_json MetadataToJson(const DocumentMetadata &meta) {
  ordered_json j = ordered_json::object();
  if (meta.modality) j["modality"] = ToString(*meta.modality);
  if (meta.split) j["split"] = ToString(*meta.split);
  if (meta.synthetic) j["synthetic"] = true;
  return j;
}

DocumentMetadata MetadataFromJson(const json &j) {
  DocumentMetadata meta;
  if (!j.is_object()) throw ParseError("metadata must be an object");
  if (auto it = j.find("modality"); it != j.end() && !it->is_null()) {
    if (!it->is_string() || !ParseModality(it->get<std::string>())) {
      throw ParseError("modality must be one of CT, MRI, PET-CT");
    }
    meta.modality = ParseModality(it->get<std::string>());
  }
  if (auto it = j.find("split"); it != j.end() && !it->is_null()) {
    if (!it->is_string() || !ParseSplit(it->get<std::string>())) {
      throw ParseError("split must be one of train, validation, test");
    }
    meta.split = ParseSplit(it->get<std::string>());
  }
  if (auto it = j.find("synthetic"); it != j.end()) {
    if (!it->is_boolean()) throw ParseError("synthetic must be a boolean");
    meta.synthetic = it->get<bool>();
  }
  return meta;
}

ordered_json DocumentToJson(const Document &doc) {
  const EntityRelationView view = Decompose(doc);
  ordered_json out;
  out["id"] = doc.id;
  out["text"] = doc.text;
  out["metadata"] = MetadataToJson(doc.metadata);
  ordered_json entities = ordered_json::array();
  for (const auto &ve : view.entities) {
    ordered_json e;
    e["id"] = ve.id;
    e["label"] = ve.label;
    ordered_json spans = ordered_json::array();
    for (const auto &f : ve.span.fragments()) spans.push_back({f.start, f.end});
    e["spans"] = std::move(spans);
    e["text"] = ve.surface;
    e["subtypes"] = ordered_json::object();
    for (const auto &[name, value] : ve.subtypes) e["subtypes"][name] = value;
    entities.push_back(std::move(e));
  }
  out["entities"] = std::move(entities);
  ordered_json relations = ordered_json::array();
  for (const auto &r : view.relations) {
    relations.push_back({{"head", r.head}, {"tail", r.tail}, {"role", r.role}});
  }
  out["relations"] = std::move(relations);
  return out;
}

namespace {

std::string GetString(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_string()) {
    throw ParseError(where + ": '" + key + "' must be a string");
  }
  return it->get<std::string>();
}

const json &GetArray(const json &obj, const char *key, const std::string &where) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_array()) {
    throw ParseError(where + ": '" + key + "' must be a list");
  }
  return *it;
}

}  // namespace

Document DocumentFromJson(const json &j, const Schema &schema) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  EntityRelationView view;
  view.doc_id = GetString(j, "id", "document");
  const std::string where = "document " + view.doc_id;
  const std::string text = GetString(j, "text", where);
  if (auto it = j.find("metadata"); it != j.end()) {
    view.metadata = MetadataFromJson(*it);
  }
  for (const auto &ej : GetArray(j, "entities", where)) {
    if (!ej.is_object()) throw ParseError(where + ": entity must be an object");
    ViewEntity ve;
    ve.id = GetString(ej, "id", where);
    ve.label = GetString(ej, "label", where + " entity " + ve.id);
    std::vector<Fragment> frags;
    for (const auto &sj : GetArray(ej, "spans", where + " entity " + ve.id)) {
      if (!sj.is_array() || sj.size() != 2 || !sj[0].is_number_unsigned() ||
          !sj[1].is_number_unsigned()) {
        throw ParseError(where + " entity " + ve.id +
                         ": spans must be [start, end] pairs");
      }
      frags.push_back({sj[0].get<std::size_t>(), sj[1].get<std::size_t>()});
    }
    ve.span = TextSpan(std::move(frags));
    ve.surface = SurfaceText(text, ve.span);
    if (auto it = ej.find("text"); it != ej.end()) {
      if (!it->is_string() || it->get<std::string>() != ve.surface) {
        throw AlignmentError(where + " entity " + ve.id +
                             ": text does not match offsets");
      }
    }
    if (auto it = ej.find("subtypes"); it != ej.end()) {
      if (!it->is_object()) {
        throw ParseError(where + " entity " + ve.id +
                         ": subtypes must be an object");
      }
      for (const auto &[name, value] : it->items()) {
        if (!value.is_string()) {
          throw ParseError(where + " entity " + ve.id +
                           ": subtype values must be strings");
        }
        ve.subtypes[name] = value.get<std::string>();
      }
    }
    view.entities.push_back(std::move(ve));
  }
  if (j.contains("relations")) {
    for (const auto &rj : GetArray(j, "relations", where)) {
      if (!rj.is_object()) {
        throw ParseError(where + ": relation must be an object");
      }
      view.relations.push_back({GetString(rj, "head", where),
                                GetString(rj, "tail", where),
                                GetString(rj, "role", where)});
    }
  }
  return Recompose(view, text, schema);
}

}  // namespace radevent
