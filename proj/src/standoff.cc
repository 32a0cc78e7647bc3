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

#include "radevent/standoff.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include "radevent/errors.h"
#include "radevent/text.h"

namespace radevent {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

std::vector<std::string_view> SplitOn(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::size_t ParseOffset(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() ||
      ptr != token.data() + token.size()) {
    throw ParseError("bad offset '" + std::string(token) + "'", line);
  }
  return value;
}

// "Anatomy 0 9;15 19" -> label "Anatomy", fragments (0,9) (15,19).
std::pair<std::string, std::vector<Fragment>> ParseLabelAndOffsets(
    std::string_view field, std::size_t line) {
  const auto parts = SplitOn(field, ';');
  std::vector<Fragment> frags;
  std::string label;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::string_view part = parts[i];
    const std::size_t end_sep = part.rfind(' ');
    if (end_sep == std::string_view::npos) {
      throw ParseError("expected '<start> <end>' in '" + std::string(part) +
                           "'",
                       line);
    }
    const std::string_view end_tok = part.substr(end_sep + 1);
    part = part.substr(0, end_sep);
    std::string_view start_tok = part;
    if (i == 0) {
      const std::size_t start_sep = part.rfind(' ');
      if (start_sep == std::string_view::npos || start_sep == 0) {
        throw ParseError("missing label or offsets", line);
      }
      label = std::string(part.substr(0, start_sep));
      start_tok = part.substr(start_sep + 1);
    }
    frags.push_back({ParseOffset(start_tok, line), ParseOffset(end_tok, line)});
  }
  return {label, frags};
}

bool IsRefToken(std::string_view tok) {
  return tok.size() >= 2 && (tok[0] == 'T' || tok[0] == 'E');
}

// Sort key placing T2 before T10.
std::pair<long long, std::string> IdOrder(const std::string &id) {
  const std::string_view digits = std::string_view(id).substr(1);
  long long n = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size()) {
    return {-1, id};
  }
  return {n, id};
}

bool HasLineBreakOrTab(std::string_view s) {
  return s.find_first_of("\t\r\n") != std::string_view::npos;
}

}  // namespace

Document ParseDocument(std::string_view text_content,
                       std::string_view ann_content, std::string doc_id) {
  Document doc;
  doc.id = std::move(doc_id);
  doc.text = std::string(text_content);
  const CodepointIndex index(doc.text);

  std::vector<Line> t_lines, e_lines, a_lines;
  std::size_t number = 0;
  for (std::string_view raw : SplitOn(ann_content, '\n')) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (raw.empty() || raw.front() == '#') continue;
    Line line{number, SplitOn(raw, '\t')};
    switch (raw.front()) {
      case 'T':
        if (line.fields.size() != 3) {
          throw ParseError("T line needs 3 tab-separated fields, found " +
                               std::to_string(line.fields.size()),
                           number);
        }
        t_lines.push_back(std::move(line));
        break;
      case 'E':
        if (line.fields.size() != 2) {
          throw ParseError("E line needs 2 tab-separated fields, found " +
                               std::to_string(line.fields.size()),
                           number);
        }
        e_lines.push_back(std::move(line));
        break;
      case 'A':
        if (line.fields.size() != 2) {
          throw ParseError("A line needs 2 tab-separated fields, found " +
                               std::to_string(line.fields.size()),
                           number);
        }
        a_lines.push_back(std::move(line));
        break;
      default:
        throw ParseError("unsupported annotation line type '" +
                             std::string(1, raw.front()) + "'",
                         number);
    }
  }

  std::map<std::string, std::size_t, std::less<>> entity_at, event_at;
  std::map<std::string, std::size_t, std::less<>> seen_ids;
  auto claim_id = [&](std::string_view id, std::size_t line) {
    if (id.size() < 2 || id.find(' ') != std::string_view::npos) {
      throw ParseError("bad annotation id '" + std::string(id) + "'", line);
    }
    if (!seen_ids.emplace(std::string(id), line).second) {
      throw ParseError("duplicate id " + std::string(id), line);
    }
  };

  for (const auto &line : t_lines) {
    claim_id(line.fields[0], line.number);
    auto [label, frags] = ParseLabelAndOffsets(line.fields[1], line.number);
    if (auto problem = TextSpan::Check(frags)) {
      throw AlignmentError("line " + std::to_string(line.number) + ": " +
                           *problem);
    }
    if (frags.back().end > index.size()) {
      throw AlignmentError("line " + std::to_string(line.number) +
                           ": offset " + std::to_string(frags.back().end) +
                           " exceeds text length " +
                           std::to_string(index.size()));
    }
    Entity ent;
    ent.id = std::string(line.fields[0]);
    ent.label = std::move(label);
    ent.span = TextSpan(std::move(frags));
    ent.surface = SurfaceText(doc.text, ent.span);
    if (ent.surface != line.fields[2]) {
      throw AlignmentError("line " + std::to_string(line.number) + ": " +
                           ent.id + " surface '" + std::string(line.fields[2]) +
                           "' does not match text '" + ent.surface + "'");
    }
    entity_at[ent.id] = doc.entities.size();
    doc.entities.push_back(std::move(ent));
  }

  for (const auto &line : e_lines) {
    claim_id(line.fields[0], line.number);
    EventAnnotation ev;
    ev.id = std::string(line.fields[0]);
    std::string_view rest = line.fields[1];
    bool first = true;
    while (!rest.empty()) {
      const std::size_t colon = rest.find(':');
      if (colon == std::string_view::npos || colon == 0) {
        throw ParseError("expected '<Role>:<Tid>' in '" + std::string(rest) +
                             "'",
                         line.number);
      }
      const std::string role(rest.substr(0, colon));
      rest = rest.substr(colon + 1);
      const std::size_t space = rest.find(' ');
      const std::string target(rest.substr(0, space));
      rest = space == std::string_view::npos ? std::string_view()
                                             : rest.substr(space + 1);
      if (target.empty()) throw ParseError("empty argument id", line.number);
      if (!entity_at.count(target)) {
        throw ReferenceError("line " + std::to_string(line.number) + ": " +
                                 ev.id + " references undefined " + target,
                             target);
      }
      if (first) {
        ev.event_type = role;
        ev.trigger = target;
        first = false;
      } else {
        ev.arguments.push_back({role, target});
      }
    }
    if (first) throw ParseError("event without trigger", line.number);
    const Entity &trigger = doc.entities[entity_at[ev.trigger]];
    if (trigger.label != ev.event_type) {
      throw ParseError("event type '" + ev.event_type +
                           "' differs from trigger label '" + trigger.label +
                           "'",
                       line.number);
    }
    event_at[ev.id] = doc.events.size();
    doc.events.push_back(std::move(ev));
  }

  for (const auto &line : a_lines) {
    claim_id(line.fields[0], line.number);
    const auto tokens = SplitOn(line.fields[1], ' ');
    std::size_t k = 1;
    while (k < tokens.size() && !(IsRefToken(tokens[k]) &&
                                  (entity_at.count(tokens[k]) ||
                                   event_at.count(tokens[k])))) {
      ++k;
    }
    if (k >= tokens.size()) {
      // Report the first plausible id so the message names what is missing.
      for (std::size_t j = 1; j < tokens.size(); ++j) {
        if (IsRefToken(tokens[j])) {
          throw ReferenceError("line " + std::to_string(line.number) +
                                   ": attribute references undefined " +
                                   std::string(tokens[j]),
                               std::string(tokens[j]));
        }
      }
      throw ParseError("attribute line has no target id", line.number);
    }
    std::string name, value;
    for (std::size_t j = 0; j < k; ++j) {
      if (j > 0) name += ' ';
      name += tokens[j];
    }
    for (std::size_t j = k + 1; j < tokens.size(); ++j) {
      if (j > k + 1) value += ' ';
      value += tokens[j];
    }
    const std::string target(tokens[k]);

    std::vector<AttributeMap *> owners;
    if (auto it = event_at.find(target); it != event_at.end()) {
      owners.push_back(&doc.events[it->second].attributes);
    } else {
      for (auto &ev : doc.events) {
        if (ev.trigger == target) owners.push_back(&ev.attributes);
      }
      if (owners.empty()) {
        owners.push_back(&doc.entities[entity_at[target]].attributes);
      }
    }
    for (AttributeMap *attrs : owners) {
      auto [it, inserted] = attrs->emplace(name, value);
      if (!inserted && it->second != value) {
        throw ParseError("conflicting values for attribute '" + name +
                             "' on " + target,
                         line.number);
      }
    }
  }
  return doc;
}

StandoffFiles SerializeDocument(const Document &doc) {
  if (auto problem = FindInvariantViolation(doc)) {
    throw StructuralError("cannot serialize " + doc.id + ": " + *problem);
  }
  for (const auto &ev : doc.events) {
    if (!doc.FindEntity(ev.trigger)->attributes.empty()) {
      throw StructuralError("cannot serialize " + doc.id + ": trigger " +
                            ev.trigger +
                            " carries attributes that belong to its event");
    }
  }
  auto check_field = [&](std::string_view s, std::string_view what) {
    if (HasLineBreakOrTab(s)) {
      throw StructuralError("cannot serialize " + doc.id + ": " +
                            std::string(what) +
                            " contains a tab or line break");
    }
  };

  std::vector<const Entity *> ents;
  for (const auto &e : doc.entities) ents.push_back(&e);
  std::sort(ents.begin(), ents.end(), [](const Entity *a, const Entity *b) {
    return IdOrder(a->id) < IdOrder(b->id);
  });
  std::vector<const EventAnnotation *> events;
  for (const auto &e : doc.events) events.push_back(&e);
  std::sort(events.begin(), events.end(),
            [](const EventAnnotation *a, const EventAnnotation *b) {
              return IdOrder(a->id) < IdOrder(b->id);
            });

  std::string ann;
  for (const Entity *e : ents) {
    check_field(e->label, "label of " + e->id);
    check_field(e->surface, "surface of " + e->id);
    ann += e->id + '\t' + e->label + ' ' + e->span.ToStandoff() + '\t' +
           e->surface + '\n';
  }
  for (const EventAnnotation *ev : events) {
    ann += ev->id + '\t' + ev->event_type + ':' + ev->trigger;
    for (const auto &arg : ev->arguments) {
      if (arg.role.find(':') != std::string::npos) {
        throw StructuralError("cannot serialize " + doc.id + ": role '" +
                              arg.role + "' contains ':'");
      }
      check_field(arg.role, "role in " + ev->id);
      ann += ' ' + arg.role + ':' + arg.target;
    }
    ann += '\n';
  }
  int next_attribute = 1;
  auto emit_attributes = [&](const std::string &owner,
                             const AttributeMap &attrs) {
    for (const auto &[name, value] : attrs) {
      check_field(name, "attribute name on " + owner);
      check_field(value, "attribute value on " + owner);
      ann += 'A' + std::to_string(next_attribute++) + '\t' + name + ' ' +
             owner;
      if (!value.empty()) ann += ' ' + value;
      ann += '\n';
    }
  };
  for (const EventAnnotation *ev : events) emit_attributes(ev->id, ev->attributes);
  for (const Entity *e : ents) emit_attributes(e->id, e->attributes);
  return {doc.text, ann};
}

}  // namespace radevent
