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

#include "radevent/document.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "radevent/errors.h"
#include "radevent/text.h"

namespace radevent {

std::string_view ToString(Modality m) {
  switch (m) {
    case Modality::kCT:
      return "CT";
    case Modality::kMRI:
      return "MRI";
    case Modality::kPETCT:
      return "PET-CT";
  }
  return "";
}

std::string_view ToString(Split s) {
  switch (s) {
    case Split::kTrain:
      return "train";
    case Split::kValidation:
      return "validation";
    case Split::kTest:
      return "test";
  }
  return "";
}

std::optional<Modality> ParseModality(std::string_view s) {
  if (s == "CT") return Modality::kCT;
  if (s == "MRI") return Modality::kMRI;
  if (s == "PET-CT") return Modality::kPETCT;
  return std::nullopt;
}

std::optional<Split> ParseSplit(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "validation") return Split::kValidation;
  if (s == "test") return Split::kTest;
  return std::nullopt;
}

const Entity *Document::FindEntity(std::string_view entity_id) const {
  for (const auto &e : entities) {
    if (e.id == entity_id) return &e;
  }
  return nullptr;
}

const EventAnnotation *Document::FindEvent(std::string_view event_id) const {
  for (const auto &e : events) {
    if (e.id == event_id) return &e;
  }
  return nullptr;
}

std::string SurfaceText(std::string_view text, const TextSpan &span) {
  const CodepointIndex index(text);
  std::string out;
  for (std::size_t i = 0; i < span.fragments().size(); ++i) {
    const Fragment &f = span.fragments()[i];
    if (f.end > index.size()) {
      throw AlignmentError("offset " + std::to_string(f.end) +
                           " exceeds text length " +
                           std::to_string(index.size()));
    }
    if (i > 0) out += ' ';
    out += index.slice(text, f.start, f.end);
  }
  return out;
}

std::optional<std::string> FindInvariantViolation(const Document &doc) {
  std::size_t text_length;
  try {
    text_length = CodepointLength(doc.text);
  } catch (const Error &e) {
    return std::string("text: ") + e.what();
  }
  std::set<std::string> ids;
  for (const auto &ent : doc.entities) {
    if (!ids.insert(ent.id).second) return "duplicate id " + ent.id;
    if (auto problem = TextSpan::Check(ent.span.fragments())) {
      return ent.id + ": " + *problem;
    }
    if (ent.span.end() > text_length) {
      return ent.id + ": span ends past text length " +
             std::to_string(text_length);
    }
    if (SurfaceText(doc.text, ent.span) != ent.surface) {
      return ent.id + ": surface text does not match offsets";
    }
  }
  for (const auto &ev : doc.events) {
    if (!ids.insert(ev.id).second) return "duplicate id " + ev.id;
    const Entity *trigger = doc.FindEntity(ev.trigger);
    if (trigger == nullptr) {
      return ev.id + ": unknown trigger " + ev.trigger;
    }
    if (trigger->label != ev.event_type) {
      return ev.id + ": event type " + ev.event_type +
             " differs from trigger label " + trigger->label;
    }
    for (const auto &arg : ev.arguments) {
      if (doc.FindEntity(arg.target) == nullptr) {
        return ev.id + ": unknown argument target " + arg.target;
      }
    }
  }
  return std::nullopt;
}

namespace {

void AppendAttributes(std::ostringstream &out, const AttributeMap &attrs) {
  out << '{';
  for (const auto &[name, value] : attrs) out << name << '=' << value << ';';
  out << '}';
}

}  // namespace

std::string CanonicalForm(const Document &doc) {
  std::vector<const Entity *> ents;
  for (const auto &e : doc.entities) ents.push_back(&e);
  std::sort(ents.begin(), ents.end(), [](const Entity *a, const Entity *b) {
    return std::tie(a->span, a->label, a->surface, a->attributes) <
           std::tie(b->span, b->label, b->surface, b->attributes);
  });
  std::unordered_map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < ents.size(); ++i) rank[ents[i]->id] = i;
  auto rank_of = [&](const std::string &id) -> long {
    auto it = rank.find(id);
    return it == rank.end() ? -1 : static_cast<long>(it->second);
  };

  std::ostringstream out;
  out << "doc " << doc.id << '\n' << "text " << doc.text.size() << ':'
      << doc.text << '\n';
  out << "meta " << (doc.metadata.modality ? ToString(*doc.metadata.modality) : "-")
      << ' ' << (doc.metadata.split ? ToString(*doc.metadata.split) : "-")
      << ' ' << doc.metadata.synthetic << '\n';
  for (std::size_t i = 0; i < ents.size(); ++i) {
    out << "ent " << i << ' ' << ents[i]->label << ' '
        << ents[i]->span.ToStandoff() << ' ' << ents[i]->surface << ' ';
    AppendAttributes(out, ents[i]->attributes);
    out << '\n';
  }

  std::vector<std::string> events;
  for (const auto &ev : doc.events) {
    std::vector<std::pair<std::string, long>> args;
    for (const auto &a : ev.arguments) {
      args.emplace_back(a.role, rank_of(a.target));
    }
    std::sort(args.begin(), args.end());
    std::ostringstream line;
    line << "evt " << ev.event_type << ' ' << rank_of(ev.trigger) << " [";
    for (const auto &[role, target] : args) line << role << ':' << target << ',';
    line << "] ";
    AppendAttributes(line, ev.attributes);
    events.push_back(line.str());
  }
  std::sort(events.begin(), events.end());
  for (const auto &e : events) out << e << '\n';
  return out.str();
}

}  // namespace radevent
