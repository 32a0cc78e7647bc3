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

#include "radevent/synthetic.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <random>

#include "radevent/errors.h"
#include "radevent/text.h"
#include "random_util.h"

namespace radevent {
namespace {

using Phrases = std::vector<std::string>;

const std::map<std::string, Phrases> &TriggerWords() {
  static const std::map<std::string, Phrases> words = {
      {"Indication", {"cancer", "lymphoma", "melanoma", "pain", "mass", "carcinoma"}},
      {"Lesion", {"nodule", "mass", "lesion", "metastasis", "cyst", "tumor", "lymphadenopathy", "opacity"}},
      {"Medical Problem", {"atelectasis", "effusion", "scarring", "emphysema", "edema", "inflammation",
                           "hemorrhage", "fracture", "stenosis", "thickening", "FDG activity"}},
  };
  return words;
}

const std::map<std::string, Phrases> &SpanOnlyPhrases() {
  static const std::map<std::string, Phrases> phrases = {
      {"Characteristic", {"spiculated", "hypodense", "enhancing", "calcified", "FDG-avid", "ill-defined", "mild"}},
      {"Size", {"1.2 cm", "5 mm", "2.3 × 1.8 cm", "4 × 3 mm", "11 mm", "3.4 cm"}},
      {"Count", {"two", "multiple", "several", "3", "numerous"}},
  };
  return phrases;
}

const std::map<std::string, std::string> &ValuePhrases() {
  static const std::map<std::string, std::string> phrases = {
      {"present", "Redemonstrated"},
      {"absent", "No"},
      {"possible", "Possible"},
      {"new", "new"},
      {"increasing", "enlarging"},
      {"decreasing", "decreasing"},
      {"stable", "stable"},
      {"neoplastic diagnosis", "evaluate for"},
      {"neoplastic staging", "staging of"},
      {"neoplastic surveillance", "surveillance of"},
      {"non-neoplastic diagnosis", "rule out"},
      {"other", "follow-up of"},
  };
  return phrases;
}

std::pair<int, int> EventsPerReport(const std::string &type) {
  if (type == "Indication") return {2, 3};
  if (type == "Lesion") return {8, 11};
  if (type == "Medical Problem") return {9, 12};
  return {1, 3};
}

double RoleProbability(const RoleDef &role) {
  if (role.required) return 1.0;
  if (role.hierarchical) return 0.7;
  if (role.name == "Assertion") return 0.6;
  if (role.name == "Characteristic") return 0.4;
  if (role.name == "Size") return 0.3;
  if (role.name == "Size Trend") return 0.25;
  if (role.name == "Count") return 0.15;
  return 0.3;
}

std::string Lower(std::string s) {
  for (auto &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

class ReportBuilder {
 public:
  ReportBuilder(std::mt19937_64 &rng, const Schema &schema, Document &doc)
      : rng_(rng), schema_(schema), doc_(doc) {}

  void Append(const std::string &s) {
    doc_.text += s;
    pos_ += CodepointLength(s);
  }

  // Appends `s` and returns its span.
  Fragment AppendSpan(const std::string &s) {
    const std::size_t start = pos_;
    Append(s);
    return {start, pos_};
  }

  std::string AddEntity(const std::string &label, std::vector<Fragment> frags) {
    Entity e;
    e.id = "T" + std::to_string(doc_.entities.size() + 1);
    e.label = label;
    e.span = TextSpan(std::move(frags));
    e.surface = SurfaceText(doc_.text, e.span);
    doc_.entities.push_back(std::move(e));
    return doc_.entities.back().id;
  }

  Entity &entity(const std::string &id) {
    return doc_.entities[std::stoul(id.substr(1)) - 1];
  }

  bool Chance(double p) { return internal::UniformUnit(rng_) < p; }

  template <typename T>
  const T &Pick(const std::vector<T> &items) {
    return items[internal::UniformIndex(rng_, items.size())];
  }

  // Writes one sentence holding `n_triggers` events of `type` that share
  // every argument span. Returns the number of events written.
  void Sentence(const EventTypeDef &type, int n_triggers) {
    struct Pending {
      std::string role;
      std::string entity;
    };
    std::vector<Pending> args;
    std::vector<const RoleDef *> chosen;
    for (const auto &role : type.roles) {
      if (Chance(RoleProbability(role))) chosen.push_back(&role);
    }
    // Assertion cue first, then the other modifiers, then the trigger, then
    // the anatomy phrase.
    std::stable_partition(chosen.begin(), chosen.end(),
                          [](const RoleDef *r) { return r->name == "Assertion"; });

    if (type.name == "Indication") Append("Indication: ");
    bool first_word = true;
    for (const RoleDef *role : chosen) {
      if (role->hierarchical) continue;
      if (!first_word) Append(" ");
      first_word = false;
      if (role->kind == RoleKind::kSpanOnly) {
        auto it = SpanOnlyPhrases().find(role->name);
        const std::string phrase =
            it != SpanOnlyPhrases().end() ? Pick(it->second) : Lower(role->name);
        args.push_back({role->name, AddEntity(role->name, {AppendSpan(phrase)})});
      } else {
        const std::string &value = Pick(role->vocabulary);
        auto it = ValuePhrases().find(value);
        const std::string phrase = it != ValuePhrases().end() ? it->second : value;
        const std::string id = AddEntity(role->name, {AppendSpan(phrase)});
        entity(id).attributes[role->name] = value;
        args.push_back({role->name, id});
      }
    }

    std::vector<std::string> triggers;
    auto words_it = TriggerWords().find(type.name);
    const Phrases fallback{Lower(type.name)};
    const Phrases &words = words_it != TriggerWords().end() ? words_it->second : fallback;
    for (int k = 0; k < n_triggers; ++k) {
      if (k > 0) Append(" and");
      if (!first_word || k > 0) Append(" ");
      first_word = false;
      triggers.push_back(AddEntity(type.name, {AppendSpan(Pick(words))}));
    }

    for (const RoleDef *role : chosen) {
      if (!role->hierarchical) continue;
      const AnatomyParent &parent = Pick(schema_.anatomy().parents());
      const std::string &child = Pick(parent.children);
      const std::string organ = child == kUndeterminedChild
                                    ? Lower(parent.name) + " region"
                                    : Lower(child);
      Append(" in the ");
      std::vector<Fragment> frags;
      if (Chance(0.1)) {
        // "left and right kidney" annotated as the discontinuous "left kidney".
        frags.push_back(AppendSpan("left"));
        Append(" and right ");
        frags.push_back(AppendSpan(organ));
      } else {
        const std::string side = Chance(0.3) ? Pick(Phrases{"right ", "left ", "bilateral "}) : "";
        frags.push_back(AppendSpan(side + organ));
      }
      const std::string id = AddEntity(role->name, std::move(frags));
      const auto slots = role->Slots();
      entity(id).attributes[slots[0]] = parent.name;
      entity(id).attributes[slots[1]] = child;
      args.push_back({role->name, id});
    }
    Append(".");

    for (const auto &trigger : triggers) {
      EventAnnotation ev;
      ev.id = "E" + std::to_string(doc_.events.size() + 1);
      ev.event_type = type.name;
      ev.trigger = trigger;
      for (const auto &a : args) ev.arguments.push_back({a.role, a.entity});
      doc_.events.push_back(std::move(ev));
    }
    // Sometimes store a single-event value on the event instead of the span,
    // the way annotation exports attach attributes to event ids.
    if (triggers.size() == 1 && Chance(0.2)) {
      for (const auto &a : args) {
        Entity &target = entity(a.entity);
        if (a.role == "Assertion" && target.attributes.count("Assertion")) {
          doc_.events.back().attributes["Assertion"] = target.attributes["Assertion"];
          target.attributes.erase("Assertion");
        }
      }
    }
  }

 private:
  std::mt19937_64 &rng_;
  const Schema &schema_;
  Document &doc_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Document> GenerateSyntheticCorpus(const Schema &schema,
                                              std::size_t n_docs,
                                              std::uint64_t seed) {
  if (n_docs == 0) throw ParameterError("n_docs must be at least 1");
  std::mt19937_64 rng(seed);
  const std::array<Modality, 3> modalities{Modality::kCT, Modality::kMRI,
                                           Modality::kPETCT};
  std::vector<Document> docs;
  for (std::size_t i = 0; i < n_docs; ++i) {
    Document doc;
    char id[32];
    std::snprintf(id, sizeof(id), "synth_%04zu", i + 1);
    doc.id = id;
    doc.metadata.modality = modalities[i % 3];
    doc.metadata.synthetic = true;
    ReportBuilder b(rng, schema, doc);
    b.Append("SYNTHETIC REPORT - NOT PATIENT DATA\nEXAM: ");
    b.Append(std::string(ToString(*doc.metadata.modality)));
    b.Append(" chest, abdomen and pelvis.\n");

    // Indication-like types go in the header, everything else in findings.
    std::vector<const EventTypeDef *> findings;
    for (const auto &type : schema.event_types()) {
      const auto [lo, hi] = EventsPerReport(type.name);
      const int n = lo + static_cast<int>(internal::UniformIndex(rng, hi - lo + 1));
      for (int k = 0; k < n; ++k) findings.push_back(&type);
    }
    for (std::size_t k = findings.size(); k > 1; --k) {
      std::swap(findings[k - 1], findings[internal::UniformIndex(rng, k)]);
    }
    std::stable_partition(findings.begin(), findings.end(),
                          [](const EventTypeDef *t) { return t->name == "Indication"; });

    bool in_findings = false;
    for (std::size_t k = 0; k < findings.size();) {
      const EventTypeDef &type = *findings[k];
      if (type.name != "Indication" && !in_findings) {
        b.Append("\nFINDINGS:\n");
        in_findings = true;
      }
      // Two same-type events in a row may share one sentence and its spans.
      int n = 1;
      if (type.name != "Indication" && k + 1 < findings.size() &&
          findings[k + 1] == findings[k] && b.Chance(0.15)) {
        n = 2;
      }
      b.Sentence(type, n);
      b.Append(type.name == "Indication" ? "\n" : " ");
      k += n;
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace radevent
