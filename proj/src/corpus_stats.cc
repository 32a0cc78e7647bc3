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

#include "radevent/corpus_stats.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "radevent/version.h"
#include "random_util.h"

namespace radevent {

using ordered_json = nlohmann::ordered_json;

Grouping ParseGrouping(std::string_view s) {
  if (s == "all") return Grouping::kAll;
  if (s == "modality") return Grouping::kModality;
  if (s == "split") return Grouping::kSplit;
  throw ParameterError("unknown grouping '" + std::string(s) +
                       "' (expected all, modality or split)");
}

std::string_view ToString(Grouping g) {
  switch (g) {
    case Grouping::kAll:
      return "all";
    case Grouping::kModality:
      return "modality";
    case Grouping::kSplit:
      return "split";
  }
  return "";
}

MeanStd ComputeMeanStd(std::span<const double> values) {
  if (values.empty()) return {};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / n)};
}

std::int64_t GroupStats::Count(const CategoryKey &key) const {
  for (const auto &[k, n] : counts) {
    if (k == key) return n;
  }
  return 0;
}

namespace {

constexpr std::string_view kUnspecified = "unspecified";

GroupStats Summarize(std::string name, std::span<const Document *const> docs,
                     const Schema &schema) {
  GroupStats g;
  g.name = std::move(name);
  g.doc_count = docs.size();
  const auto &types = schema.event_types();
  std::vector<std::vector<double>> per_report(types.size());
  for (const auto &et : types) {
    g.counts.push_back({{et.name, std::string(kTriggerRole)}, 0});
    for (const auto &role : et.roles) g.counts.push_back({{et.name, role.name}, 0});
  }
  auto bump = [&](const CategoryKey &key) {
    for (auto &[k, n] : g.counts) {
      if (k == key) {
        ++n;
        return;
      }
    }
  };

  for (const Document *doc : docs) {
    std::vector<double> triggers(types.size(), 0);
    for (const auto &ev : doc->events) {
      const EventTypeDef *et = schema.FindEventType(ev.event_type);
      if (et == nullptr) continue;
      triggers[et - types.data()] += 1;
      bump({ev.event_type, std::string(kTriggerRole)});
      for (const auto &arg : ev.arguments) {
        const RoleDef *role = et->FindRole(arg.role);
        if (role == nullptr) continue;
        bump({ev.event_type, arg.role});
        const Entity *target = doc->FindEntity(arg.target);
        for (const auto &slot : role->Slots()) {
          if (auto value = ArgumentSubtype(ev, *target, slot)) {
            ++g.subtype_values[ev.event_type + "/" + slot][*value];
          }
        }
      }
    }
    for (std::size_t t = 0; t < types.size(); ++t) {
      per_report[t].push_back(triggers[t]);
    }
  }
  for (std::size_t t = 0; t < types.size(); ++t) {
    g.triggers_per_report.emplace_back(types[t].name,
                                       ComputeMeanStd(per_report[t]));
  }
  return g;
}

std::string GroupName(const Document &doc, Grouping grouping) {
  if (grouping == Grouping::kModality) {
    return doc.metadata.modality ? std::string(ToString(*doc.metadata.modality))
                                 : std::string(kUnspecified);
  }
  return doc.metadata.split ? std::string(ToString(*doc.metadata.split))
                            : std::string(kUnspecified);
}

std::vector<std::string> GroupOrder(Grouping grouping) {
  if (grouping == Grouping::kModality) return {"CT", "MRI", "PET-CT"};
  return {"train", "validation", "test"};
}

}  // namespace

StatsReport CorpusSummary(std::span<const Document> docs, const Schema &schema,
                          Grouping grouping) {
  // Sort by id so that the summary does not depend on input order.
  std::vector<const Document *> sorted;
  for (const auto &d : docs) sorted.push_back(&d);
  std::sort(sorted.begin(), sorted.end(),
            [](const Document *a, const Document *b) { return a->id < b->id; });

  StatsReport report;
  report.grouping = grouping;
  report.total = Summarize("all", sorted, schema);
  if (grouping == Grouping::kAll) return report;

  auto names = GroupOrder(grouping);
  names.emplace_back(kUnspecified);
  for (const auto &name : names) {
    std::vector<const Document *> members;
    for (const Document *d : sorted) {
      if (GroupName(*d, grouping) == name) members.push_back(d);
    }
    if (!members.empty()) report.groups.push_back(Summarize(name, members, schema));
  }
  return report;
}

namespace {

ordered_json GroupToJson(const GroupStats &g) {
  ordered_json j;
  j["name"] = g.name;
  j["doc_count"] = g.doc_count;
  ordered_json counts = ordered_json::array();
  for (const auto &[key, n] : g.counts) {
    counts.push_back({{"event_type", key.event_type}, {"role", key.role}, {"count", n}});
  }
  j["counts"] = std::move(counts);
  ordered_json triggers = ordered_json::object();
  for (const auto &[type, ms] : g.triggers_per_report) {
    triggers[type] = {{"mean", ms.mean}, {"std", ms.std}};
  }
  j["triggers_per_report"] = std::move(triggers);
  ordered_json hist = ordered_json::object();
  for (const auto &[slot, values] : g.subtype_values) {
    ordered_json v = ordered_json::object();
    for (const auto &[value, n] : values) v[value] = n;
    hist[slot] = std::move(v);
  }
  j["subtype_values"] = std::move(hist);
  return j;
}

std::string Fixed(double v, int digits) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string PadRight(const std::string &s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
}

std::string PadLeft(const std::string &s, std::size_t w) {
  return s.size() >= w ? " " + s : std::string(w - s.size(), ' ') + s;
}

}  // namespace

ordered_json StatsReportToJson(const StatsReport &report) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["grouping"] = ToString(report.grouping);
  j["std_convention"] = "population";
  ordered_json groups = ordered_json::array();
  for (const auto &g : report.groups) groups.push_back(GroupToJson(g));
  j["groups"] = std::move(groups);
  j["total"] = GroupToJson(report.total);
  return j;
}

std::string StatsReportToTable(const StatsReport &report) {
  std::vector<const GroupStats *> columns;
  for (const auto &g : report.groups) columns.push_back(&g);
  columns.push_back(&report.total);

  std::size_t label_w = 12;
  for (const auto &[key, n] : report.total.counts) {
    label_w = std::max(label_w, key.event_type.size() + key.role.size() + 5);
  }
  for (const auto &[slot, values] : report.total.subtype_values) {
    for (const auto &[value, n] : values) {
      label_w = std::max(label_w, slot.size() + value.size() + 5);
    }
  }
  const std::size_t col_w = 16;

  std::ostringstream out;
  out << PadRight("", label_w);
  for (const GroupStats *g : columns) out << PadLeft(g->name, col_w);
  out << '\n' << PadRight("Reports", label_w);
  for (const GroupStats *g : columns) {
    out << PadLeft(std::to_string(g->doc_count), col_w);
  }
  out << '\n' << std::string(label_w + col_w * columns.size(), '-') << '\n';

  for (std::size_t i = 0; i < report.total.counts.size(); ++i) {
    const CategoryKey &key = report.total.counts[i].first;
    const bool trigger = key.is_trigger();
    out << PadRight(trigger ? key.event_type : "  " + key.role, label_w);
    for (const GroupStats *g : columns) {
      std::string cell = std::to_string(g->counts[i].second);
      if (trigger) {
        for (const auto &[type, ms] : g->triggers_per_report) {
          if (type == key.event_type) cell += " (" + Fixed(ms.mean, 2) + ")";
        }
      }
      out << PadLeft(cell, col_w);
    }
    out << '\n';
  }

  out << "\nTriggers per report (mean +/- population std)\n";
  for (std::size_t t = 0; t < report.total.triggers_per_report.size(); ++t) {
    out << PadRight(report.total.triggers_per_report[t].first, label_w);
    for (const GroupStats *g : columns) {
      const MeanStd &ms = g->triggers_per_report[t].second;
      out << PadLeft(Fixed(ms.mean, 2) + "+/-" + Fixed(ms.std, 2), col_w);
    }
    out << '\n';
  }

  if (!report.total.subtype_values.empty()) {
    out << "\nSubtype values\n";
    for (const auto &[slot, values] : report.total.subtype_values) {
      for (const auto &[value, n] : values) {
        out << PadRight(slot + " = " + value, label_w);
        for (const GroupStats *g : columns) {
          std::int64_t c = 0;
          if (auto it = g->subtype_values.find(slot); it != g->subtype_values.end()) {
            if (auto v = it->second.find(value); v != it->second.end()) c = v->second;
          }
          out << PadLeft(std::to_string(c), col_w);
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

std::array<std::size_t, 3> LargestRemainderSizes(std::size_t n,
                                                 const SplitRatios &ratios) {
  const std::array<double, 3> r{ratios.train, ratios.validation, ratios.test};
  std::array<std::size_t, 3> sizes{};
  std::array<double, 3> remainder{};
  std::size_t assigned = 0;
  for (int i = 0; i < 3; ++i) {
    const double quota = static_cast<double>(n) * r[i];
    // Absorb representation error such as 10 * 0.7 = 6.9999999999999996.
    const double whole = std::floor(quota + 1e-9);
    sizes[i] = static_cast<std::size_t>(whole);
    remainder[i] = std::max(0.0, quota - whole);
    assigned += sizes[i];
  }
  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return remainder[a] > remainder[b]; });
  for (std::size_t k = 0; assigned < n; ++k, ++assigned) ++sizes[order[k % 3]];
  return sizes;
}

SplitManifest MakeSplits(std::vector<std::string> doc_ids,
                         const SplitRatios &ratios, std::uint64_t seed) {
  if (doc_ids.empty()) throw ParameterError("no document ids to split");
  if (ratios.train <= 0 || ratios.validation <= 0 || ratios.test <= 0) {
    throw ParameterError("split ratios must be positive");
  }
  if (std::abs(ratios.train + ratios.validation + ratios.test - 1.0) > 1e-9) {
    throw ParameterError("split ratios must sum to 1");
  }
  std::sort(doc_ids.begin(), doc_ids.end());
  if (std::adjacent_find(doc_ids.begin(), doc_ids.end()) != doc_ids.end()) {
    throw ParameterError("duplicate document ids");
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i = doc_ids.size() - 1; i > 0; --i) {
    std::swap(doc_ids[i], doc_ids[internal::UniformIndex(rng, i + 1)]);
  }

  SplitManifest m;
  m.ratios = ratios;
  m.seed = seed;
  m.sizes = LargestRemainderSizes(doc_ids.size(), ratios);
  std::size_t pos = 0;
  const std::array<Split, 3> tags{Split::kTrain, Split::kValidation, Split::kTest};
  for (int g = 0; g < 3; ++g) {
    for (std::size_t k = 0; k < m.sizes[g]; ++k) m.assignment[doc_ids[pos++]] = tags[g];
  }
  return m;
}

ordered_json SplitManifestToJson(const SplitManifest &manifest) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  j["seed"] = manifest.seed;
  j["ratios"] = {{"train", manifest.ratios.train},
                 {"validation", manifest.ratios.validation},
                 {"test", manifest.ratios.test}};
  j["sizes"] = {{"train", manifest.sizes[0]},
                {"validation", manifest.sizes[1]},
                {"test", manifest.sizes[2]}};
  ordered_json docs = ordered_json::object();
  for (const auto &[id, split] : manifest.assignment) docs[id] = ToString(split);
  j["documents"] = std::move(docs);
  return j;
}

}  // namespace radevent
