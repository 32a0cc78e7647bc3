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

#include "radevent/scoring.h"

#include <algorithm>
#include <map>
#include <set>
#include <type_traits>

namespace radevent {

Metrics Prf(std::int64_t tp, std::int64_t fp, std::int64_t fn) {
  Metrics m;
  m.counts = {tp, fp, fn};
  m.precision_vacuous = tp + fp == 0;
  m.recall_vacuous = tp + fn == 0;
  m.precision = m.precision_vacuous ? 1.0 : static_cast<double>(tp) / (tp + fp);
  m.recall = m.recall_vacuous ? 1.0 : static_cast<double>(tp) / (tp + fn);
  const double sum = m.precision + m.recall;
  m.f1 = sum > 0 ? 2 * m.precision * m.recall / sum : 0.0;
  return m;
}

ErrorBreakdown &ErrorBreakdown::operator+=(const ErrorBreakdown &o) {
  exact += o.exact;
  pred_shorter += o.pred_shorter;
  pred_longer += o.pred_longer;
  pred_other_overlap += o.pred_other_overlap;
  spurious += o.spurious;
  missing += o.missing;
  return *this;
}

ErrorBreakdown CategorizeSpanErrors(const Matching &matching,
                                    std::span<const TextSpan> refs,
                                    std::span<const TextSpan> preds) {
  ErrorBreakdown out;
  for (const auto &[r, p] : matching.pairs) {
    const TextSpan &ref = refs[r];
    const TextSpan &pred = preds[p];
    if (ref == pred) {
      ++out.exact;
    } else if (pred.IsSubsetOf(ref)) {
      ++out.pred_shorter;
    } else if (ref.IsSubsetOf(pred)) {
      ++out.pred_longer;
    } else {
      ++out.pred_other_overlap;
    }
  }
  out.spurious = static_cast<std::int64_t>(matching.unmatched_pred.size());
  out.missing = static_cast<std::int64_t>(matching.unmatched_ref.size());
  return out;
}

namespace {

struct DocInstances {
  // Indexed like schema.event_types().
  std::vector<std::vector<TriggerInstance>> triggers;
  // [event type][role]
  std::vector<std::vector<std::vector<ArgumentInstance>>> arguments;
};

DocInstances Collect(const Document &doc, const Schema &schema) {
  const auto &types = schema.event_types();
  DocInstances out;
  out.triggers.resize(types.size());
  out.arguments.resize(types.size());
  for (std::size_t t = 0; t < types.size(); ++t) {
    out.arguments[t].resize(types[t].roles.size());
  }
  for (const auto &ev : doc.events) {
    const auto type_it =
        std::find_if(types.begin(), types.end(),
                     [&](const EventTypeDef &et) { return et.name == ev.event_type; });
    if (type_it == types.end()) continue;
    const std::size_t t = type_it - types.begin();
    const Entity *trigger = doc.FindEntity(ev.trigger);
    out.triggers[t].push_back({ev.id, ev.event_type, trigger->span});
    for (const auto &arg : ev.arguments) {
      const auto &roles = type_it->roles;
      const auto role_it = std::find_if(
          roles.begin(), roles.end(),
          [&](const RoleDef &r) { return r.name == arg.role; });
      if (role_it == roles.end()) continue;
      const Entity *target = doc.FindEntity(arg.target);
      ArgumentInstance inst{ev.id, arg.role, arg.target, target->span, {}};
      for (const auto &slot : role_it->Slots()) {
        inst.subtypes.push_back(ArgumentSubtype(ev, *target, slot));
      }
      out.arguments[t][role_it - roles.begin()].push_back(std::move(inst));
    }
  }
  return out;
}

template <typename Instance>
std::vector<AlignItem> ToAlignItems(const std::vector<Instance> &items) {
  std::vector<AlignItem> out;
  out.reserve(items.size());
  for (const auto &it : items) {
    if constexpr (std::is_same_v<Instance, ArgumentInstance>) {
      out.push_back({it.span, it.event_id + "/" + it.entity_id});
    } else {
      out.push_back({it.span, it.event_id});
    }
  }
  return out;
}

std::vector<TextSpan> Spans(const std::vector<AlignItem> &items) {
  std::vector<TextSpan> out;
  for (const auto &i : items) out.push_back(i.span);
  return out;
}

CategoryResult ResultFrom(CategoryKey key, const Matching &m,
                          const std::vector<AlignItem> &refs,
                          const std::vector<AlignItem> &preds) {
  CategoryResult r;
  r.key = std::move(key);
  r.counts.tp = static_cast<std::int64_t>(m.pairs.size());
  r.counts.fp = static_cast<std::int64_t>(m.unmatched_pred.size());
  r.counts.fn = static_cast<std::int64_t>(m.unmatched_ref.size());
  const auto ref_spans = Spans(refs);
  const auto pred_spans = Spans(preds);
  r.errors = CategorizeSpanErrors(m, ref_spans, pred_spans);
  return r;
}

}  // namespace

std::vector<CategoryResult> ScoreDocument(const Document &ref,
                                          const Document &pred,
                                          const Schema &schema,
                                          const ScoreOptions &options) {
  const DocInstances ri = Collect(ref, schema);
  const DocInstances pi = Collect(pred, schema);
  const MatchMode mode = options.mode;
  std::vector<CategoryResult> out;

  const auto &types = schema.event_types();
  for (std::size_t t = 0; t < types.size(); ++t) {
    const auto &rt = ri.triggers[t];
    const auto &pt = pi.triggers[t];
    const auto ref_items = ToAlignItems(rt);
    const auto pred_items = ToAlignItems(pt);
    const Matching tm =
        Align(ref_items, pred_items, [&](std::size_t a, std::size_t b) {
          return TriggersEquivalent(mode, rt[a], pt[b]);
        });
    out.push_back(ResultFrom({types[t].name, std::string(kTriggerRole)}, tm,
                             ref_items, pred_items));

    TriggerLinks links;
    if (options.trigger_link == TriggerLink::kAligned) {
      for (const auto &[a, b] : tm.pairs) links.Add(rt[a].event_id, pt[b].event_id);
    } else {
      for (const auto &a : rt) {
        for (const auto &b : pt) {
          if (TriggersEquivalent(mode, a, b)) links.Add(a.event_id, b.event_id);
        }
      }
    }

    for (std::size_t r = 0; r < types[t].roles.size(); ++r) {
      const auto &ra = ri.arguments[t][r];
      const auto &pa = pi.arguments[t][r];
      const auto ref_args = ToAlignItems(ra);
      const auto pred_args = ToAlignItems(pa);
      const Matching am =
          Align(ref_args, pred_args, [&](std::size_t a, std::size_t b) {
            return ArgumentsEquivalent(mode, ra[a], pa[b], links);
          });
      out.push_back(ResultFrom({types[t].name, types[t].roles[r].name}, am,
                               ref_args, pred_args));
    }
  }
  return out;
}

const ScoreRow *ScoreReport::Find(const CategoryKey &key) const {
  for (const auto &row : rows) {
    if (row.key == key) return &row;
  }
  return nullptr;
}

namespace {

std::string DescribeViolations(const std::vector<Violation> &violations) {
  std::string msg = std::to_string(violations.size()) +
                    " schema violation(s); first: ";
  if (!violations.empty()) {
    const auto &v = violations.front();
    msg += v.doc_id + " " + v.annotation_id + " " + v.rule + ": " + v.message;
  }
  return msg;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(DescribeViolations(violations)),
      violations_(std::move(violations)) {}

std::vector<std::pair<const Document *, const Document *>> PairDocuments(
    std::span<const Document> refs, std::span<const Document> preds) {
  std::map<std::string, const Document *> ref_by_id, pred_by_id;
  for (const auto &d : refs) {
    if (!ref_by_id.emplace(d.id, &d).second) {
      throw PairingError("document id " + d.id + " appears twice");
    }
  }
  for (const auto &d : preds) {
    if (!pred_by_id.emplace(d.id, &d).second) {
      throw PairingError("document id " + d.id + " appears twice");
    }
  }
  std::string only_ref, only_pred;
  for (const auto &[id, d] : ref_by_id) {
    if (!pred_by_id.count(id)) only_ref += " " + id;
  }
  for (const auto &[id, d] : pred_by_id) {
    if (!ref_by_id.count(id)) only_pred += " " + id;
  }
  if (!only_ref.empty() || !only_pred.empty()) {
    std::string msg = "document sets differ.";
    if (!only_ref.empty()) msg += " Only in first set:" + only_ref + ".";
    if (!only_pred.empty()) msg += " Only in second set:" + only_pred + ".";
    throw PairingError(msg);
  }
  std::vector<std::pair<const Document *, const Document *>> out;
  for (const auto &[id, d] : ref_by_id) out.emplace_back(d, pred_by_id[id]);
  return out;
}

void RequireValid(const Schema &schema, std::span<const Document> docs) {
  std::vector<Violation> all;
  for (const auto &d : docs) {
    auto v = ValidateDocument(schema, d);
    all.insert(all.end(), v.begin(), v.end());
  }
  if (!all.empty()) throw ValidationError(std::move(all));
}

ScoreReport MakeReport(MatchMode mode, std::vector<CategoryResult> totals,
                       std::size_t doc_count) {
  ScoreReport report;
  report.mode = mode;
  report.doc_count = doc_count;
  Counts sum;
  for (auto &t : totals) {
    sum += t.counts;
    report.overall_errors += t.errors;
    report.rows.push_back({std::move(t.key), Prf(t.counts), t.errors});
  }
  report.overall = Prf(sum);
  return report;
}

ScoreReport ScoreCorpus(std::span<const Document> refs,
                        std::span<const Document> preds, const Schema &schema,
                        const ScoreOptions &options) {
  const auto pairs = PairDocuments(refs, preds);
  RequireValid(schema, refs);
  RequireValid(schema, preds);
  std::vector<CategoryResult> totals;
  for (const auto &[ref, pred] : pairs) {
    auto doc = ScoreDocument(*ref, *pred, schema, options);
    if (totals.empty()) {
      totals = std::move(doc);
      continue;
    }
    for (std::size_t i = 0; i < doc.size(); ++i) {
      totals[i].counts += doc[i].counts;
      totals[i].errors += doc[i].errors;
    }
  }
  if (totals.empty()) {
    // No documents: emit the schema's rows with zero counts.
    Document empty;
    totals = ScoreDocument(empty, empty, schema, options);
  }
  return MakeReport(options.mode, std::move(totals), pairs.size());
}

}  // namespace radevent
