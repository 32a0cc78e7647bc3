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
#include "oracles.h"
#include "radevent/text.h"

#include <algorithm>
#include <tuple>

namespace radevent::testing {

std::set<std::size_t> CharSet(const TextSpan &span) {
  std::set<std::size_t> out;
  for (const auto &f : span.fragments()) {
    for (std::size_t c = f.start; c < f.end; ++c) out.insert(c);
  }
  return out;
}

int ExhaustiveMaxMatching(int left, int right,
                          const std::function<bool(int, int)> &edge) {
  // best[mask] = max matching of the first i left nodes using right set mask.
  const int full = 1 << right;
  std::vector<int> best(full, -1);
  best[0] = 0;
  for (int i = 0; i < left; ++i) {
    std::vector<int> next = best;  // i left unmatched
    for (int mask = 0; mask < full; ++mask) {
      if (best[mask] < 0) continue;
      for (int j = 0; j < right; ++j) {
        if ((mask >> j) & 1 || !edge(i, j)) continue;
        next[mask | (1 << j)] = std::max(next[mask | (1 << j)], best[mask] + 1);
      }
    }
    best = std::move(next);
  }
  return *std::max_element(best.begin(), best.end());
}

namespace {

void Enumerate(int i, int left, int right, std::vector<char> &used,
               std::vector<std::pair<int, int>> &cur,
               const std::function<bool(int, int)> &edge,
               std::vector<std::vector<std::pair<int, int>>> &out) {
  if (i == left) {
    out.push_back(cur);
    return;
  }
  Enumerate(i + 1, left, right, used, cur, edge, out);
  for (int j = 0; j < right; ++j) {
    if (used[j] || !edge(i, j)) continue;
    used[j] = 1;
    cur.emplace_back(i, j);
    Enumerate(i + 1, left, right, used, cur, edge, out);
    cur.pop_back();
    used[j] = 0;
  }
}

struct OTrigger {
  std::string event_id, type;
  std::set<std::size_t> chars;
};

struct OArg {
  std::string event_id, type, role;
  std::set<std::size_t> chars;
  std::vector<std::string> values;  // "" for a missing value
};

bool Intersects(const std::set<std::size_t> &a, const std::set<std::size_t> &b) {
  for (std::size_t c : a) {
    if (b.count(c)) return true;
  }
  return false;
}

void CollectOracle(const Document &doc, const Schema &schema,
                   std::vector<OTrigger> &triggers, std::vector<OArg> &args) {
  for (const auto &ev : doc.events) {
    const Entity *t = doc.FindEntity(ev.trigger);
    triggers.push_back({ev.id, ev.event_type, CharSet(t->span)});
    const EventTypeDef *type = schema.FindEventType(ev.event_type);
    for (const auto &a : ev.arguments) {
      const Entity *target = doc.FindEntity(a.target);
      OArg arg{ev.id, ev.event_type, a.role, CharSet(target->span), {}};
      const RoleDef *role = type->FindRole(a.role);
      std::vector<std::string> slots;
      if (role->kind == RoleKind::kSpanWithValue) {
        if (role->hierarchical) {
          slots = {a.role + " Parent", a.role + " Child"};
        } else {
          slots = {a.role};
        }
      }
      for (const auto &s : slots) {
        std::string v;
        if (target->attributes.count(s)) {
          v = target->attributes.at(s);
        } else if (ev.attributes.count(s)) {
          v = ev.attributes.at(s);
        }
        arg.values.push_back(v);
      }
      args.push_back(std::move(arg));
    }
  }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> AllMatchings(
    int left, int right, const std::function<bool(int, int)> &edge) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<char> used(right, 0);
  std::vector<std::pair<int, int>> cur;
  Enumerate(0, left, right, used, cur, edge, out);
  return out;
}

AlignInstance RandomAlignInstance(std::mt19937_64 &rng, int max_per_side,
                                  bool strict) {
  AlignInstance inst;
  auto random_span = [&]() {
    std::vector<Fragment> frags;
    std::size_t pos = rng() % 30;
    const int n = (rng() % 5 == 0) ? 2 : 1;
    for (int i = 0; i < n; ++i) {
      const std::size_t len = 1 + rng() % 8;
      frags.push_back({pos, pos + len});
      pos += len + 1 + rng() % 5;
    }
    return TextSpan(std::move(frags));
  };
  const int nr = static_cast<int>(rng() % (max_per_side + 1));
  const int np = static_cast<int>(rng() % (max_per_side + 1));
  for (int i = 0; i < nr; ++i) {
    inst.refs.push_back({random_span(), "r" + std::to_string(rng() % 3)});
  }
  for (int j = 0; j < np; ++j) {
    // Some predictions copy or stretch a reference so strict edges exist.
    if (nr > 0 && rng() % 3 == 0) {
      const TextSpan &base = inst.refs[rng() % nr].span;
      inst.preds.push_back({base, "p" + std::to_string(rng() % 3)});
    } else {
      inst.preds.push_back({random_span(), "p" + std::to_string(rng() % 3)});
    }
  }
  inst.edge.assign(nr, std::vector<char>(np, 0));
  for (int i = 0; i < nr; ++i) {
    const auto a = CharSet(inst.refs[i].span);
    for (int j = 0; j < np; ++j) {
      const auto b = CharSet(inst.preds[j].span);
      const bool match = strict ? a == b : Intersects(a, b);
      inst.edge[i][j] = match && rng() % 6 != 0;
    }
  }
  return inst;
}

std::vector<std::pair<std::size_t, std::size_t>> OracleTieBreak(
    const AlignInstance &inst) {
  const int nr = static_cast<int>(inst.refs.size());
  const int np = static_cast<int>(inst.preds.size());
  auto rank_of = [](const std::vector<AlignItem> &items) {
    std::vector<std::size_t> order(items.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const auto &x = items[a];
      const auto &y = items[b];
      if (x.span.start() != y.span.start()) return x.span.start() < y.span.start();
      if (x.span != y.span) return x.span < y.span;
      if (x.key != y.key) return x.key < y.key;
      return a < b;
    });
    std::vector<std::size_t> rank(items.size());
    for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
    return std::make_pair(order, rank);
  };
  const auto [ref_order, ref_rank] = rank_of(inst.refs);
  const auto [pred_order, pred_rank] = rank_of(inst.preds);
  (void)ref_rank;
  (void)pred_order;

  std::vector<std::pair<std::size_t, std::size_t>> best;
  std::tuple<int, long long, std::vector<std::size_t>> best_key{
      -1, -1, std::vector<std::size_t>()};
  for (const auto &m : AllMatchings(nr, np, [&](int i, int j) {
         return inst.Edge(i, j);
       })) {
    long long overlap = 0;
    for (auto [i, j] : m) {
      const auto a = CharSet(inst.refs[i].span);
      for (auto c : CharSet(inst.preds[j].span)) overlap += a.count(c);
    }
    std::vector<std::size_t> partner(nr, static_cast<std::size_t>(np));
    for (auto [i, j] : m) partner[i] = pred_rank[j];
    std::vector<std::size_t> seq;
    for (std::size_t r : ref_order) seq.push_back(partner[r]);
    const int card = static_cast<int>(m.size());
    const auto &[bc, bo, bs] = best_key;
    const bool better = card > bc || (card == bc && overlap > bo) ||
                        (card == bc && overlap == bo && seq < bs);
    if (better) {
      best_key = {card, overlap, seq};
      best.clear();
      for (auto [i, j] : m) best.emplace_back(i, j);
    }
  }
  std::sort(best.begin(), best.end());
  return best;
}

std::map<std::string, Counts> OracleCounts(const std::vector<Document> &refs,
                                           const std::vector<Document> &preds,
                                           const Schema &schema, bool strict) {
  std::map<std::string, Counts> out;
  for (const auto &et : schema.event_types()) {
    out[et.name + "/TRIGGER"];
    for (const auto &r : et.roles) out[et.name + "/" + r.name];
  }
  auto spans_match = [&](const std::set<std::size_t> &a,
                         const std::set<std::size_t> &b) {
    return strict ? a == b : Intersects(a, b);
  };
  for (const auto &ref : refs) {
    const Document *pred = nullptr;
    for (const auto &p : preds) {
      if (p.id == ref.id) pred = &p;
    }
    std::vector<OTrigger> rt, pt;
    std::vector<OArg> ra, pa;
    CollectOracle(ref, schema, rt, ra);
    CollectOracle(*pred, schema, pt, pa);

    std::set<std::pair<std::string, std::string>> linked;
    for (const auto &a : rt) {
      for (const auto &b : pt) {
        if (a.type == b.type && spans_match(a.chars, b.chars)) {
          linked.emplace(a.event_id, b.event_id);
        }
      }
    }
    for (auto &[key, counts] : out) {
      const std::size_t slash = key.rfind('/');
      const std::string type = key.substr(0, slash);
      const std::string role = key.substr(slash + 1);
      int nr = 0, np = 0, matched = 0;
      if (role == "TRIGGER") {
        std::vector<const OTrigger *> r, p;
        for (const auto &t : rt) {
          if (t.type == type) r.push_back(&t);
        }
        for (const auto &t : pt) {
          if (t.type == type) p.push_back(&t);
        }
        nr = static_cast<int>(r.size());
        np = static_cast<int>(p.size());
        matched = ExhaustiveMaxMatching(nr, np, [&](int i, int j) {
          return spans_match(r[i]->chars, p[j]->chars);
        });
      } else {
        std::vector<const OArg *> r, p;
        for (const auto &a : ra) {
          if (a.type == type && a.role == role) r.push_back(&a);
        }
        for (const auto &a : pa) {
          if (a.type == type && a.role == role) p.push_back(&a);
        }
        nr = static_cast<int>(r.size());
        np = static_cast<int>(p.size());
        matched = ExhaustiveMaxMatching(nr, np, [&](int i, int j) {
          return spans_match(r[i]->chars, p[j]->chars) &&
                 linked.count({r[i]->event_id, p[j]->event_id}) &&
                 r[i]->values == p[j]->values;
        });
      }
      counts.tp += matched;
      counts.fp += np - matched;
      counts.fn += nr - matched;
    }
  }
  return out;
}

namespace {

std::size_t Draw(std::mt19937_64 &rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

bool Coin(std::mt19937_64 &rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

TextSpan Jitter(const TextSpan &span, std::size_t text_len,
                std::mt19937_64 &rng, double intensity) {
  if (!Coin(rng, 0.35 * intensity)) return span;
  auto frags = span.fragments();
  auto &first = frags.front();
  auto &last = frags.back();
  const long d1 = static_cast<long>(Draw(rng, 9)) - 4;
  const long d2 = static_cast<long>(Draw(rng, 9)) - 4;
  long s = static_cast<long>(first.start) + d1;
  long e = static_cast<long>(last.end) + d2;
  s = std::max(0L, s);
  e = std::min(static_cast<long>(text_len), e);
  if (frags.size() == 1) {
    if (s >= e) return span;
    return TextSpan(static_cast<std::size_t>(s), static_cast<std::size_t>(e));
  }
  // Keep inner boundaries; only move the outer ends when still valid.
  if (s < static_cast<long>(first.end)) first.start = static_cast<std::size_t>(s);
  if (e > static_cast<long>(last.start)) last.end = static_cast<std::size_t>(e);
  return TextSpan(std::move(frags));
}

}  // namespace

Document Perturb(const Document &ref, const Schema &schema,
                 std::mt19937_64 &rng, double intensity) {
  const std::size_t text_len = CodepointLength(ref.text);
  Document out;
  out.id = ref.id;
  out.text = ref.text;
  out.metadata = ref.metadata;
  auto add_entity = [&](const std::string &label, const TextSpan &span,
                        AttributeMap attrs) {
    Entity e;
    e.id = "T" + std::to_string(out.entities.size() + 1);
    e.label = label;
    e.span = span;
    e.surface = SurfaceText(out.text, span);
    e.attributes = std::move(attrs);
    out.entities.push_back(std::move(e));
    return out.entities.back().id;
  };
  auto emit = [&](const EventAnnotation &ev, std::string type) {
    const EventTypeDef *et = schema.FindEventType(type);
    const Entity *trig = ref.FindEntity(ev.trigger);
    EventAnnotation ne;
    ne.id = "E" + std::to_string(out.events.size() + 1);
    ne.event_type = type;
    ne.trigger = add_entity(type, Jitter(trig->span, text_len, rng, intensity), {});
    for (const auto &arg : ev.arguments) {
      const RoleDef *role = et->FindRole(arg.role);
      if (role == nullptr) continue;
      if (!role->required && Coin(rng, 0.15 * intensity)) continue;
      const Entity *target = ref.FindEntity(arg.target);
      AttributeMap attrs;
      for (const auto &slot : role->Slots()) {
        auto v = ArgumentSubtype(ev, *target, slot);
        if (v) attrs[slot] = *v;
      }
      if (role->kind == RoleKind::kSpanWithValue && Coin(rng, 0.15 * intensity)) {
        if (role->hierarchical) {
          const auto &parents = schema.anatomy().parents();
          const auto &p = parents[Draw(rng, parents.size())];
          attrs[role->name + " Parent"] = p.name;
          attrs[role->name + " Child"] = p.children[Draw(rng, p.children.size())];
        } else {
          attrs[role->name] = role->vocabulary[Draw(rng, role->vocabulary.size())];
        }
      }
      const std::string id =
          add_entity(arg.role, Jitter(target->span, text_len, rng, intensity), attrs);
      bool dup = false;
      for (const auto &a : ne.arguments) dup = dup || (a.role == arg.role && a.target == id);
      if (!dup) ne.arguments.push_back({arg.role, id});
    }
    out.events.push_back(std::move(ne));
  };

  for (const auto &ev : ref.events) {
    if (Coin(rng, 0.15 * intensity)) continue;
    std::string type = ev.event_type;
    if (Coin(rng, 0.08 * intensity)) {
      if (type == "Lesion") type = "Medical Problem";
      else if (type == "Medical Problem") type = "Lesion";
    }
    emit(ev, type);
    if (Coin(rng, 0.05 * intensity)) emit(ev, type);  // duplicate prediction
  }
  return out;
}

}  // namespace radevent::testing
