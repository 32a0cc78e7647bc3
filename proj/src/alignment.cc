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

#include "radevent/alignment.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

namespace radevent {

long long MaxWeightAssignment(const std::vector<long long> &weights,
                              std::size_t rows, std::size_t cols,
                              std::vector<long> *row_to_col) {
  // Hungarian method with potentials on the square padding of the matrix,
  // minimizing the negated weights.
  const std::size_t n = std::max(rows, cols);
  if (row_to_col) row_to_col->assign(rows, -1);
  if (n == 0) return 0;
  auto cost = [&](std::size_t i, std::size_t j) -> long long {
    // 1-based indices.
    if (i > rows || j > cols) return 0;
    return -weights[(i - 1) * cols + (j - 1)];
  };
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), kInf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      long long delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long long cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  long long total = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    const std::size_t i = p[j];
    if (i == 0 || i > rows || j > cols) continue;
    const long long w = weights[(i - 1) * cols + (j - 1)];
    total += w;
    if (row_to_col && w > 0) (*row_to_col)[i - 1] = static_cast<long>(j - 1);
  }
  return total;
}

namespace {

std::vector<std::size_t> CanonicalOrder(std::span<const AlignItem> items) {
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto &x = items[a];
    const auto &y = items[b];
    return std::forward_as_tuple(x.span.start(), x.span, x.key, a) <
           std::forward_as_tuple(y.span.start(), y.span, y.key, b);
  });
  return order;
}

// Weight matrix restricted to the still-free rows and columns.
long long BestValue(const std::vector<long long> &w, std::size_t cols,
                    const std::vector<std::size_t> &free_rows,
                    const std::vector<std::size_t> &free_cols) {
  std::vector<long long> sub(free_rows.size() * free_cols.size());
  bool any = false;
  for (std::size_t i = 0; i < free_rows.size(); ++i) {
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      sub[i * free_cols.size() + j] = w[free_rows[i] * cols + free_cols[j]];
      any = any || sub[i * free_cols.size() + j] > 0;
    }
  }
  if (!any) return 0;
  return MaxWeightAssignment(sub, free_rows.size(), free_cols.size());
}

}  // namespace

Matching Align(std::span<const AlignItem> refs,
               std::span<const AlignItem> preds,
               const EquivalenceFn &equivalent) {
  // Work in canonical order so the answer does not depend on input order.
  const auto ref_order = CanonicalOrder(refs);
  const auto pred_order = CanonicalOrder(preds);
  const std::size_t rows = refs.size(), cols = preds.size();

  // Edge weight = bonus + overlap, with the bonus larger than any possible
  // overlap total, so cardinality dominates and overlap breaks ties.
  long long bonus = 1;
  for (const auto &r : refs) bonus += static_cast<long long>(r.span.length());
  std::vector<long long> w(rows * cols, 0);
  bool any_edge = false;
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t r = ref_order[i], p = pred_order[j];
      if (!equivalent(r, p)) continue;
      w[i * cols + j] =
          bonus + static_cast<long long>(refs[r].span.OverlapLength(preds[p].span));
      any_edge = true;
    }
  }

  Matching m;
  std::vector<char> pred_taken(cols, 0);
  if (any_edge) {
    std::vector<std::size_t> free_rows(rows), free_cols(cols);
    std::iota(free_rows.begin(), free_rows.end(), 0);
    std::iota(free_cols.begin(), free_cols.end(), 0);
    long long remaining = BestValue(w, cols, free_rows, free_cols);

    // Fix pairs greedily in canonical order, keeping each choice only if the
    // optimum over the rest is still reachable.
    for (std::size_t i = 0; i < rows && remaining > 0; ++i) {
      free_rows.erase(std::find(free_rows.begin(), free_rows.end(), i));
      for (std::size_t j : std::vector<std::size_t>(free_cols)) {
        const long long wij = w[i * cols + j];
        if (wij == 0) continue;
        std::vector<std::size_t> rest_cols;
        for (std::size_t c : free_cols) {
          if (c != j) rest_cols.push_back(c);
        }
        if (wij + BestValue(w, cols, free_rows, rest_cols) == remaining) {
          m.pairs.emplace_back(ref_order[i], pred_order[j]);
          pred_taken[pred_order[j]] = 1;
          free_cols = std::move(rest_cols);
          remaining -= wij;
          break;
        }
      }
    }
  }

  std::sort(m.pairs.begin(), m.pairs.end());
  std::vector<char> ref_taken(rows, 0);
  for (const auto &[r, p] : m.pairs) ref_taken[r] = 1;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!ref_taken[r]) m.unmatched_ref.push_back(r);
  }
  for (std::size_t p = 0; p < cols; ++p) {
    if (!pred_taken[p]) m.unmatched_pred.push_back(p);
  }
  return m;
}

}  // namespace radevent
