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

#include "radevent/significance.h"

#include <algorithm>
#include <map>
#include <random>
#include <thread>

#include "random_util.h"

namespace radevent {

MetricSelector MetricSelector::Parse(std::string_view text,
                                     const Schema &schema) {
  if (text == "overall") return {};
  const std::size_t slash = text.rfind('/');
  if (slash == std::string_view::npos) {
    throw ParameterError("metric must be 'overall' or '<event type>/<role>'");
  }
  CategoryKey key{std::string(text.substr(0, slash)),
                  std::string(text.substr(slash + 1))};
  const EventTypeDef *type = schema.FindEventType(key.event_type);
  if (type == nullptr ||
      (!key.is_trigger() && type->FindRole(key.role) == nullptr)) {
    throw ParameterError("unknown metric category '" + std::string(text) + "'");
  }
  return {std::move(key)};
}

std::string MetricSelector::ToString() const {
  return category ? category->ToString() : "overall";
}

std::vector<Counts> PerDocumentCounts(std::span<const Document> refs,
                                      std::span<const Document> preds,
                                      const Schema &schema,
                                      const MetricSelector &metric,
                                      MatchMode mode) {
  ScoreOptions options;
  options.mode = mode;
  std::vector<Counts> out;
  for (const auto &[ref, pred] : PairDocuments(refs, preds)) {
    Counts c;
    for (const auto &row : ScoreDocument(*ref, *pred, schema, options)) {
      if (!metric.category || row.key == *metric.category) c += row.counts;
    }
    out.push_back(c);
  }
  return out;
}

namespace {

double F1(const Counts &c) { return Prf(c).f1; }

double ResampleDelta(std::span<const Counts> a, std::span<const Counts> b,
                     std::span<const std::size_t> picks) {
  Counts sa, sb;
  for (std::size_t i : picks) {
    sa += a[i];
    sb += b[i];
  }
  return F1(sa) - F1(sb);
}

}  // namespace

BootstrapResult BootstrapFromCounts(std::span<const Counts> a,
                                    std::span<const Counts> b,
                                    const BootstrapOptions &options) {
  if (a.size() != b.size()) {
    throw PairingError("systems were scored on different document counts");
  }
  if (a.empty()) throw ParameterError("bootstrap needs at least one document");
  if (!options.exhaustive && options.replicates == 0) {
    throw ParameterError("replicates must be at least 1");
  }
  const std::size_t n = a.size();

  BootstrapResult result;
  result.seed = options.seed;
  result.exhaustive = options.exhaustive;
  Counts total_a, total_b;
  for (std::size_t i = 0; i < n; ++i) {
    total_a += a[i];
    total_b += b[i];
  }
  result.observed_delta = F1(total_a) - F1(total_b);
  const double sign = result.observed_delta < 0 ? -1.0 : 1.0;
  const double threshold = 2 * sign * result.observed_delta;

  if (options.exhaustive) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (total > 10'000'000 / n) {
        throw ParameterError("exhaustive enumeration is limited to n^n <= 1e7");
      }
      total *= n;
    }
    std::vector<std::size_t> picks(n, 0);
    std::size_t exceed = 0;
    for (std::size_t r = 0; r < total; ++r) {
      std::size_t code = r;
      for (std::size_t k = 0; k < n; ++k, code /= n) picks[k] = code % n;
      if (sign * ResampleDelta(a, b, picks) > threshold) ++exceed;
    }
    result.replicates = total;
    result.exceed_count = exceed;
  } else {
    const std::size_t reps = options.replicates;
    const unsigned workers =
        std::max(1u, std::min<unsigned>(options.workers,
                                        static_cast<unsigned>(reps)));
    std::vector<std::size_t> exceed_by_worker(workers, 0);
    auto run = [&](unsigned w) {
      std::vector<std::size_t> picks(n);
      std::size_t exceed = 0;
      for (std::size_t r = w; r < reps; r += workers) {
        std::mt19937_64 rng(
            internal::SplitMix64(options.seed ^ internal::SplitMix64(r)));
        for (auto &p : picks) p = internal::UniformIndex(rng, n);
        if (sign * ResampleDelta(a, b, picks) > threshold) ++exceed;
      }
      exceed_by_worker[w] = exceed;
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
      for (auto &t : threads) t.join();
    }
    result.replicates = reps;
    for (std::size_t e : exceed_by_worker) result.exceed_count += e;
  }

  result.p_value = result.observed_delta == 0
                       ? 1.0
                       : static_cast<double>(result.exceed_count) /
                             static_cast<double>(result.replicates);
  return result;
}

BootstrapResult PairedBootstrap(std::span<const Document> refs,
                                std::span<const Document> preds_a,
                                std::span<const Document> preds_b,
                                const Schema &schema,
                                const MetricSelector &metric,
                                const BootstrapOptions &options) {
  if (!options.exhaustive && options.replicates == 0) {
    throw ParameterError("replicates must be at least 1");
  }
  // Validates the id sets of both systems against the reference before any
  // scoring work.
  PairDocuments(refs, preds_a);
  PairDocuments(refs, preds_b);
  RequireValid(schema, refs);
  RequireValid(schema, preds_a);
  RequireValid(schema, preds_b);
  const auto a = PerDocumentCounts(refs, preds_a, schema, metric, options.mode);
  const auto b = PerDocumentCounts(refs, preds_b, schema, metric, options.mode);
  BootstrapResult result = BootstrapFromCounts(a, b, options);
  result.metric = metric.ToString();
  return result;
}

}  // namespace radevent
