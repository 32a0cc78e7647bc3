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

#include <doctest.h>

#include <random>

#include "oracles.h"
#include "radevent/corpus_io.h"
#include "radevent/report.h"
#include "radevent/scoring.h"
#include "radevent/standoff.h"
#include "radevent/synthetic.h"

namespace radevent {
namespace {

const std::string kFixtures = RADEVENT_FIXTURE_DIR;

TEST_CASE("prf examples") {
  const Metrics a = Prf(3, 1, 2);
  CHECK(a.precision == 0.75);
  CHECK(a.recall == 0.6);
  CHECK(a.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK_FALSE(a.vacuous());

  const Metrics b = Prf(0, 0, 0);
  CHECK(b.precision == 1.0);
  CHECK(b.recall == 1.0);
  CHECK(b.f1 == 1.0);
  CHECK(b.vacuous());

  const Metrics c = Prf(0, 5, 0);
  CHECK(c.precision == 0.0);
  CHECK(c.recall_vacuous);
  CHECK_FALSE(c.precision_vacuous);
  CHECK(c.f1 == 0.0);

  const Metrics d = Prf(0, 0, 4);
  CHECK(d.recall == 0.0);
  CHECK(d.precision_vacuous);
  CHECK(d.f1 == 0.0);
}

ErrorBreakdown Classify(const std::string &text, const std::string &ref,
                        const std::string &pred) {
  const auto rs = text.find(ref), ps = text.find(pred);
  const std::vector<TextSpan> refs{TextSpan(rs, rs + ref.size())};
  const std::vector<TextSpan> preds{TextSpan(ps, ps + pred.size())};
  Matching m;
  m.pairs.emplace_back(0, 0);
  return CategorizeSpanErrors(m, refs, preds);
}

TEST_CASE("span error categories") {
  CHECK(Classify("Mild FDG activity", "Mild FDG activity", "FDG activity")
            .pred_shorter == 1);
  CHECK(Classify("hypodense lesions", "hypodense lesions", "lesions")
            .pred_shorter == 1);
  CHECK(Classify("renal cell carcinoma", "carcinoma", "renal cell carcinoma")
            .pred_longer == 1);
  CHECK(Classify("mass", "mass", "mass").exact == 1);

  const std::vector<TextSpan> refs{TextSpan(0, 10), TextSpan(30, 32)};
  const std::vector<TextSpan> preds{TextSpan(5, 15), TextSpan(40, 41)};
  Matching m;
  m.pairs.emplace_back(0, 0);
  m.unmatched_ref = {1};
  m.unmatched_pred = {1};
  const ErrorBreakdown e = CategorizeSpanErrors(m, refs, preds);
  CHECK(e.pred_other_overlap == 1);
  CHECK(e.missing == 1);
  CHECK(e.spurious == 1);
  CHECK(e.matched() == 1);
}

std::vector<Document> Fixture(const std::string &side) {
  return ReadCorpusDir(kFixtures + "/mini3/" + side);
}

TEST_CASE("mini3 frozen table") {
  const auto refs = Fixture("ref"), preds = Fixture("pred");
  const ScoreReport r = ScoreCorpus(refs, preds, DefaultSchema());
  struct Row {
    const char *type, *role;
    Counts c;
  };
  const std::vector<Row> expected{
      {"Indication", "TRIGGER", {1, 0, 0}},
      {"Indication", "Indication Type", {0, 1, 1}},
      {"Lesion", "TRIGGER", {2, 1, 1}},
      {"Lesion", "Anatomy", {1, 1, 1}},
      {"Lesion", "Assertion", {1, 2, 2}},
      {"Lesion", "Characteristic", {0, 0, 1}},
      {"Medical Problem", "TRIGGER", {3, 0, 0}},
      {"Medical Problem", "Anatomy", {1, 0, 0}},
      {"Medical Problem", "Assertion", {3, 0, 0}},
      {"Medical Problem", "Size Trend", {0, 0, 1}},
  };
  std::size_t nonvacuous = 0;
  for (const auto &row : r.rows) {
    if (!row.metrics.vacuous()) ++nonvacuous;
  }
  CHECK(nonvacuous == expected.size());
  for (const auto &e : expected) {
    const ScoreRow *row = r.Find({e.type, e.role});
    REQUIRE(row);
    CHECK(row->metrics.counts == e.c);
  }
  CHECK(r.overall.counts == Counts{12, 5, 7});
  CHECK(r.overall.precision == 12.0 / 17.0);
  CHECK(r.overall.recall == 12.0 / 19.0);
  CHECK(r.overall.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(r.doc_count == 3);

  CHECK(r.Find({"Lesion", "TRIGGER"})->errors.pred_longer == 1);
  CHECK(r.Find({"Lesion", "Anatomy"})->errors.pred_shorter == 1);
  CHECK(r.Find({"Medical Problem", "TRIGGER"})->errors.pred_shorter == 1);
  CHECK(r.Find({"Medical Problem", "Anatomy"})->errors.pred_longer == 1);

  // Same table from the independent oracle.
  const auto oracle = testing::OracleCounts(refs, preds, DefaultSchema(), false);
  for (const auto &row : r.rows) {
    CHECK(oracle.at(row.key.ToString()) == row.metrics.counts);
  }
}

TEST_CASE("self score is perfect") {
  const auto docs = GenerateSyntheticCorpus(DefaultSchema(), 8, 5);
  for (MatchMode mode : {MatchMode::kOverlap, MatchMode::kStrict}) {
    const ScoreReport r = ScoreCorpus(docs, docs, DefaultSchema(), {mode});
    for (const auto &row : r.rows) {
      CHECK(row.metrics.f1 == 1.0);
      CHECK(row.metrics.precision == 1.0);
      CHECK(row.metrics.recall == 1.0);
    }
    CHECK(r.overall.f1 == 1.0);
  }
}

TEST_CASE("empty predictions") {
  const auto refs = GenerateSyntheticCorpus(DefaultSchema(), 3, 5);
  std::vector<Document> preds = refs;
  for (auto &d : preds) {
    d.entities.clear();
    d.events.clear();
  }
  const ScoreReport r = ScoreCorpus(refs, preds, DefaultSchema());
  for (const auto &row : r.rows) {
    if (row.metrics.vacuous()) continue;
    CHECK(row.metrics.recall == 0.0);
    CHECK(row.metrics.precision_vacuous);
    CHECK(row.metrics.f1 == 0.0);
  }
}

TEST_CASE("scores match the oracle on perturbed corpora") {
  const auto refs = GenerateSyntheticCorpus(DefaultSchema(), 12, 21);
  std::mt19937_64 rng(77);
  for (int round = 0; round < 4; ++round) {
    std::vector<Document> preds;
    for (const auto &d : refs) preds.push_back(testing::Perturb(d, DefaultSchema(), rng));
    for (const auto &p : preds) CHECK(ValidateDocument(DefaultSchema(), p).empty());
    for (bool strict : {false, true}) {
      const ScoreReport r = ScoreCorpus(
          refs, preds, DefaultSchema(),
          {strict ? MatchMode::kStrict : MatchMode::kOverlap});
      const auto oracle = testing::OracleCounts(refs, preds, DefaultSchema(), strict);
      Counts sum;
      for (const auto &row : r.rows) {
        CHECK(oracle.at(row.key.ToString()) == row.metrics.counts);
        sum += row.metrics.counts;
      }
      CHECK(r.overall.counts == sum);
    }
  }
}

TEST_CASE("swap and micro identities") {
  const auto refs = GenerateSyntheticCorpus(DefaultSchema(), 6, 4);
  std::mt19937_64 rng(8);
  std::vector<Document> preds;
  for (const auto &d : refs) preds.push_back(testing::Perturb(d, DefaultSchema(), rng));
  const ScoreReport ab = ScoreCorpus(refs, preds, DefaultSchema());
  const ScoreReport ba = ScoreCorpus(preds, refs, DefaultSchema());
  REQUIRE(ab.rows.size() == ba.rows.size());
  for (std::size_t i = 0; i < ab.rows.size(); ++i) {
    CHECK(ab.rows[i].metrics.f1 == ba.rows[i].metrics.f1);
    CHECK(ab.rows[i].metrics.precision == ba.rows[i].metrics.recall);
    CHECK(ab.rows[i].metrics.recall == ba.rows[i].metrics.precision);
  }
  CHECK(ab.overall.f1 == ba.overall.f1);
  Counts sum;
  for (const auto &row : ab.rows) sum += row.metrics.counts;
  const Metrics micro = Prf(sum);
  CHECK(micro.f1 == ab.overall.f1);
  CHECK(micro.precision == ab.overall.precision);
}

TEST_CASE("pairing and validation errors") {
  const auto refs = Fixture("ref");
  std::vector<Document> preds(refs.begin(), refs.begin() + 2);
  CHECK_THROWS_AS(ScoreCorpus(refs, preds, DefaultSchema()), PairingError);

  std::vector<Document> bad = refs;
  bad[0].events[1].attributes["Assertion"] = "perhaps";
  bad[0].entities[3].attributes.clear();
  CHECK_THROWS_AS(ScoreCorpus(refs, bad, DefaultSchema()), ValidationError);
}

TEST_CASE("aligned trigger link") {
  const auto refs = Fixture("ref"), preds = Fixture("pred");
  const ScoreReport r = ScoreCorpus(refs, preds, DefaultSchema(),
                                    {MatchMode::kOverlap, TriggerLink::kAligned});
  // The fixture has no competing triggers, so both policies agree.
  CHECK(r.overall.counts == Counts{12, 5, 7});
}

TEST_CASE("aligned trigger link can rank strict above overlap") {
  const std::string text = "Known hypodense lesions.";
  const std::vector<Document> ref{ParseDocument(
      text,
      "T1\tLesion 16 23\tlesions\nT2\tAssertion 0 5\tKnown\n"
      "E1\tLesion:T1 Assertion:T2\nA1\tAssertion T2 present\n",
      "x")};
  // Two predicted triggers overlap the reference equally; the right
  // assertion hangs off the exact one.
  const std::vector<Document> pred{ParseDocument(
      text,
      "T1\tLesion 6 23\thypodense lesions\nT2\tLesion 16 23\tlesions\n"
      "T3\tAssertion 0 5\tKnown\nT4\tAssertion 0 5\tKnown\n"
      "E1\tLesion:T1 Assertion:T4\nE2\tLesion:T2 Assertion:T3\n"
      "A1\tAssertion T3 present\nA2\tAssertion T4 possible\n",
      "x")};
  const CategoryKey key{"Lesion", "Assertion"};
  auto tp = [&](MatchMode mode, TriggerLink link) {
    return ScoreCorpus(ref, pred, DefaultSchema(), {mode, link})
        .Find(key)->metrics.counts.tp;
  };
  CHECK(tp(MatchMode::kStrict, TriggerLink::kAligned) == 1);
  CHECK(tp(MatchMode::kOverlap, TriggerLink::kAligned) == 0);
  CHECK(tp(MatchMode::kStrict, TriggerLink::kEquivalent) == 1);
  CHECK(tp(MatchMode::kOverlap, TriggerLink::kEquivalent) == 1);
}

TEST_CASE("report rendering") {
  const auto refs = Fixture("ref"), preds = Fixture("pred");
  const ScoreReport r = ScoreCorpus(refs, preds, DefaultSchema());
  const auto j = ScoreReportToJson(r, {});
  CHECK(j["mode"] == "overlap");
  CHECK(j["averaging"] == "micro");
  CHECK(j.contains("tool_version"));
  CHECK(j["overall"]["tp"] == 12);
  const std::string table = ScoreReportToTable(r, {});
  CHECK(table.find("Lesion") != std::string::npos);
  CHECK(table.find("0.667") != std::string::npos);
}

}  // namespace
}  // namespace radevent
