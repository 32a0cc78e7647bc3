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

#include <algorithm>
#include <json.hpp>
#include <random>

#include "radevent/errors.h"
#include "radevent/schema.h"
#include "radevent/standoff.h"
#include "radevent/synthetic.h"

namespace radevent {
namespace {

nlohmann::json DefaultJson() {
  return nlohmann::json::parse(DefaultSchemaConfig());
}

std::string RuleOf(const nlohmann::json &config) {
  try {
    LoadSchema(config.dump());
  } catch (const SchemaError &e) {
    return e.rule();
  }
  return "";
}

TEST_CASE("shipped schema counts") {
  const Schema &s = DefaultSchema();
  REQUIRE(s.event_types().size() == 3);
  CHECK(s.event_types()[0].name == "Indication");
  CHECK(s.event_types()[1].name == "Lesion");
  CHECK(s.event_types()[2].name == "Medical Problem");
  CHECK(s.anatomy().parents().size() == 16);
  CHECK(s.anatomy().ChildCount() == 71);
  for (const auto &p : s.anatomy().parents()) {
    CHECK(std::count(p.children.begin(), p.children.end(), "Undetermined") == 1);
  }
  CHECK(s.anatomy().HasChild("Urinary", "Kidney"));
  CHECK_FALSE(s.anatomy().HasChild("Respiratory", "Kidney"));
}

TEST_CASE("role definitions") {
  const auto *lesion = DefaultSchema().FindEventType("Lesion");
  REQUIRE(lesion);
  const auto *assertion = lesion->FindRole("Assertion");
  REQUIRE(assertion);
  CHECK(assertion->required);
  CHECK(assertion->vocabulary ==
        std::vector<std::string>{"present", "absent", "possible"});
  const auto *anatomy = lesion->FindRole("Anatomy");
  CHECK(anatomy->hierarchical);
  CHECK(anatomy->Slots() ==
        std::vector<std::string>{"Anatomy Parent", "Anatomy Child"});
  CHECK(anatomy->vocabulary.size() == 16);
  CHECK(lesion->FindRole("Size")->kind == RoleKind::kSpanOnly);
  CHECK(lesion->FindRole("Size")->Slots().empty());
  const auto *trend = lesion->FindRole("Size Trend");
  CHECK(trend->Allows("new"));
  CHECK_FALSE(trend->Allows("growing"));
}

TEST_CASE("every parent needs Undetermined") {
  for (std::size_t i = 0; i < 16; ++i) {
    auto config = DefaultJson();
    auto &children = config["anatomy"]["parents"][i]["children"];
    children.erase(std::find(children.begin(), children.end(), "Undetermined"));
    CHECK(RuleOf(config) == "undetermined_child");
  }
}

TEST_CASE("Respiratory without Undetermined names the rule") {
  auto config = DefaultJson();
  config["anatomy"]["parents"][0]["children"] =
      nlohmann::json::array({"Lung", "Pleura"});
  try {
    LoadSchema(config.dump());
    FAIL("loaded");
  } catch (const SchemaError &e) {
    CHECK(e.rule() == "undetermined_child");
    CHECK(std::string(e.what()).find("Respiratory") != std::string::npos);
  }
}

TEST_CASE("other schema rules") {
  {
    auto c = DefaultJson();
    c["event_types"].push_back(c["event_types"][1]);
    CHECK(RuleOf(c) == "unique_event_type");
  }
  {
    auto c = DefaultJson();
    c["event_types"][1]["roles"].push_back(c["event_types"][1]["roles"][0]);
    CHECK(RuleOf(c) == "unique_role");
  }
  {
    auto c = DefaultJson();
    c["event_types"][1]["roles"][1]["vocabulary"] = nlohmann::json::array();
    CHECK(RuleOf(c) == "value_vocabulary");
  }
  {
    auto c = DefaultJson();
    c["event_types"][1]["roles"][2]["vocabulary"] = {"x"};
    CHECK(RuleOf(c) == "span_only_vocabulary");
  }
  {
    auto c = DefaultJson();
    c["anatomy"]["parents"][1]["children"].push_back("Heart");
    CHECK(RuleOf(c) == "unique_child");
  }
  {
    auto c = DefaultJson();
    c["anatomy"]["parents"].push_back(c["anatomy"]["parents"][0]);
    CHECK(RuleOf(c) == "unique_parent");
  }
  CHECK_THROWS_AS(LoadSchema("{\"event_types\": ["), ParseError);
}

Document Parse(const std::string &text, const std::string &ann) {
  return ParseDocument(text, ann, "doc");
}

std::vector<std::string> Rules(const std::vector<Violation> &vs) {
  std::vector<std::string> out;
  for (const auto &v : vs) out.push_back(v.rule);
  return out;
}

TEST_CASE("conformant lesion") {
  Document d = Parse("Possible nodule in the liver.",
                     "T1\tLesion 9 15\tnodule\nT2\tAssertion 0 8\tPossible\n"
                     "T3\tAnatomy 23 28\tliver\n"
                     "E1\tLesion:T1 Assertion:T2 Anatomy:T3\n"
                     "A1\tAssertion T2 possible\nA2\tAnatomy Parent T3 Hepatobiliary\n"
                     "A3\tAnatomy Child T3 Liver\n");
  CHECK(ValidateDocument(DefaultSchema(), d).empty());
}

TEST_CASE("kidney is not respiratory") {
  Document d = Parse("Nodule in the kidney, present.",
                     "T1\tLesion 0 6\tNodule\nT2\tAssertion 22 29\tpresent\n"
                     "T3\tAnatomy 14 20\tkidney\n"
                     "E1\tLesion:T1 Assertion:T2 Anatomy:T3\n"
                     "A1\tAssertion T2 present\nA2\tAnatomy Parent T3 Respiratory\n"
                     "A3\tAnatomy Child T3 Kidney\n");
  const auto vs = ValidateDocument(DefaultSchema(), d);
  REQUIRE(vs.size() == 1);
  CHECK(vs[0].rule == rules::kChildNotUnderParent);
  CHECK(vs[0].annotation_id == "T3");
  CHECK(vs[0].doc_id == "doc");
}

TEST_CASE("required role absent") {
  Document d = Parse("A mass.", "T1\tLesion 2 6\tmass\nE1\tLesion:T1\n");
  CHECK(Rules(ValidateDocument(DefaultSchema(), d)) ==
        std::vector<std::string>{std::string(rules::kRequiredRoleAbsent)});
}

TEST_CASE("vocabulary and attribute placement") {
  const std::string text = "No mass, big.";
  const std::string base =
      "T1\tLesion 3 7\tmass\nT2\tAssertion 0 2\tNo\nT3\tSize 9 12\tbig\n"
      "E1\tLesion:T1 Assertion:T2 Size:T3\n";
  CHECK(Rules(ValidateDocument(DefaultSchema(),
                               Parse(text, base + "A1\tAssertion T2 maybe\n"))) ==
        std::vector<std::string>{std::string(rules::kSubtypeOutOfVocabulary)});
  CHECK(Rules(ValidateDocument(DefaultSchema(), Parse(text, base))) ==
        std::vector<std::string>{std::string(rules::kSubtypeAbsent)});
  CHECK(Rules(ValidateDocument(
            DefaultSchema(),
            Parse(text, base + "A1\tAssertion T2 absent\nA2\tSize T3 large\n"))) ==
        std::vector<std::string>{std::string(rules::kSpanOnlyHasSubtype)});
  // Event-level assertion satisfies the argument.
  CHECK(ValidateDocument(DefaultSchema(),
                         Parse(text, base + "A1\tAssertion E1 absent\n"))
            .empty());
}

TEST_CASE("unknown role and event type") {
  Document d = Parse("No mass.",
                     "T1\tLesion 3 7\tmass\nT2\tAssertion 0 2\tNo\nT3\tFoo 0 2\tNo\n"
                     "E1\tLesion:T1 Assertion:T2 Foo:T3\nA1\tAssertion T2 absent\n");
  CHECK(Rules(ValidateDocument(DefaultSchema(), d)) ==
        std::vector<std::string>{std::string(rules::kUnknownRole)});
  Document e = Parse("No mass.", "T1\tTumor 3 7\tmass\nE1\tTumor:T1\n");
  CHECK(Rules(ValidateDocument(DefaultSchema(), e)) ==
        std::vector<std::string>{std::string(rules::kUnknownEventType)});
}

TEST_CASE("violations do not depend on annotation order") {
  auto docs = GenerateSyntheticCorpus(DefaultSchema(), 6, 9);
  std::mt19937_64 rng(1);
  for (auto &d : docs) {
    // Break a few things so there is something to report.
    for (std::size_t i = 0; i < d.events.size(); i += 3) {
      d.events[i].attributes["Assertion"] = "perhaps";
    }
    for (std::size_t i = 1; i < d.events.size(); i += 4) {
      if (d.events[i].arguments.size() > 0) d.events[i].arguments.erase(d.events[i].arguments.begin());
    }
    const auto before = ValidateDocument(DefaultSchema(), d);
    CHECK_FALSE(before.empty());
    for (int round = 0; round < 5; ++round) {
      Document shuffled = d;
      std::shuffle(shuffled.entities.begin(), shuffled.entities.end(), rng);
      std::shuffle(shuffled.events.begin(), shuffled.events.end(), rng);
      for (auto &ev : shuffled.events) {
        std::shuffle(ev.arguments.begin(), ev.arguments.end(), rng);
      }
      CHECK(ValidateDocument(DefaultSchema(), shuffled) == before);
    }
  }
}

TEST_CASE("synthetic documents validate") {
  for (const auto &d : GenerateSyntheticCorpus(DefaultSchema(), 50, 2)) {
    CHECK(ValidateDocument(DefaultSchema(), d).empty());
  }
}

}  // namespace
}  // namespace radevent
