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

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "radevent/cli.h"
#include "radevent/corpus_io.h"

namespace radevent {
namespace {

namespace fs = std::filesystem;
const std::string kFixtures = RADEVENT_FIXTURE_DIR;

struct Result {
  int code;
  std::string out, err;
};

Result Run(std::vector<std::string> args) {
  args.insert(args.begin(), "radevent");
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path TempDir(const std::string &name) {
  const fs::path p = fs::temp_directory_path() / ("radevent_test_" + name);
  fs::remove_all(p);
  return p;
}

TEST_CASE("self score") {
  const std::string ref = kFixtures + "/mini3/ref";
  const Result r = Run({"score", "--ref", ref, "--pred", ref});
  CHECK(r.code == 0);
  CHECK(r.out.find("1.000") != std::string::npos);
}

TEST_CASE("validate reports a bad assertion") {
  const Result r = Run({"validate", kFixtures + "/bad_assertion"});
  CHECK(r.code == 1);
  CHECK(r.out.find("subtype_out_of_vocabulary") != std::string::npos);
  CHECK(Run({"validate", kFixtures + "/mini3/ref"}).code == 0);
}

TEST_CASE("usage and io errors") {
  CHECK(Run({"score", "--ref", kFixtures + "/mini3/ref"}).code == 2);
  CHECK(Run({"frobnicate"}).code == 2);
  CHECK(Run({"score", "--ref", "/nonexistent/x", "--pred", "/nonexistent/y"}).code == 3);
  CHECK(Run({"sigtest", "--ref", kFixtures + "/mini3/ref", "--a",
             kFixtures + "/mini3/ref", "--b", kFixtures + "/mini3/ref",
             "--replicates", "0"})
            .code == 2);
}

TEST_CASE("unpaired corpora exit 1") {
  const fs::path dir = TempDir("pairing");
  fs::create_directories(dir);
  fs::copy_file(kFixtures + "/mini3/ref/d1.txt", dir / "d1.txt");
  fs::copy_file(kFixtures + "/mini3/ref/d1.ann", dir / "d1.ann");
  CHECK(Run({"score", "--ref", kFixtures + "/mini3/ref", "--pred", dir.string()})
            .code == 1);
}

TEST_CASE("sigtest on identical systems") {
  const std::string ref = kFixtures + "/mini3/ref";
  const std::string pred = kFixtures + "/mini3/pred";
  const Result r = Run({"sigtest", "--ref", ref, "--a", pred, "--b", pred});
  CHECK(r.code == 0);
  CHECK(r.out.find("not significant (p=1.000)") != std::string::npos);
  const Result j = Run({"sigtest", "--ref", ref, "--a", ref, "--b", pred,
                        "--replicates", "200", "--json"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed.contains("observed_delta"));
  CHECK(parsed.contains("p_value"));
  CHECK(parsed["replicates"] == 200);
  CHECK(parsed["seed"] == 42);
  CHECK(parsed.contains("tool_version"));
}

TEST_CASE("outputs are byte identical across runs") {
  const std::string ref = kFixtures + "/mini3/ref";
  const std::string pred = kFixtures + "/mini3/pred";
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"score", "--ref", ref, "--pred", pred, "--json", "--errors"},
           {"agree", "--a", ref, "--b", pred},
           {"stats", ref, "--json"},
           {"split", ref, "--seed", "3"},
           {"sigtest", "--ref", ref, "--a", ref, "--b", pred, "--replicates", "300"}}) {
    const Result a = Run(args), b = Run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("synth, convert and back") {
  const fs::path synth = TempDir("synth");
  CHECK(Run({"synth", "--n", "4", "--seed", "3", synth.string()}).code == 0);
  CHECK(Run({"validate", synth.string()}).code == 0);
  const fs::path json = TempDir("json.json");
  CHECK(Run({"convert", "--from", "brat", "--to", "json", synth.string(),
             json.string()})
            .code == 0);
  const fs::path back = TempDir("back");
  CHECK(Run({"convert", "--from", "json", "--to", "brat", json.string(),
             back.string()})
            .code == 0);
  const Result s = Run({"score", "--ref", synth.string(), "--pred", back.string(),
                        "--json"});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["overall"]["f1"] == 1.0);
  const Result stats = Run({"stats", synth.string(), "--group", "modality"});
  CHECK(stats.code == 0);
  CHECK(stats.out.find("CT") != std::string::npos);
  CHECK(Run({"stats", synth.string(), "--group", "site"}).code == 2);
}

TEST_CASE("split writes the manifest") {
  const fs::path synth = TempDir("split");
  CHECK(Run({"synth", "--n", "10", "--seed", "1", synth.string()}).code == 0);
  const Result r = Run({"split", synth.string(), "--ratios", "0.7,0.1,0.2",
                        "--seed", "4", "--write"});
  CHECK(r.code == 0);
  const auto docs = ReadCorpusDir(synth);
  int train = 0;
  for (const auto &d : docs) train += d.metadata.split == Split::kTrain;
  CHECK(train == 7);
}

}  // namespace
}  // namespace radevent
