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

#include "radevent/cli.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "radevent/agreement.h"
#include "radevent/corpus_io.h"
#include "radevent/corpus_stats.h"
#include "radevent/errors.h"
#include "radevent/event_graph.h"
#include "radevent/report.h"
#include "radevent/schema.h"
#include "radevent/scoring.h"
#include "radevent/significance.h"
#include "radevent/synthetic.h"
#include "radevent/version.h"

namespace radevent {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Context {
  std::ostream &out;
  std::ostream &err;
  std::string schema_path;

  Schema LoadSchemaOrDefault() const {
    if (schema_path.empty()) return DefaultSchema();
    return LoadSchema(ReadFile(schema_path));
  }
};

MatchMode ModeFrom(const std::string &s) {
  auto mode = ParseMatchMode(s);
  if (!mode) throw ParameterError("--mode must be overlap or strict");
  return *mode;
}

void PrintViolations(const std::vector<Violation> &violations, std::ostream &os) {
  for (const auto &v : violations) os << FormatViolation(v) << '\n';
}

std::string Fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

int RunCli(const std::vector<std::string> &argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Event annotation validation, scoring and corpus statistics"};
  app.name(argv.empty() ? "radevent" : fs::path(argv[0]).filename().string());
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Context ctx{out, err, {}};

  auto add_schema = [&](CLI::App *cmd) {
    cmd->add_option("--schema", ctx.schema_path,
                    "Schema config JSON (default: the built-in schema)")
        ->check(CLI::ExistingFile);
  };

  // validate
  std::string validate_dir;
  bool validate_json = false;
  auto *validate = app.add_subcommand("validate", "Check a corpus against the schema");
  validate->add_option("dir", validate_dir, "Corpus directory")->required();
  validate->add_flag("--json", validate_json, "Emit violations as JSON");
  add_schema(validate);

  // score / agree share report flags
  std::string ref_dir, pred_dir, mode_name = "overlap", link_name = "equivalent";
  bool as_json = false, as_table = false, with_errors = false;
  auto add_report_flags = [&](CLI::App *cmd) {
    cmd->add_option("--mode", mode_name, "overlap or strict")
        ->check(CLI::IsMember({"overlap", "strict"}));
    auto *j = cmd->add_flag("--json", as_json, "JSON report");
    auto *t = cmd->add_flag("--table", as_table, "Plain-text table (default)");
    j->excludes(t);
    cmd->add_flag("--errors", with_errors, "Include the span error breakdown");
    add_schema(cmd);
  };
  auto *score = app.add_subcommand("score", "Score predictions against a reference corpus");
  score->add_option("--ref", ref_dir, "Reference corpus directory")->required();
  score->add_option("--pred", pred_dir, "Prediction corpus directory")->required();
  score->add_option("--trigger-link", link_name,
                    "How argument scoring connects triggers: equivalent or aligned")
      ->check(CLI::IsMember({"equivalent", "aligned"}));
  add_report_flags(score);

  auto *agree = app.add_subcommand("agree", "Inter-annotator agreement (pairwise F1)");
  agree->add_option("--a", ref_dir, "Annotator A directory")->required();
  agree->add_option("--b", pred_dir, "Annotator B directory")->required();
  add_report_flags(agree);

  // stats
  std::string stats_dir, group_name = "all";
  bool stats_json = false;
  auto *stats = app.add_subcommand("stats", "Corpus distribution statistics");
  stats->add_option("dir", stats_dir, "Corpus directory")->required();
  stats->add_option("--group", group_name, "all, modality or split");
  stats->add_flag("--json", stats_json, "JSON output");
  add_schema(stats);

  // sigtest
  std::string sig_ref, sig_a, sig_b, metric_name = "overall";
  std::size_t replicates = 10000;
  std::uint64_t seed = 42;
  unsigned workers = 1;
  bool sig_json = false, exhaustive = false;
  auto *sigtest = app.add_subcommand("sigtest", "Paired bootstrap test of F1(A) - F1(B)");
  sigtest->add_option("--ref", sig_ref, "Reference corpus directory")->required();
  sigtest->add_option("--a", sig_a, "System A predictions")->required();
  sigtest->add_option("--b", sig_b, "System B predictions")->required();
  sigtest->add_option("--metric", metric_name, "overall or <event type>/<role>");
  sigtest->add_option("--replicates", replicates, "Bootstrap replicates");
  sigtest->add_option("--seed", seed, "Random seed");
  sigtest->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  sigtest->add_option("--mode", mode_name, "overlap or strict")
      ->check(CLI::IsMember({"overlap", "strict"}));
  sigtest->add_flag("--exhaustive", exhaustive,
                    "Enumerate all n^n resamples (small corpora only)");
  sigtest->add_flag("--json", sig_json, "JSON output");
  add_schema(sigtest);

  // convert
  std::string from_format, to_format, convert_in, convert_out;
  auto *convert = app.add_subcommand("convert", "Convert between standoff directories and JSON");
  convert->add_option("--from", from_format, "brat or json")
      ->required()
      ->check(CLI::IsMember({"brat", "json"}));
  convert->add_option("--to", to_format, "brat or json")
      ->required()
      ->check(CLI::IsMember({"brat", "json"}));
  convert->add_option("in", convert_in, "Input directory (brat) or file (json)")->required();
  convert->add_option("out", convert_out, "Output directory (brat) or file (json)")->required();
  add_schema(convert);

  // synth
  std::size_t synth_n = 0;
  std::uint64_t synth_seed = 1;
  std::string synth_dir;
  auto *synth = app.add_subcommand("synth", "Write a synthetic corpus");
  synth->add_option("--n", synth_n, "Number of documents")->required();
  synth->add_option("--seed", synth_seed, "Random seed");
  synth->add_option("outdir", synth_dir, "Output directory")->required();
  add_schema(synth);

  // split
  std::string split_dir, ratios_text = "0.7,0.1,0.2";
  std::uint64_t split_seed = 42;
  bool split_write = false;
  auto *split = app.add_subcommand("split", "Assign train/validation/test splits");
  split->add_option("dir", split_dir, "Corpus directory")->required();
  split->add_option("--ratios", ratios_text, "train,validation,test ratios");
  split->add_option("--seed", split_seed, "Random seed");
  split->add_flag("--write", split_write, "Store the split tags in the corpus manifest");

  try {
    std::vector<std::string> args(argv.rbegin(), argv.rend() - 1);
    app.parse(args);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*validate) {
      const Schema schema = ctx.LoadSchemaOrDefault();
      const auto docs = ReadCorpusDir(validate_dir);
      std::vector<Violation> all;
      for (const auto &d : docs) {
        auto v = ValidateDocument(schema, d);
        all.insert(all.end(), v.begin(), v.end());
      }
      if (validate_json) {
        ordered_json j;
        j["tool_version"] = kToolVersion;
        j["documents"] = docs.size();
        ordered_json list = ordered_json::array();
        for (const auto &v : all) {
          list.push_back({{"doc_id", v.doc_id},
                          {"annotation_id", v.annotation_id},
                          {"rule", v.rule},
                          {"message", v.message}});
        }
        j["violations"] = std::move(list);
        out << j.dump(2) << '\n';
      } else {
        PrintViolations(all, out);
      }
      err << docs.size() << " document(s), " << all.size() << " violation(s)\n";
      return all.empty() ? kExitOk : kExitViolations;
    }

    if (*score || *agree) {
      const Schema schema = ctx.LoadSchemaOrDefault();
      const auto refs = ReadCorpusDir(ref_dir);
      const auto preds = ReadCorpusDir(pred_dir);
      ReportFormat format;
      format.include_errors = with_errors;
      ScoreReport report;
      if (*score) {
        ScoreOptions options;
        options.mode = ModeFrom(mode_name);
        options.trigger_link = link_name == "aligned" ? TriggerLink::kAligned
                                                      : TriggerLink::kEquivalent;
        report = ScoreCorpus(refs, preds, schema, options);
        format.header = {{"reference", ref_dir}, {"prediction", pred_dir}};
        if (options.trigger_link == TriggerLink::kAligned) {
          format.header.emplace_back("trigger_link", "aligned");
        }
      } else {
        report = PairwiseAgreement(refs, preds, schema, ModeFrom(mode_name));
        format.header = {{"report", "inter-annotator agreement (F1)"},
                         {"annotator_a", ref_dir + " (scored as reference)"},
                         {"annotator_b", pred_dir + " (scored as prediction)"}};
      }
      if (as_json) {
        out << ScoreReportToJson(report, format).dump(2) << '\n';
      } else {
        out << ScoreReportToTable(report, format);
      }
      return kExitOk;
    }

    if (*stats) {
      const Schema schema = ctx.LoadSchemaOrDefault();
      const Grouping grouping = ParseGrouping(group_name);
      const auto docs = ReadCorpusDir(stats_dir);
      RequireValid(schema, docs);
      const StatsReport report = CorpusSummary(docs, schema, grouping);
      if (stats_json) {
        out << StatsReportToJson(report).dump(2) << '\n';
      } else {
        out << StatsReportToTable(report);
      }
      return kExitOk;
    }

    if (*sigtest) {
      const Schema schema = ctx.LoadSchemaOrDefault();
      const auto refs = ReadCorpusDir(sig_ref);
      const auto a = ReadCorpusDir(sig_a);
      const auto b = ReadCorpusDir(sig_b);
      BootstrapOptions options;
      options.mode = ModeFrom(mode_name);
      options.replicates = replicates;
      options.seed = seed;
      options.workers = workers;
      options.exhaustive = exhaustive;
      const auto metric = MetricSelector::Parse(metric_name, schema);
      const BootstrapResult r = PairedBootstrap(refs, a, b, schema, metric, options);
      const std::string verdict =
          std::string(r.significant() ? "significant" : "not significant") +
          " (p=" + Fixed3(r.p_value) + ")";
      if (sig_json) {
        ordered_json j;
        j["tool_version"] = kToolVersion;
        j["metric"] = r.metric;
        j["mode"] = ToString(options.mode);
        j["observed_delta"] = r.observed_delta;
        j["p_value"] = r.p_value;
        j["replicates"] = r.replicates;
        j["seed"] = r.seed;
        j["exhaustive"] = r.exhaustive;
        j["alpha"] = 0.05;
        j["verdict"] = verdict;
        out << j.dump(2) << '\n';
      } else {
        out << "metric " << r.metric << ": F1(A) - F1(B) = "
            << (r.observed_delta >= 0 ? "+" : "") << Fixed3(r.observed_delta)
            << ", " << r.replicates << " replicates, seed " << r.seed << '\n'
            << verdict << '\n';
      }
      return kExitOk;
    }

    if (*convert) {
      const Schema schema = ctx.LoadSchemaOrDefault();
      const auto docs = from_format == "brat" ? ReadCorpusDir(convert_in)
                                              : ReadJsonCorpus(convert_in, schema);
      if (to_format == "brat") {
        WriteCorpusDir(convert_out, docs);
      } else {
        WriteJsonCorpus(convert_out, docs);
      }
      err << "converted " << docs.size() << " document(s)\n";
      return kExitOk;
    }

    if (*synth) {
      const Schema schema = ctx.LoadSchemaOrDefault();
      const auto docs = GenerateSyntheticCorpus(schema, synth_n, synth_seed);
      WriteCorpusDir(synth_dir, docs);
      err << "wrote " << docs.size() << " synthetic document(s) to " << synth_dir << '\n';
      return kExitOk;
    }

    if (*split) {
      SplitRatios ratios;
      {
        std::vector<double> values;
        std::stringstream ss(ratios_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
          } catch (const std::exception &) {
            throw ParameterError("--ratios must be three comma-separated numbers");
          }
        }
        if (values.size() != 3) {
          throw ParameterError("--ratios must be three comma-separated numbers");
        }
        ratios = {values[0], values[1], values[2]};
      }
      auto docs = ReadCorpusDir(split_dir);
      std::vector<std::string> ids;
      for (const auto &d : docs) ids.push_back(d.id);
      const SplitManifest manifest = MakeSplits(ids, ratios, split_seed);
      out << SplitManifestToJson(manifest).dump(2) << '\n';
      if (split_write) {
        ordered_json m;
        const fs::path path = fs::path(split_dir) / kManifestFile;
        m["tool_version"] = kToolVersion;
        m["documents"] = ordered_json::object();
        for (auto &d : docs) {
          d.metadata.split = manifest.assignment.at(d.id);
          m["documents"][d.id] = MetadataToJson(d.metadata);
        }
        WriteFile(path, m.dump(2) + "\n");
      }
      return kExitOk;
    }
  } catch (const ValidationError &e) {
    PrintViolations(e.violations(), err);
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitViolations;
  } catch (const PairingError &e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitViolations;
  } catch (const ParameterError &e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error &e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}

}  // namespace radevent
