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

#include "radevent/report.h"

#include <cstdio>
#include <sstream>

#include "radevent/version.h"

namespace radevent {

using ordered_json = nlohmann::ordered_json;

ordered_json MetricsToJson(const Metrics &m) {
  ordered_json j;
  j["tp"] = m.counts.tp;
  j["fp"] = m.counts.fp;
  j["fn"] = m.counts.fn;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  j["precision_vacuous"] = m.precision_vacuous;
  j["recall_vacuous"] = m.recall_vacuous;
  return j;
}

ordered_json ErrorsToJson(const ErrorBreakdown &e) {
  ordered_json j;
  j["exact"] = e.exact;
  j["pred_shorter"] = e.pred_shorter;
  j["pred_longer"] = e.pred_longer;
  j["pred_other_overlap"] = e.pred_other_overlap;
  j["spurious"] = e.spurious;
  j["missing"] = e.missing;
  return j;
}

ordered_json ScoreReportToJson(const ScoreReport &report,
                               const ReportFormat &format) {
  ordered_json j;
  j["tool_version"] = kToolVersion;
  for (const auto &[key, value] : format.header) j[key] = value;
  j["mode"] = ToString(report.mode);
  j["averaging"] = "micro";
  j["doc_count"] = report.doc_count;
  ordered_json rows = ordered_json::array();
  for (const auto &row : report.rows) {
    ordered_json r;
    r["event_type"] = row.key.event_type;
    r["role"] = row.key.role;
    r.update(MetricsToJson(row.metrics));
    if (format.include_errors) r["errors"] = ErrorsToJson(row.errors);
    rows.push_back(std::move(r));
  }
  j["categories"] = std::move(rows);
  j["overall"] = MetricsToJson(report.overall);
  if (format.include_errors) j["overall"]["errors"] = ErrorsToJson(report.overall_errors);
  return j;
}

namespace {

std::string Ratio(double value, bool vacuous) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%.3f%s", value, vacuous ? "*" : " ");
  return buf;
}

std::string Pad(const std::string &s, std::size_t width) {
  return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

std::string Right(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string ScoreReportToTable(const ScoreReport &report,
                               const ReportFormat &format) {
  std::size_t event_w = 7, role_w = 9;
  for (const auto &row : report.rows) {
    event_w = std::max(event_w, row.key.event_type.size() + 2);
    role_w = std::max(role_w, row.key.role.size() + 2);
  }

  std::ostringstream out;
  for (const auto &[key, value] : format.header) out << key << ": " << value << '\n';
  out << "mode: " << ToString(report.mode) << "  documents: " << report.doc_count
      << "  overall: micro-average\n\n";

  auto metric_cells = [&](const Metrics &m) {
    std::string s = Right(std::to_string(m.counts.tp), 7) +
                    Right(std::to_string(m.counts.fp), 7) +
                    Right(std::to_string(m.counts.fn), 7) + "  " +
                    Ratio(m.precision, m.precision_vacuous) + " " +
                    Ratio(m.recall, m.recall_vacuous) + " " +
                    Ratio(m.f1, m.vacuous());
    return s;
  };
  out << Pad("Event", event_w) << Pad("Argument", role_w) << Right("TP", 7)
      << Right("FP", 7) << Right("FN", 7) << "  " << Pad("P", 7) << Pad("R", 7)
      << "F1\n";
  const std::string rule(event_w + role_w + 21 + 2 + 20, '-');
  out << rule << '\n';
  std::string current;
  for (const auto &row : report.rows) {
    const bool first = row.key.event_type != current;
    if (first && !current.empty()) out << '\n';
    current = row.key.event_type;
    out << Pad(first ? row.key.event_type : "", event_w)
        << Pad(row.key.is_trigger() ? "Trigger" : row.key.role, role_w)
        << metric_cells(row.metrics) << '\n';
  }
  out << rule << '\n';
  out << Pad("Overall", event_w + role_w) << metric_cells(report.overall) << '\n';

  if (format.include_errors) {
    out << "\nSpan errors among matched pairs\n";
    out << Pad("Event", event_w) << Pad("Argument", role_w) << Right("exact", 8)
        << Right("shorter", 9) << Right("longer", 8) << Right("other", 7)
        << Right("spurious", 10) << Right("missing", 9) << '\n';
    auto error_cells = [](const ErrorBreakdown &e) {
      return Right(std::to_string(e.exact), 8) +
             Right(std::to_string(e.pred_shorter), 9) +
             Right(std::to_string(e.pred_longer), 8) +
             Right(std::to_string(e.pred_other_overlap), 7) +
             Right(std::to_string(e.spurious), 10) +
             Right(std::to_string(e.missing), 9);
    };
    current.clear();
    for (const auto &row : report.rows) {
      const bool first = row.key.event_type != current;
      current = row.key.event_type;
      out << Pad(first ? row.key.event_type : "", event_w)
          << Pad(row.key.is_trigger() ? "Trigger" : row.key.role, role_w)
          << error_cells(row.errors) << '\n';
    }
    out << Pad("Overall", event_w + role_w) << error_cells(report.overall_errors)
        << '\n';
  }
  out << "\n* vacuous: no annotations on the relevant side\n";
  return out.str();
}

std::string FormatViolation(const Violation &v) {
  return v.doc_id + "\t" + v.annotation_id + "\t" + v.rule + "\t" + v.message;
}

}  // namespace radevent
