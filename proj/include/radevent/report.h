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

#ifndef RADEVENT_REPORT_H_
#define RADEVENT_REPORT_H_

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "radevent/scoring.h"

namespace radevent {

struct ReportFormat {
  bool include_errors = false;
  // Extra "key: value" header lines, e.g. the annotator roles for IAA.
  std::vector<std::pair<std::string, std::string>> header;
};

nlohmann::ordered_json MetricsToJson(const Metrics &m);
nlohmann::ordered_json ErrorsToJson(const ErrorBreakdown &e);

// JSON with a fixed key order; carries tool_version.
nlohmann::ordered_json ScoreReportToJson(const ScoreReport &report,
                                         const ReportFormat &format = {});

// Aligned table: one block per event type with the trigger row first and the
// argument rows below it, then the micro-averaged overall row. Values marked
// '*' are vacuous (no annotations on the relevant side).
std::string ScoreReportToTable(const ScoreReport &report,
                               const ReportFormat &format = {});

std::string FormatViolation(const Violation &v);

}  // namespace radevent

#endif  // RADEVENT_REPORT_H_
