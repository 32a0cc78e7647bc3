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

#ifndef RADEVENT_CLI_H_
#define RADEVENT_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace radevent {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,  // schema violations or unpairable corpora
  kExitUsage = 2,
  kExitIo = 3,  // unreadable files, parse or alignment errors
};

// Runs one subcommand. argv[0] is the program name. Data goes to `out`,
// diagnostics to `err`.
int RunCli(const std::vector<std::string> &argv, std::ostream &out,
           std::ostream &err);

}  // namespace radevent

#endif  // RADEVENT_CLI_H_
