// Copyright 2026 The SMRA Simulator Authors
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

#ifndef SMRA_CLI_H_
#define SMRA_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace smra {

// Process exit statuses.
enum ExitStatus : int {
  kExitOk = 0,
  kExitConfig = 2,
  kExitOracleBudget = 3,
  kExitInvariant = 4,
};

// Runs the `smra` command line. Subcommands: run, oracle, analyze, replay.
// The summary or report JSON goes to `out`, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace smra

#endif  // SMRA_CLI_H_
