// Copyright 2026 The patternlab Authors
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

#ifndef PATTERNLAB_TOOLS_CLI_H_
#define PATTERNLAB_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace patternlab::tools {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitResource = 3,
  kExitVerification = 4,
};

// Runs the command line `args` (args[0] is the program name). JSON results
// go to `out`, error records to `err`. Honors PATTERNLAB_SEED.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace patternlab::tools

#endif  // PATTERNLAB_TOOLS_CLI_H_
