// Copyright 2026 The Veilbreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VEILBREAK_TOOLS_CLI_H_
#define VEILBREAK_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace veilbreak::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDataError = 2,
  kInternal = 3,
};

// Runs the command line `args` (args[0] is the program name). Normal output
// goes to `out`, diagnostics to `err`. Text-mode `correct` reads `in`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace veilbreak::cli

#endif  // VEILBREAK_TOOLS_CLI_H_
