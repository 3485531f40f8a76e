// Copyright 2026 The Unleft Authors.
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

#ifndef UNLEFT_CLI_H_
#define UNLEFT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace unleft {

// Exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitLeftRecursionOrParseFailure = 1,
  kExitBadInput = 2,
  kExitRewriteError = 3,
  kExitDepthExceeded = 4,
};

constexpr int kDefaultPort = 7465;

// `args` excludes the program name. `in` supplies parse input when neither
// --input nor --input-file is given.
int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err);

}  // namespace unleft

#endif  // UNLEFT_CLI_H_
