// Copyright 2026 The disagree-kit Authors
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


// The disagree-kit command line, callable in-process for tests.

#ifndef DISAGREE_TOOLS_CLI_H_
#define DISAGREE_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace disagree::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsage = 1,
  kDomain = 2,
  kResource = 3,
  kConvergence = 4,
};

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace disagree::cli

#endif  // DISAGREE_TOOLS_CLI_H_
