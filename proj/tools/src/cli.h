// Copyright 2026 The Clutterlab Authors
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


#ifndef CLUTTERLAB_TOOLS_CLI_H_
#define CLUTTERLAB_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace clutterlab::cli {

// Exit codes.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kResourceExhausted = 3;
inline constexpr int kInternalError = 4;

// Runs one invocation. `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err);

}  // namespace clutterlab::cli

#endif  // CLUTTERLAB_TOOLS_CLI_H_
