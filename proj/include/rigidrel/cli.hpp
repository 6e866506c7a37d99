// Copyright 2026 The rigidrel Authors
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

#ifndef RIGIDREL_CLI_HPP
#define RIGIDREL_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace rigidrel::cli {

// Exit codes shared by every subcommand.
inline constexpr int kPositive = 0;
inline constexpr int kNegative = 1;
inline constexpr int kError = 2;

// Runs the command line `args` (program name excluded). Verdicts and
// reports go to `out`, diagnostics to `err`. Nothing is written to `out`
// when the result is kError.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace rigidrel::cli

#endif  // RIGIDREL_CLI_HPP
