/*
 *   Copyright 2026 The assocgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#ifndef ASSOCGRAPH_CLI_HPP
#define ASSOCGRAPH_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace assocgraph::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,  // criterion failure, no witness, inconsistent documents
  kInputError = 2,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// warnings and summaries to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace assocgraph::cli

#endif  // ASSOCGRAPH_CLI_HPP
