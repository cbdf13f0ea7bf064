/*
 * This source file is part of the skin project.
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

#ifndef SKIN_TOOLS_CLI_HPP
#define SKIN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace skin::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNumeric = 2 };

/// Runs the tool. args excludes the program name. Tables go to out (or to
/// --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace skin::cli

#endif  // SKIN_TOOLS_CLI_HPP
