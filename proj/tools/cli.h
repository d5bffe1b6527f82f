// Copyright 2026 Google LLC
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

#ifndef STAR_TOOLS_CLI_H
#define STAR_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace star {

inline constexpr int EXIT_CONFIG_ERROR = 2;
inline constexpr int EXIT_SCHEDULE_INVALID = 3;

/// Runs the command line (without the program name) and returns the process exit code.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace star

#endif
