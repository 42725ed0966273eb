// Copyright 2026 The Authors.
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

#ifndef LPM_CLI_CLI_HPP_
#define LPM_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace lpm::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadRegion = 3;
inline constexpr int kExitTooLarge = 4;

// Runs one command line (args excludes the program name). Results go to
// `out`, diagnostics to `err` as "lpm: <message>".
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lpm::cli

#endif  // LPM_CLI_CLI_HPP_
