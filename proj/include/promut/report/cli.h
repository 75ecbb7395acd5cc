// Copyright 2026 The Promut Authors
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

#ifndef PROMUT_REPORT_CLI_H_
#define PROMUT_REPORT_CLI_H_

#include <iosfwd>

namespace promut {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBaselineRejected = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBelowMinScore = 3;

// The `promut` command line. `argv[0]` is the program name.
int CliMain(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace promut

#endif  // PROMUT_REPORT_CLI_H_
