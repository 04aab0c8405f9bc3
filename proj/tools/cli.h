// Copyright 2026 The fourcycle Authors
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

#ifndef FOURCYCLE_TOOLS_CLI_H_
#define FOURCYCLE_TOOLS_CLI_H_

#include <ostream>

namespace fourcycle::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitOverflow = 4;

// Entry point shared by the binary and the tests. argv[0] is the program
// name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fourcycle::cli

#endif  // FOURCYCLE_TOOLS_CLI_H_
