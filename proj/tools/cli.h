// Copyright 2026 The Satgame Authors
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

#ifndef SATGAME_TOOLS_CLI_H_
#define SATGAME_TOOLS_CLI_H_

#include <iosfwd>

namespace satgame::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;  // a verification check failed
inline constexpr int kExitUsage = 2;  // bad flags, files or configuration

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace satgame::cli

#endif  // SATGAME_TOOLS_CLI_H_
