// Copyright 2026 The SCCG Toolkit Authors
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

#ifndef SCCG_TOOLS_CLI_H_
#define SCCG_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace sccg::cli {

// Exit codes beyond the ErrorCode values.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInternal = 6;

// Entry point for `sccg generate|analyze|compare ...`. `args` excludes the
// program name. Results go to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace sccg::cli

#endif  // SCCG_TOOLS_CLI_H_
