// Copyright 2026 The qpa-certify Authors
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

#ifndef QPA_CLI_HPP
#define QPA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace qpa {

enum ExitCode : int {
    kExitOk = 0,
    kExitBadInput = 1,
    kExitNotConverged = 2,
    kExitCheckFailed = 3,
};

/// Entry point of the `qpa` tool. `args` excludes the program name.
/// Regular output goes to `out` unless --out redirects it.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qpa

#endif  // QPA_CLI_HPP
