// Copyright 2026 The smoothgap Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace smoothgap {

enum ExitCode : int {
    kExitOk = 0,
    /// A requested predicate is mathematically false.
    kExitNegative = 1,
    kExitUsage = 2,
    /// Node budget or memory/range capacity ran out.
    kExitCapacity = 3,
};

/// Runs the smoothgap command line. `args[0]` is the program name.
/// Reports go to `out`, diagnostics to `err`; `in` feeds `verify -`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace smoothgap
