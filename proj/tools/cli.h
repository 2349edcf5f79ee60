// Copyright 2026 The holescan Authors
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

namespace holescan::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,  // I/O, parse, or usage error
  kNotEdgeManifold = 2,
  kInternalError = 3,  // an invariant of the algorithms failed
};

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace holescan::cli
