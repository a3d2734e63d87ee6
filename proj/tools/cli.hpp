// Copyright 2026 The chainskip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <iosfwd>

namespace chainskip::cli {

/// Process exit codes of the chainskip tool.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,  // unexpected internal error
  kConfigError = 2,
  kIoError = 3,
  kEmbeddingFailure = 4,
};

/// Runs the command line `argv` and returns its exit code. Reports and CSV
/// tables go to their --out file, or to `out` when none is given;
/// diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chainskip::cli
