// Copyright 2026 The qact Authors
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


#pragma once

#include <string>
#include <vector>

namespace qact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitInputError = 2;

struct CommandResult {
  int exit_code = kExitOk;
  /// A single JSON document.
  std::string stdout_text;
  /// Human-readable diagnostics.
  std::string stderr_text;
};

/// Runs one invocation; `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace qact::cli
