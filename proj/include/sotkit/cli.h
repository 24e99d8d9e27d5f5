// include/sotkit/cli.h

// Copyright 2026  The sotkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SOTKIT_CLI_H_
#define SOTKIT_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sotkit {

inline constexpr const char *kToolkitVersion = "1.0.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIo = 2,
};

/// Entry point of the sotkit binary. args[0] is the program name. Data goes
/// to out (or to files), diagnostics to err.
int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace sotkit

#endif  // SOTKIT_CLI_H_
