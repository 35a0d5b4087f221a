// Copyright 2026 The incoref Authors.
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

#ifndef INCOREF_CLI_H_
#define INCOREF_CLI_H_

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace incoref {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Runs the command line `args` (args[0] is the program name). Corpus input
// defaults to `in`; primary output goes to `out` unless -o is given;
// diagnostics go to `err`. Nothing is written to `out` or to any output file
// unless the command succeeds.
int RunCli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
           std::ostream &err);

}  // namespace incoref

#endif  // INCOREF_CLI_H_
