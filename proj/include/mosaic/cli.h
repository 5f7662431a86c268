// Copyright 2026 The Mosaic Authors.
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

#ifndef MOSAIC_CLI_H_
#define MOSAIC_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace mosaic {

enum ExitStatus {
  kExitOk = 0,
  kExitUsage = 1,
  kExitConfig = 2,
  kExitRuntime = 3,
};

struct CliStreams {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
  // Without --input, standard input is read only when it is redirected.
  bool stdin_is_terminal = false;
};

// Batch entry point: `args` excludes the program name.
int RunCli(const std::vector<std::string> &args, CliStreams streams);

}  // namespace mosaic

#endif  // MOSAIC_CLI_H_
