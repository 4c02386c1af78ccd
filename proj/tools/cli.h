// Copyright 2026 The HTS Geometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Kept in a library so tests can drive it in
// process.

#ifndef HTS_TOOLS_CLI_H_
#define HTS_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hts::tools {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Runs one invocation; args excludes the program name. Usage text and
// diagnostics go to err, reports printed to the console go to out.
int CliMain(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// argv adapter writing to the standard streams.
int CliMain(int argc, char** argv);

}  // namespace hts::tools

#endif  // HTS_TOOLS_CLI_H_
