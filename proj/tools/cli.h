// Copyright 2026 The eaqec Authors
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

#ifndef EAQEC_TOOLS_CLI_H
#define EAQEC_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <stop_token>
#include <string>
#include <vector>

namespace eaqec::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kConstraint = 2,
    kInternalMismatch = 3,
    kInputMismatch = 4,
    kInfeasible = 5,
    kCancelled = 130,
};

enum class OutputFormat { json, csv, text };

struct CliConfig {
    std::uint64_t budget = std::uint64_t{1} << 22;
    std::uint64_t seed = 1;
    OutputFormat output = OutputFormat::json;
    bool emit_matrices = false;
};

/// Runs the command line tool. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, std::stop_token stop = {});

}  // namespace eaqec::cli

#endif
