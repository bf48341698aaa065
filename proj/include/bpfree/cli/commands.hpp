// Copyright 2026 The bpfree Authors
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


#ifndef BPFREE_CLI_COMMANDS_HPP
#define BPFREE_CLI_COMMANDS_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "bpfree/cli/manifest.hpp"

namespace bpfree::cli {

struct CommandResult {
    std::vector<OutputFile> outputs;
    std::vector<FileDigest> inputs;
    /// Human-readable summary lines for stdout.
    std::vector<std::string> messages;
};

/// Commands that produce files and manifests.
const std::vector<std::string>& command_names();

/// Applies defaults, normalizes value types and validates. Keys use
/// underscores in place of the dashes of the flag names. Idempotent: a
/// resolved config resolves to itself. Throws std::invalid_argument on
/// missing, malformed or unknown keys.
nlohmann::json resolve_config(const std::string& command, const nlohmann::json& raw);

/// Runs a resolved config. Reads input files but writes nothing.
CommandResult execute(const std::string& command, const nlohmann::json& config);

/// Exit code 0 on success, 1 on a failed check, 2 on a usage or config
/// error and 3 on a numerical failure.
int cli_main(int argc, char** argv);

} // namespace bpfree::cli

#endif // BPFREE_CLI_COMMANDS_HPP
