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


#ifndef BPFREE_CLI_MANIFEST_HPP
#define BPFREE_CLI_MANIFEST_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace bpfree::cli {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Lower-case hex SHA-256 of `bytes`.
std::string sha256_hex(std::string_view bytes);
std::string read_file(const std::string& path);

/// A produced file held in memory until every output of a command is ready.
struct OutputFile {
    std::string role;
    std::string path;
    std::string content;
};

struct FileDigest {
    std::string role;
    std::string path;
    std::string sha256;
    std::size_t bytes = 0;
};

FileDigest digest_of(const OutputFile& file);

/// Writes every file through a temporary sibling and renames it into place.
/// On failure nothing new is left behind.
void write_outputs(const std::vector<OutputFile>& files);

struct RunManifest {
    std::string command;
    nlohmann::json config;
    std::uint64_t master_seed = 0;
    std::size_t threads = 1;
    std::string tool_version{kToolVersion};
    std::string started_at;
    std::string finished_at;
    double wall_time_seconds = 0.0;
    std::vector<FileDigest> inputs;
    std::vector<FileDigest> outputs;
};

nlohmann::json to_json(const RunManifest& m);
/// Throws std::invalid_argument on a malformed document.
RunManifest manifest_from_json(const nlohmann::json& doc);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

} // namespace bpfree::cli

#endif // BPFREE_CLI_MANIFEST_HPP
