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


#include "bpfree/cli/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace bpfree::cli {

std::string sha256_hex(std::string_view bytes) {
    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                &EVP_MD_CTX_free);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
        EVP_DigestFinal_ex(ctx.get(), md, &len) != 1) {
        throw std::runtime_error("sha256: digest computation failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned int i = 0; i < len; ++i) {
        out += kHex[md[i] >> 4];
        out += kHex[md[i] & 15];
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FileDigest digest_of(const OutputFile& file) {
    return {file.role, file.path, sha256_hex(file.content), file.content.size()};
}

void write_outputs(const std::vector<OutputFile>& files) {
    namespace fs = std::filesystem;
    std::vector<fs::path> staged;
    auto discard = [&] {
        std::error_code ec;
        for (const auto& p : staged) {
            fs::remove(p, ec);
        }
    };
    for (const auto& f : files) {
        const fs::path tmp = fs::path(f.path).concat(".partial");
        staged.push_back(tmp);
        std::ofstream out(tmp, std::ios::binary);
        out << f.content;
        out.close();
        if (!out) {
            discard();
            throw std::invalid_argument("cannot write '" + f.path + "'");
        }
    }
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::error_code ec;
        fs::rename(staged[i], files[i].path, ec);
        if (ec) {
            discard();
            throw std::invalid_argument("cannot move output into '" + files[i].path +
                                        "': " + ec.message());
        }
    }
}

namespace {

nlohmann::json digests_json(const std::vector<FileDigest>& v) {
    auto arr = nlohmann::json::array();
    for (const auto& d : v) {
        arr.push_back({{"role", d.role}, {"path", d.path}, {"sha256", d.sha256},
                       {"bytes", d.bytes}});
    }
    return arr;
}

std::vector<FileDigest> digests_from(const nlohmann::json& arr) {
    std::vector<FileDigest> out;
    for (const auto& d : arr) {
        out.push_back({d.at("role").get<std::string>(), d.at("path").get<std::string>(),
                       d.at("sha256").get<std::string>(), d.at("bytes").get<std::size_t>()});
    }
    return out;
}

} // namespace

nlohmann::json to_json(const RunManifest& m) {
    return {{"command", m.command},
            {"tool_version", m.tool_version},
            {"master_seed", m.master_seed},
            {"threads", m.threads},
            {"config", m.config},
            {"started_at", m.started_at},
            {"finished_at", m.finished_at},
            {"wall_time_seconds", m.wall_time_seconds},
            {"inputs", digests_json(m.inputs)},
            {"outputs", digests_json(m.outputs)}};
}

RunManifest manifest_from_json(const nlohmann::json& doc) {
    try {
        RunManifest m;
        m.command = doc.at("command").get<std::string>();
        m.config = doc.at("config");
        m.master_seed = doc.at("master_seed").get<std::uint64_t>();
        m.threads = doc.at("threads").get<std::size_t>();
        m.tool_version = doc.at("tool_version").get<std::string>();
        m.started_at = doc.value("started_at", "");
        m.finished_at = doc.value("finished_at", "");
        m.wall_time_seconds = doc.value("wall_time_seconds", 0.0);
        m.inputs = digests_from(doc.value("inputs", nlohmann::json::array()));
        m.outputs = digests_from(doc.at("outputs"));
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed manifest: ") + e.what());
    }
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace bpfree::cli
