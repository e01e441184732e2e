/* Copyright 2026 The roughsig Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include "cli/report.hpp"
#include "roughsig/errors.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace roughsig::cli {
    namespace fs = std::filesystem;

    namespace {
        InputFile load(const fs::path& path) {
            std::ifstream in(path, std::ios::binary);
            if (!in) {
                throw InputError("cannot open input file " + path.string());
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            InputFile file{path, buffer.str(), {}};
            file.sha256 = sha256_hex(file.contents);
            return file;
        }
    }  // namespace

    std::vector<InputFile> read_inputs(const std::string& where) {
        std::error_code ec;
        const fs::path root(where);
        if (fs::is_directory(root, ec)) {
            std::vector<fs::path> paths;
            for (const auto& entry : fs::directory_iterator(root, ec)) {
                if (entry.is_regular_file()) {
                    paths.push_back(entry.path());
                }
            }
            if (ec) {
                throw InputError("cannot list directory " + where + ": " + ec.message());
            }
            std::sort(paths.begin(), paths.end());
            if (paths.empty()) {
                throw InputError("input directory " + where + " contains no files");
            }
            std::vector<InputFile> out;
            for (const auto& p : paths) {
                out.push_back(load(p));
            }
            return out;
        }
        if (!fs::is_regular_file(root, ec)) {
            throw InputError("input " + where + " does not exist");
        }
        return {load(root)};
    }

    std::string sha256_hex(std::string_view bytes) {
        unsigned char digest[EVP_MAX_MD_SIZE];
        unsigned int length = 0;
        if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
            throw Error("sha256 digest failed");
        }
        std::string hex;
        hex.reserve(length * 2);
        char byte[3];
        for (unsigned int i = 0; i < length; ++i) {
            std::snprintf(byte, sizeof(byte), "%02x", digest[i]);
            hex += byte;
        }
        return hex;
    }

    nlohmann::ordered_json word_map(const TruncatedTensor& t) {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (const auto& [word, value] : to_word_map(t)) {
            out[word] = value;
        }
        return out;
    }

    nlohmann::ordered_json word_map(const LyndonCoordinates& coords) {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < coords.coords.size(); ++i) {
            out[coords.basis->label(i)] = coords.coords[i];
        }
        return out;
    }

    nlohmann::ordered_json describe_inputs(const std::vector<InputFile>& files) {
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& f : files) {
            out.push_back({{"path", f.path.string()}, {"bytes", f.contents.size()}, {"sha256", f.sha256}});
        }
        return out;
    }

}  // namespace roughsig::cli
