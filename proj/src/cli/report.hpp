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
// JSON report helpers for the command-line tool.

#ifndef ROUGHSIG_CLI_REPORT_HPP
#define ROUGHSIG_CLI_REPORT_HPP

#include "roughsig/lie_basis.hpp"
#include "roughsig/tensor_algebra.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <vector>

namespace roughsig::cli {

    struct InputFile {
        std::filesystem::path path;
        std::string contents;
        std::string sha256;
    };

    // Reads a file, or every regular file in a directory sorted by name. Throws InputError.
    std::vector<InputFile> read_inputs(const std::string& where);

    std::string sha256_hex(std::string_view bytes);

    // {"": 1.0, "1": ..., "12": ...} in layout order.
    nlohmann::ordered_json word_map(const TruncatedTensor& t);
    nlohmann::ordered_json word_map(const LyndonCoordinates& coords);

    nlohmann::ordered_json describe_inputs(const std::vector<InputFile>& files);

}  // namespace roughsig::cli

#endif  // ROUGHSIG_CLI_REPORT_HPP
