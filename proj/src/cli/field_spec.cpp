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

#include "cli/field_spec.hpp"
#include "roughsig/errors.hpp"

#include <json.hpp>

namespace roughsig::cli {
    namespace {
        using nlohmann::json;

        int positive_int(const json& doc, const char* key) {
            if (!doc.contains(key) || !doc[key].is_number_integer() || doc[key].get<long>() < 1) {
                throw InputError(std::string("field spec: \"") + key + "\" must be a positive integer");
            }
            return doc[key].get<int>();
        }

        std::vector<double> numbers(const json& node, const std::string& what) {
            std::vector<double> out;
            if (!node.is_array()) {
                throw InputError("field spec: " + what + " must be an array");
            }
            for (const auto& item : node) {
                if (item.is_array()) {
                    auto row = numbers(item, what);
                    out.insert(out.end(), row.begin(), row.end());
                } else if (item.is_number()) {
                    out.push_back(item.get<double>());
                } else {
                    throw InputError("field spec: " + what + " has a non-numeric entry");
                }
            }
            return out;
        }
    }  // namespace

    LinearFieldSpec parse_linear_field(std::string_view json_text) {
        json doc;
        try {
            doc = json::parse(json_text);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("field spec is not valid JSON: ") + e.what());
        }
        if (!doc.is_object()) {
            throw InputError("field spec must be a JSON object");
        }
        const int v = positive_int(doc, "state_dim");
        const int d = positive_int(doc, "channels");
        if (!doc.contains("matrices")) {
            throw InputError("field spec: missing \"matrices\"");
        }
        const auto& mats = doc["matrices"];
        if (!mats.is_array() || static_cast<int>(mats.size()) != d) {
            throw InputError("field spec: \"matrices\" must hold " + std::to_string(d) + " matrices");
        }
        std::vector<Eigen::MatrixXd> matrices;
        for (int c = 0; c < d; ++c) {
            const auto what = "matrix " + std::to_string(c + 1);
            const auto flat = numbers(mats[static_cast<std::size_t>(c)], what);
            if (static_cast<int>(flat.size()) != v * v) {
                throw InputError("field spec: " + what + " needs " + std::to_string(v * v) + " entries, got " +
                                 std::to_string(flat.size()));
            }
            Eigen::MatrixXd a(v, v);
            for (int r = 0; r < v; ++r) {
                for (int k = 0; k < v; ++k) {
                    a(r, k) = flat[static_cast<std::size_t>(r * v + k)];
                }
            }
            matrices.push_back(std::move(a));
        }
        if (!doc.contains("z0")) {
            throw InputError("field spec: missing \"z0\"");
        }
        auto z0 = numbers(doc["z0"], "\"z0\"");
        if (static_cast<int>(z0.size()) != v) {
            throw InputError("field spec: \"z0\" needs " + std::to_string(v) + " entries");
        }
        return {VectorFieldSet::linear(std::move(matrices)), std::move(z0)};
    }

}  // namespace roughsig::cli
