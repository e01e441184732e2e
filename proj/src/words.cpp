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
// Word indexing and word-string formatting.

#include "roughsig/errors.hpp"
#include "roughsig/tensor_algebra.hpp"

#include <charconv>

namespace roughsig {

    void validate(const AlgebraShape& shape) {
        if (shape.width < 1) {
            throw InputError("alphabet width must be >= 1, got " + std::to_string(shape.width));
        }
        if (shape.depth < 0) {
            throw InputError("truncation depth must be >= 0, got " + std::to_string(shape.depth));
        }
    }

    std::int64_t dim(const AlgebraShape& shape) {
        validate(shape);
        if (shape.width == 1) {
            return static_cast<std::int64_t>(shape.depth) + 1;
        }
        // (d^(n+1) - 1) / (d - 1), with d^(n+1) itself required to be representable.
        std::int64_t power = 1;
        for (int k = 0; k <= shape.depth; ++k) {
            if (__builtin_mul_overflow(power, static_cast<std::int64_t>(shape.width), &power)) {
                throw InputError("tensor algebra of width " + std::to_string(shape.width) + " and depth " +
                                 std::to_string(shape.depth) + " is too large to index");
            }
        }
        return (power - 1) / (shape.width - 1);
    }

    std::int64_t words_of_degree(const AlgebraShape& shape, int k) {
        std::int64_t count = 1;
        for (int i = 0; i < k; ++i) {
            count *= shape.width;
        }
        return count;
    }

    std::int64_t degree_offset(const AlgebraShape& shape, int k) {
        if (shape.width == 1) {
            return k;
        }
        return (words_of_degree(shape, k) - 1) / (shape.width - 1);
    }

    std::int64_t word_index(const AlgebraShape& shape, std::span<const int> word) {
        const auto k = static_cast<int>(word.size());
        if (k > shape.depth) {
            throw InputError("word of length " + std::to_string(k) + " exceeds depth " +
                             std::to_string(shape.depth));
        }
        std::int64_t index = 0;
        for (int letter : word) {
            if (letter < 1 || letter > shape.width) {
                throw InputError("letter " + std::to_string(letter) + " outside alphabet 1.." +
                                 std::to_string(shape.width));
            }
            index = index * shape.width + (letter - 1);
        }
        return degree_offset(shape, k) + index;
    }

    Word word_at(const AlgebraShape& shape, std::int64_t index) {
        if (index < 0 || index >= dim(shape)) {
            throw InputError("word index " + std::to_string(index) + " out of range");
        }
        int k = 0;
        while (degree_offset(shape, k + 1) <= index) {
            ++k;
        }
        std::int64_t rest = index - degree_offset(shape, k);
        Word word(static_cast<std::size_t>(k));
        for (int i = k - 1; i >= 0; --i) {
            word[static_cast<std::size_t>(i)] = static_cast<int>(rest % shape.width) + 1;
            rest /= shape.width;
        }
        return word;
    }

    std::string word_to_string(std::span<const int> word, int width) {
        std::string out;
        if (width <= 9) {
            for (int letter : word) {
                out.push_back(static_cast<char>('0' + letter));
            }
            return out;
        }
        if (word.empty()) {
            return out;
        }
        out.push_back('(');
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i != 0) {
                out.push_back(',');
            }
            out += std::to_string(word[i]);
        }
        out.push_back(')');
        return out;
    }

    Word word_from_string(std::string_view text, int width) {
        Word word;
        if (text.empty()) {
            return word;
        }
        auto check = [&](int letter) {
            if (letter < 1 || letter > width) {
                throw InputError("word \"" + std::string(text) + "\" has a letter outside 1.." +
                                 std::to_string(width));
            }
            word.push_back(letter);
        };
        if (width <= 9) {
            for (char c : text) {
                if (c < '0' || c > '9') {
                    throw InputError("malformed word \"" + std::string(text) + "\"");
                }
                check(c - '0');
            }
            return word;
        }
        if (text.size() < 3 || text.front() != '(' || text.back() != ')') {
            throw InputError("malformed word \"" + std::string(text) + "\"");
        }
        auto body = text.substr(1, text.size() - 2);
        while (true) {
            auto comma = body.find(',');
            auto token = body.substr(0, comma);
            int letter = 0;
            auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), letter);
            if (ec != std::errc{} || ptr != token.data() + token.size()) {
                throw InputError("malformed word \"" + std::string(text) + "\"");
            }
            check(letter);
            if (comma == std::string_view::npos) {
                break;
            }
            body.remove_prefix(comma + 1);
        }
        return word;
    }

}  // namespace roughsig
