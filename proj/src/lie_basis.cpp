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

#include "roughsig/errors.hpp"
#include "roughsig/lie_basis.hpp"
#include "tensor_kernels.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace roughsig {

    bool is_lyndon(std::span<const int> word) {
        const std::size_t n = word.size();
        if (n == 0) {
            return false;
        }
        for (std::size_t shift = 1; shift < n; ++shift) {
            // compare word against its rotation by shift
            for (std::size_t i = 0; i < n; ++i) {
                const int a = word[i];
                const int b = word[(i + shift) % n];
                if (a < b) {
                    break;
                }
                if (a > b || i + 1 == n) {
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t standard_split(std::span<const int> word) {
        for (std::size_t split = 1; split < word.size(); ++split) {
            if (is_lyndon(word.subspan(split))) {
                return split;
            }
        }
        return 0;
    }

    namespace {
        // Duval's algorithm; yields every Lyndon word of length <= depth in lexicographic order.
        std::vector<Word> duval(int width, int depth) {
            std::vector<Word> out;
            if (depth < 1) {
                return out;
            }
            Word w{1};
            while (!w.empty()) {
                out.push_back(w);
                const std::size_t m = w.size();
                while (static_cast<int>(w.size()) < depth) {
                    w.push_back(w[w.size() - m]);
                }
                while (!w.empty() && w.back() == width) {
                    w.pop_back();
                }
                if (!w.empty()) {
                    ++w.back();
                }
            }
            return out;
        }
    }  // namespace

    LyndonBasis::LyndonBasis(const AlgebraShape& shape) : shape_{shape} {
        const auto total = dim(shape);
        position_.assign(static_cast<std::size_t>(total), -1);

        auto words = duval(shape.width, shape.depth);
        std::stable_sort(words.begin(), words.end(),
                         [](const Word& a, const Word& b) { return a.size() < b.size(); });

        entries_.reserve(words.size());
        for (auto& letters : words) {
            Entry entry;
            const auto index = word_index(shape, letters);
            if (letters.size() == 1) {
                entry.expansion.emplace_back(index, 1.0);
            } else {
                const auto split = standard_split(letters);
                const auto left_index = word_index(shape, std::span<const int>(letters).first(split));
                const auto right_index = word_index(shape, std::span<const int>(letters).subspan(split));
                entry.left = position_[static_cast<std::size_t>(left_index)];
                entry.right = position_[static_cast<std::size_t>(right_index)];
                const auto& u = entries_[static_cast<std::size_t>(entry.left)];
                const auto& v = entries_[static_cast<std::size_t>(entry.right)];

                const int ku = static_cast<int>(u.letters.size());
                const int kv = static_cast<int>(v.letters.size());
                const int k = ku + kv;
                const auto offset_u = degree_offset(shape, ku);
                const auto offset_v = degree_offset(shape, kv);
                const auto offset_k = degree_offset(shape, k);
                const auto scale_u = words_of_degree(shape, kv);
                const auto scale_v = words_of_degree(shape, ku);

                std::map<std::int64_t, double> acc;
                for (const auto& [iu, cu] : u.expansion) {
                    for (const auto& [iv, cv] : v.expansion) {
                        const auto lu = iu - offset_u;
                        const auto lv = iv - offset_v;
                        acc[offset_k + lu * scale_u + lv] += cu * cv;
                        acc[offset_k + lv * scale_v + lu] -= cu * cv;
                    }
                }
                for (const auto& [i, c] : acc) {
                    if (c != 0.0) {
                        entry.expansion.emplace_back(i, c);
                    }
                }
            }
            position_[static_cast<std::size_t>(index)] = static_cast<int>(entries_.size());
            entry.letters = std::move(letters);
            entries_.push_back(std::move(entry));
        }
    }

    std::optional<std::size_t> LyndonBasis::find(std::span<const int> word) const {
        if (word.empty() || static_cast<int>(word.size()) > shape_.depth) {
            return std::nullopt;
        }
        for (int letter : word) {
            if (letter < 1 || letter > shape_.width) {
                return std::nullopt;
            }
        }
        const int pos = position_[static_cast<std::size_t>(word_index(shape_, word))];
        if (pos < 0) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(pos);
    }

    TruncatedTensor LyndonBasis::expansion(std::size_t i) const {
        std::vector<double> coeffs(static_cast<std::size_t>(dim(shape_)), 0.0);
        for (const auto& [index, c] : entries_.at(i).expansion) {
            coeffs[static_cast<std::size_t>(index)] = c;
        }
        return TruncatedTensor::from_coeffs(shape_, std::move(coeffs));
    }

    std::string LyndonBasis::label(std::size_t i) const {
        return word_to_string(entries_.at(i).letters, shape_.width);
    }

    std::shared_ptr<const LyndonBasis> build_basis(const AlgebraShape& shape) {
        return std::make_shared<const LyndonBasis>(shape);
    }

    double LyndonCoordinates::at(std::string_view word) const {
        const auto letters = word_from_string(word, basis->shape().width);
        const auto pos = basis->find(letters);
        if (!pos) {
            throw InputError("\"" + std::string(word) + "\" is not a basis word");
        }
        return coords[*pos];
    }

    TruncatedTensor bracket_to_tensor(std::span<const int> word, const AlgebraShape& shape) {
        if (!is_lyndon(word)) {
            throw InputError("\"" + word_to_string(word, shape.width) + "\" is not a Lyndon word");
        }
        if (static_cast<int>(word.size()) > shape.depth) {
            throw InputError("Lyndon word longer than the truncation depth");
        }
        if (word.size() == 1) {
            std::vector<double> x(static_cast<std::size_t>(shape.width), 0.0);
            const int letter = word[0];
            if (letter < 1 || letter > shape.width) {
                throw InputError("letter outside the alphabet");
            }
            x[static_cast<std::size_t>(letter - 1)] = 1.0;
            return TruncatedTensor::from_vector(shape, x);
        }
        const auto split = standard_split(word);
        const auto u = bracket_to_tensor(word.first(split), shape);
        const auto v = bracket_to_tensor(word.subspan(split), shape);
        return subtract(concat_mul(u, v), concat_mul(v, u));
    }

    LyndonCoordinates tensor_to_coords(const TruncatedTensor& log_tensor,
                                       std::shared_ptr<const LyndonBasis> basis, double tolerance) {
        if (!(log_tensor.shape() == basis->shape())) {
            throw InputError("tensor_to_coords: tensor shape does not match the basis");
        }
        std::vector<double> residual(log_tensor.coeffs().begin(), log_tensor.coeffs().end());
        LyndonCoordinates out{basis, std::vector<double>(basis->size(), 0.0)};

        // The expansion of a Lyndon word w is w plus words lexicographically greater than w, so
        // processing entries in order never disturbs a coefficient that has already been read.
        for (std::size_t i = 0; i < basis->size(); ++i) {
            const auto& entry = (*basis)[i];
            const auto lead = word_index(basis->shape(), entry.letters);
            const double coeff = residual[static_cast<std::size_t>(lead)];
            out.coords[i] = coeff;
            if (coeff == 0.0) {
                continue;
            }
            for (const auto& [index, value] : entry.expansion) {
                residual[static_cast<std::size_t>(index)] -= coeff * value;
            }
        }

        std::size_t worst = 0;
        double worst_value = 0.0;
        for (std::size_t i = 0; i < residual.size(); ++i) {
            if (std::abs(residual[i]) > worst_value) {
                worst_value = std::abs(residual[i]);
                worst = i;
            }
        }
        if (!(worst_value <= tolerance)) {
            throw ProjectionError(
                word_to_string(word_at(basis->shape(), static_cast<std::int64_t>(worst)), basis->shape().width),
                worst_value);
        }
        return out;
    }

    TruncatedTensor coords_to_tensor(const LyndonCoordinates& coords) {
        const auto& basis = *coords.basis;
        if (coords.coords.size() != basis.size()) {
            throw InputError("coordinate count does not match the basis size");
        }
        std::vector<double> out(static_cast<std::size_t>(dim(basis.shape())), 0.0);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const double c = coords.coords[i];
            if (c == 0.0) {
                continue;
            }
            for (const auto& [index, value] : basis[i].expansion) {
                out[static_cast<std::size_t>(index)] += c * value;
            }
        }
        return detail::TensorAccess::wrap(basis.shape(), std::move(out));
    }

}  // namespace roughsig
