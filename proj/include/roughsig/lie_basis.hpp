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
// Lyndon basis of the free Lie algebra sitting inside the truncated tensor algebra.

#ifndef ROUGHSIG_LIE_BASIS_HPP
#define ROUGHSIG_LIE_BASIS_HPP

#include "roughsig/tensor_algebra.hpp"

#include <memory>
#include <optional>
#include <utility>
#include <vector>

namespace roughsig {

    bool is_lyndon(std::span<const int> word);

    /* Standard factorisation w = u.v where v is the longest proper suffix of w that is itself Lyndon.
     * Returns the split position |u|. Only meaningful for Lyndon words of length >= 2.
     */
    std::size_t standard_split(std::span<const int> word);

    /* All Lyndon words of length <= depth, ordered by length and then lexicographically:
     *
     *     1 2 .. d | 12 13 .. | 112 122 .. | ...
     *
     * Each entry carries its standard bracketing as indices of its two factors (or -1 for letters),
     * and the sparse expansion of that bracket in the tensor algebra. Immutable once built.
     */
    class LyndonBasis {
    public:
        struct Entry {
            Word letters;
            int left{-1};
            int right{-1};
            // (word index, coefficient) pairs, all of the same length as letters.
            std::vector<std::pair<std::int64_t, double>> expansion;
        };

        explicit LyndonBasis(const AlgebraShape& shape);

        const AlgebraShape& shape() const { return shape_; }
        std::size_t size() const { return entries_.size(); }
        const Entry& operator[](std::size_t i) const { return entries_[i]; }
        const std::vector<Entry>& entries() const { return entries_; }

        // Position of a Lyndon word in the basis, if present.
        std::optional<std::size_t> find(std::span<const int> word) const;

        // Dense tensor of the bracket for entry i.
        TruncatedTensor expansion(std::size_t i) const;

        std::string label(std::size_t i) const;

    private:
        AlgebraShape shape_;
        std::vector<Entry> entries_;
        // tensor index -> basis position, -1 for non-Lyndon words
        std::vector<int> position_;
    };

    std::shared_ptr<const LyndonBasis> build_basis(const AlgebraShape& shape);

    struct LyndonCoordinates {
        std::shared_ptr<const LyndonBasis> basis;
        std::vector<double> coords;

        double at(std::string_view word) const;
    };

    // Recursive [u, v] = u v - v u on the standard factorisation. Throws InputError for non-Lyndon words.
    TruncatedTensor bracket_to_tensor(std::span<const int> word, const AlgebraShape& shape);

    /* Solves for the Lyndon coordinates of a Lie element degree by degree, by back-substitution
     * through the unitriangular expansion matrix. Throws ProjectionError when the reconstruction
     * misses any coefficient by more than tolerance.
     */
    LyndonCoordinates tensor_to_coords(const TruncatedTensor& log_tensor,
                                       std::shared_ptr<const LyndonBasis> basis,
                                       double tolerance = 1e-9);

    TruncatedTensor coords_to_tensor(const LyndonCoordinates& coords);

}  // namespace roughsig

#endif  // ROUGHSIG_LIE_BASIS_HPP
