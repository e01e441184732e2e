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
// Arithmetic in the truncated free tensor algebra over a d-letter alphabet.

#ifndef ROUGHSIG_TENSOR_ALGEBRA_HPP
#define ROUGHSIG_TENSOR_ALGEBRA_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace roughsig {

    namespace detail {
        struct TensorAccess;
    }

    /* Width d (number of letters, >= 1) and truncation depth n (>= 0).
     *
     * Words are laid out degree-major and lexicographically inside each degree:
     *
     *     eps | 1 2 .. d | 11 12 .. 1d 21 .. dd | 111 ...
     *
     * so a word w = w_1 .. w_k (letters 1..d) lives at
     *     degree_offset(k) + sum_i (w_i - 1) d^(k - i).
     */
    struct AlgebraShape {
        int width{1};
        int depth{0};

        friend bool operator==(const AlgebraShape&, const AlgebraShape&) = default;
    };

    // Throws InputError on width < 1 or depth < 0.
    void validate(const AlgebraShape& shape);

    // Number of words of length <= depth. Throws InputError when d^(n+1) does not fit in 64 bits.
    std::int64_t dim(const AlgebraShape& shape);

    // Index of the first word of length k; degree_offset(shape, depth + 1) == dim(shape).
    std::int64_t degree_offset(const AlgebraShape& shape, int k);

    // d^k, unchecked. Callers have already validated the shape through dim().
    std::int64_t words_of_degree(const AlgebraShape& shape, int k);

    using Word = std::vector<int>;

    std::int64_t word_index(const AlgebraShape& shape, std::span<const int> word);
    Word word_at(const AlgebraShape& shape, std::int64_t index);

    // "112" for width <= 9, "(1,12,3)" otherwise; the empty word is "".
    std::string word_to_string(std::span<const int> word, int width);
    Word word_from_string(std::string_view text, int width);

    class TruncatedTensor {
    public:
        static TruncatedTensor zero(const AlgebraShape& shape);
        static TruncatedTensor unit(const AlgebraShape& shape);
        // Level-one element sum_i x_i v_i; x.size() must equal the width.
        static TruncatedTensor from_vector(const AlgebraShape& shape, std::span<const double> x);
        // Takes ownership of a dense degree-major buffer. Rejects wrong sizes and non-finite entries.
        static TruncatedTensor from_coeffs(const AlgebraShape& shape, std::vector<double> coeffs);

        const AlgebraShape& shape() const { return shape_; }
        std::span<const double> coeffs() const { return coeffs_; }
        std::span<const double> degree(int k) const;
        std::int64_t size() const { return static_cast<std::int64_t>(coeffs_.size()); }

        double operator[](std::int64_t index) const { return coeffs_[static_cast<std::size_t>(index)]; }
        double at(std::span<const int> word) const;
        double at(std::string_view word) const;

        // Keeps degrees 0..k and zeroes the rest.
        TruncatedTensor truncated_to(int k) const;

    private:
        friend struct detail::TensorAccess;

        TruncatedTensor(const AlgebraShape& shape, std::vector<double> coeffs)
            : shape_{shape}, coeffs_{std::move(coeffs)} {}

        AlgebraShape shape_;
        std::vector<double> coeffs_;
    };

    /* c_w = sum over splits w = u.v of a_u b_v, dropping everything of length > depth.
     *
     * The degree-k block of the product is
     *     c[k] = sum_{i=0..k} a[i] (outer) b[k-i],
     * each term an outer product of two contiguous blocks in the dense layout.
     */
    TruncatedTensor concat_mul(const TruncatedTensor& a, const TruncatedTensor& b);
    TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b);
    TruncatedTensor subtract(const TruncatedTensor& a, const TruncatedTensor& b);
    TruncatedTensor scale(const TruncatedTensor& a, double lambda);

    // sum_{k=0..n} t^k / k!; t must vanish on the empty word.
    TruncatedTensor tensor_exp(const TruncatedTensor& t);
    // sum_{k=1..n} (-1)^(k+1) (g - 1)^k / k; g must have empty-word coefficient 1.
    TruncatedTensor tensor_log(const TruncatedTensor& g);

    // Largest elementwise absolute difference. Shapes must match.
    double max_abs_diff(const TruncatedTensor& a, const TruncatedTensor& b);

    // Every word paired with its coefficient, in layout order.
    std::vector<std::pair<std::string, double>> to_word_map(const TruncatedTensor& t);
    TruncatedTensor from_word_map(const AlgebraShape& shape,
                                  std::span<const std::pair<std::string, double>> entries);

}  // namespace roughsig

#endif  // ROUGHSIG_TENSOR_ALGEBRA_HPP
