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
// Raw buffer kernels behind TruncatedTensor. Internal to the library.

#ifndef ROUGHSIG_SRC_TENSOR_KERNELS_HPP
#define ROUGHSIG_SRC_TENSOR_KERNELS_HPP

#include "roughsig/tensor_algebra.hpp"

#include <span>
#include <vector>

namespace roughsig::detail {

    struct TensorAccess {
        // Wraps a buffer produced by a library computation. Non-finite entries raise NumericalError.
        static TruncatedTensor wrap(const AlgebraShape& shape, std::vector<double> coeffs);
        static std::vector<double>& buffer(TruncatedTensor& t) { return t.coeffs_; }
    };

    // Precomputed degree offsets and block sizes for one shape.
    struct Layout {
        explicit Layout(const AlgebraShape& shape);

        AlgebraShape shape;
        std::vector<std::int64_t> offset;  // depth + 2 entries
        std::vector<std::int64_t> count;   // depth + 1 entries, d^k
    };

    // out = a (x) b. out must not alias a or b.
    void mul_into(const Layout& layout, std::span<const double> a, std::span<const double> b,
                  std::span<double> out);

    // out = exp(x) for a level-one element x (width entries).
    void exp_vector_into(const Layout& layout, std::span<const double> x, std::span<double> out);

    bool all_finite(std::span<const double> values);

}  // namespace roughsig::detail

#endif  // ROUGHSIG_SRC_TENSOR_KERNELS_HPP
