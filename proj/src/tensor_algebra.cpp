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
#include "roughsig/tensor_algebra.hpp"
#include "tensor_kernels.hpp"

#include <algorithm>
#include <cmath>

namespace roughsig {
    namespace detail {

        TruncatedTensor TensorAccess::wrap(const AlgebraShape& shape, std::vector<double> coeffs) {
            if (!all_finite(coeffs)) {
                throw NumericalError("tensor computation produced a non-finite coefficient");
            }
            return TruncatedTensor(shape, std::move(coeffs));
        }

        Layout::Layout(const AlgebraShape& shape_) : shape{shape_} {
            dim(shape);  // validates and rejects overflowing shapes
            offset.resize(static_cast<std::size_t>(shape.depth) + 2);
            count.resize(static_cast<std::size_t>(shape.depth) + 1);
            for (int k = 0; k <= shape.depth + 1; ++k) {
                offset[static_cast<std::size_t>(k)] = degree_offset(shape, k);
            }
            for (int k = 0; k <= shape.depth; ++k) {
                count[static_cast<std::size_t>(k)] = words_of_degree(shape, k);
            }
        }

        void mul_into(const Layout& layout, std::span<const double> a, std::span<const double> b,
                      std::span<double> out) {
            const int depth = layout.shape.depth;
            std::fill(out.begin(), out.end(), 0.0);
            for (int k = 0; k <= depth; ++k) {
                double* block = out.data() + layout.offset[static_cast<std::size_t>(k)];
                for (int i = 0; i <= k; ++i) {
                    const int j = k - i;
                    const double* left = a.data() + layout.offset[static_cast<std::size_t>(i)];
                    const double* right = b.data() + layout.offset[static_cast<std::size_t>(j)];
                    const std::int64_t left_count = layout.count[static_cast<std::size_t>(i)];
                    const std::int64_t right_count = layout.count[static_cast<std::size_t>(j)];
                    for (std::int64_t u = 0; u < left_count; ++u) {
                        const double coeff = left[u];
                        if (coeff == 0.0) {
                            continue;
                        }
                        double* row = block + u * right_count;
                        for (std::int64_t v = 0; v < right_count; ++v) {
                            row[v] += coeff * right[v];
                        }
                    }
                }
            }
        }

        void exp_vector_into(const Layout& layout, std::span<const double> x, std::span<double> out) {
            const std::int64_t width = layout.shape.width;
            out[0] = 1.0;
            for (int k = 1; k <= layout.shape.depth; ++k) {
                const double* prev = out.data() + layout.offset[static_cast<std::size_t>(k - 1)];
                double* block = out.data() + layout.offset[static_cast<std::size_t>(k)];
                const std::int64_t prev_count = layout.count[static_cast<std::size_t>(k - 1)];
                const double inv_k = 1.0 / k;
                for (std::int64_t u = 0; u < prev_count; ++u) {
                    const double coeff = prev[u] * inv_k;
                    for (std::int64_t v = 0; v < width; ++v) {
                        block[u * width + v] = coeff * x[static_cast<std::size_t>(v)];
                    }
                }
            }
        }

        bool all_finite(std::span<const double> values) {
            return std::all_of(values.begin(), values.end(), [](double v) { return std::isfinite(v); });
        }

    }  // namespace detail

    namespace {
        void require_same_shape(const TruncatedTensor& a, const TruncatedTensor& b, const char* op) {
            if (!(a.shape() == b.shape())) {
                throw InputError(std::string(op) + ": shape mismatch (width " + std::to_string(a.shape().width) +
                                 ", depth " + std::to_string(a.shape().depth) + ") vs (width " +
                                 std::to_string(b.shape().width) + ", depth " + std::to_string(b.shape().depth) +
                                 ")");
            }
        }

        std::vector<double> zeros(const AlgebraShape& shape) {
            return std::vector<double>(static_cast<std::size_t>(dim(shape)), 0.0);
        }
    }  // namespace

    TruncatedTensor TruncatedTensor::zero(const AlgebraShape& shape) {
        return TruncatedTensor(shape, zeros(shape));
    }

    TruncatedTensor TruncatedTensor::unit(const AlgebraShape& shape) {
        auto coeffs = zeros(shape);
        coeffs[0] = 1.0;
        return TruncatedTensor(shape, std::move(coeffs));
    }

    TruncatedTensor TruncatedTensor::from_vector(const AlgebraShape& shape, std::span<const double> x) {
        if (static_cast<int>(x.size()) != shape.width) {
            throw InputError("level-one element needs " + std::to_string(shape.width) + " entries, got " +
                             std::to_string(x.size()));
        }
        if (!detail::all_finite(x)) {
            throw InputError("level-one element has a non-finite entry");
        }
        auto coeffs = zeros(shape);
        if (shape.depth >= 1) {
            std::copy(x.begin(), x.end(), coeffs.begin() + 1);
        }
        return TruncatedTensor(shape, std::move(coeffs));
    }

    TruncatedTensor TruncatedTensor::from_coeffs(const AlgebraShape& shape, std::vector<double> coeffs) {
        if (static_cast<std::int64_t>(coeffs.size()) != dim(shape)) {
            throw InputError("expected " + std::to_string(dim(shape)) + " coefficients, got " +
                             std::to_string(coeffs.size()));
        }
        if (!detail::all_finite(coeffs)) {
            throw InputError("coefficients must be finite");
        }
        return TruncatedTensor(shape, std::move(coeffs));
    }

    std::span<const double> TruncatedTensor::degree(int k) const {
        if (k < 0 || k > shape_.depth) {
            throw InputError("degree " + std::to_string(k) + " outside 0.." + std::to_string(shape_.depth));
        }
        const auto begin = static_cast<std::size_t>(degree_offset(shape_, k));
        const auto end = static_cast<std::size_t>(degree_offset(shape_, k + 1));
        return std::span<const double>(coeffs_).subspan(begin, end - begin);
    }

    double TruncatedTensor::at(std::span<const int> word) const {
        return coeffs_[static_cast<std::size_t>(word_index(shape_, word))];
    }

    double TruncatedTensor::at(std::string_view word) const {
        return at(word_from_string(word, shape_.width));
    }

    TruncatedTensor TruncatedTensor::truncated_to(int k) const {
        auto coeffs = coeffs_;
        if (k < shape_.depth) {
            const auto cut = static_cast<std::size_t>(degree_offset(shape_, std::max(k, -1) + 1));
            std::fill(coeffs.begin() + static_cast<std::ptrdiff_t>(cut), coeffs.end(), 0.0);
        }
        return TruncatedTensor(shape_, std::move(coeffs));
    }

    TruncatedTensor concat_mul(const TruncatedTensor& a, const TruncatedTensor& b) {
        require_same_shape(a, b, "concat_mul");
        const detail::Layout layout(a.shape());
        auto out = zeros(a.shape());
        detail::mul_into(layout, a.coeffs(), b.coeffs(), out);
        return detail::TensorAccess::wrap(a.shape(), std::move(out));
    }

    TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b) {
        require_same_shape(a, b, "add");
        std::vector<double> out(a.coeffs().begin(), a.coeffs().end());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] += b.coeffs()[i];
        }
        return detail::TensorAccess::wrap(a.shape(), std::move(out));
    }

    TruncatedTensor subtract(const TruncatedTensor& a, const TruncatedTensor& b) {
        require_same_shape(a, b, "subtract");
        std::vector<double> out(a.coeffs().begin(), a.coeffs().end());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] -= b.coeffs()[i];
        }
        return detail::TensorAccess::wrap(a.shape(), std::move(out));
    }

    TruncatedTensor scale(const TruncatedTensor& a, double lambda) {
        std::vector<double> out(a.coeffs().begin(), a.coeffs().end());
        for (double& c : out) {
            c *= lambda;
        }
        return detail::TensorAccess::wrap(a.shape(), std::move(out));
    }

    TruncatedTensor tensor_exp(const TruncatedTensor& t) {
        if (std::abs(t[0]) > 1e-14) {
            throw InputError("tensor_exp: empty-word coefficient must be zero, got " + std::to_string(t[0]));
        }
        const auto& shape = t.shape();
        const detail::Layout layout(shape);
        std::vector<double> x(t.coeffs().begin(), t.coeffs().end());
        x[0] = 0.0;

        // Horner: 1 + x(1 + x/2(1 + ... (1 + x/n)))
        auto result = zeros(shape);
        result[0] = 1.0;
        std::vector<double> scratch(result.size());
        for (int k = shape.depth; k >= 1; --k) {
            detail::mul_into(layout, x, result, scratch);
            const double inv_k = 1.0 / k;
            for (std::size_t i = 0; i < scratch.size(); ++i) {
                result[i] = scratch[i] * inv_k;
            }
            result[0] += 1.0;
        }
        return detail::TensorAccess::wrap(shape, std::move(result));
    }

    TruncatedTensor tensor_log(const TruncatedTensor& g) {
        if (std::abs(g[0] - 1.0) > 1e-12) {
            throw InputError("tensor_log: empty-word coefficient must be 1, got " + std::to_string(g[0]));
        }
        const auto& shape = g.shape();
        const int depth = shape.depth;
        if (depth == 0) {
            return TruncatedTensor::zero(shape);
        }
        const detail::Layout layout(shape);
        std::vector<double> x(g.coeffs().begin(), g.coeffs().end());
        x[0] = 0.0;

        // Horner: x(1 - x(1/2 - x(1/3 - ...)))
        auto inner = zeros(shape);
        inner[0] = (depth % 2 == 1 ? 1.0 : -1.0) / depth;
        std::vector<double> scratch(inner.size());
        for (int k = depth - 1; k >= 1; --k) {
            detail::mul_into(layout, x, inner, scratch);
            inner.swap(scratch);
            inner[0] += (k % 2 == 1 ? 1.0 : -1.0) / k;
        }
        detail::mul_into(layout, x, inner, scratch);
        return detail::TensorAccess::wrap(shape, std::move(scratch));
    }

    double max_abs_diff(const TruncatedTensor& a, const TruncatedTensor& b) {
        require_same_shape(a, b, "max_abs_diff");
        double worst = 0.0;
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
            worst = std::max(worst, std::abs(a.coeffs()[i] - b.coeffs()[i]));
        }
        return worst;
    }

    std::vector<std::pair<std::string, double>> to_word_map(const TruncatedTensor& t) {
        std::vector<std::pair<std::string, double>> out;
        out.reserve(static_cast<std::size_t>(t.size()));
        for (std::int64_t i = 0; i < t.size(); ++i) {
            out.emplace_back(word_to_string(word_at(t.shape(), i), t.shape().width), t[i]);
        }
        return out;
    }

    TruncatedTensor from_word_map(const AlgebraShape& shape,
                                  std::span<const std::pair<std::string, double>> entries) {
        auto coeffs = zeros(shape);
        for (const auto& [word, value] : entries) {
            coeffs[static_cast<std::size_t>(word_index(shape, word_from_string(word, shape.width)))] = value;
        }
        return TruncatedTensor::from_coeffs(shape, std::move(coeffs));
    }

}  // namespace roughsig
