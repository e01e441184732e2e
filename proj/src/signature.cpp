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
#include "roughsig/signature.hpp"
#include "tensor_kernels.hpp"

#include <algorithm>
#include <cmath>

namespace roughsig {

    SignatureResult signature(const PiecewiseLinearPath& path, int depth) {
        const AlgebraShape shape{path.dimension(), depth};
        const detail::Layout layout(shape);
        const auto total = static_cast<std::size_t>(dim(shape));

        std::vector<double> running(total, 0.0);
        running[0] = 1.0;
        std::vector<double> segment(total, 0.0);
        std::vector<double> scratch(total, 0.0);
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            const auto delta = path.increment(j);
            detail::exp_vector_into(layout, delta, segment);
            if (j == 0) {
                running.swap(segment);
                continue;
            }
            detail::mul_into(layout, running, segment, scratch);
            running.swap(scratch);
        }
        return {detail::TensorAccess::wrap(shape, std::move(running)), path.start(), path.end()};
    }

    LyndonCoordinates log_signature(const PiecewiseLinearPath& path, std::shared_ptr<const LyndonBasis> basis) {
        if (basis->shape().width != path.dimension()) {
            throw InputError("log_signature: basis width does not match the path dimension");
        }
        const auto sig = signature(path, basis->shape().depth);
        try {
            return tensor_to_coords(tensor_log(sig.sig), std::move(basis));
        } catch (const ProjectionError& e) {
            throw NumericalError(std::string("log-signature projection failed: ") + e.what());
        }
    }

    LyndonCoordinates log_signature(const PiecewiseLinearPath& path, int depth) {
        return log_signature(path, build_basis({path.dimension(), depth}));
    }

    SignatureResult chen_concat(const SignatureResult& a, const SignatureResult& b) {
        const double scale = std::max({1.0, std::abs(a.end), std::abs(b.start)});
        if (std::abs(a.end - b.start) > 1e-12 * scale) {
            throw InputError("chen_concat: intervals are not adjacent (" + std::to_string(a.end) + " vs " +
                             std::to_string(b.start) + ")");
        }
        return {concat_mul(a.sig, b.sig), a.start, b.end};
    }

    Eigen::MatrixXd levy_area(const PiecewiseLinearPath& path) {
        const int d = path.dimension();
        const auto sig = signature(path, 2).sig;
        const auto level2 = sig.degree(2);
        Eigen::MatrixXd area = Eigen::MatrixXd::Zero(d, d);
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                const double a = 0.5 * (level2[static_cast<std::size_t>(i * d + j)] -
                                        level2[static_cast<std::size_t>(j * d + i)]);
                area(i, j) = a;
                area(j, i) = -a;
            }
        }
        return area;
    }

}  // namespace roughsig
