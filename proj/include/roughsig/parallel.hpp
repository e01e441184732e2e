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
// Batch kernels over path collections.
//
// par:: runs independent items on OpenMP threads; serial:: is the plain loop kept as the reference
// the parallel versions are tested and benchmarked against. Every item is computed by the same
// single-path routine in both, so results are bitwise identical regardless of schedule.

#ifndef ROUGHSIG_PARALLEL_HPP
#define ROUGHSIG_PARALLEL_HPP

#include "roughsig/signature.hpp"
#include "roughsig/sigkernel.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace roughsig {
    namespace par {
        std::vector<SignatureResult> batch_signature(std::span<const PiecewiseLinearPath> paths, int depth);

        Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, std::span<const PiecewiseLinearPath> b,
                             const StaticKernel& kernel, int refine);
        Eigen::MatrixXd gram_symmetric(std::span<const PiecewiseLinearPath> a, const StaticKernel& kernel,
                                       int refine);

        int max_threads();
    }  // namespace par

    namespace serial {
        std::vector<SignatureResult> batch_signature(std::span<const PiecewiseLinearPath> paths, int depth);

        Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, std::span<const PiecewiseLinearPath> b,
                             const StaticKernel& kernel, int refine);
        Eigen::MatrixXd gram_symmetric(std::span<const PiecewiseLinearPath> a, const StaticKernel& kernel,
                                       int refine);
    }  // namespace serial
}  // namespace roughsig

#endif  // ROUGHSIG_PARALLEL_HPP
