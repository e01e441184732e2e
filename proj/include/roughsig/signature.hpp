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
// Truncated signatures and log-signatures of piecewise-linear paths.

#ifndef ROUGHSIG_SIGNATURE_HPP
#define ROUGHSIG_SIGNATURE_HPP

#include "roughsig/lie_basis.hpp"
#include "roughsig/stream.hpp"
#include "roughsig/tensor_algebra.hpp"

#include <Eigen/Core>

namespace roughsig {

    struct SignatureResult {
        TruncatedTensor sig;
        double start;
        double end;
    };

    /* Product over segments of exp(increment_j), folded left to right:
     *
     *     S = exp(D_1) (x) exp(D_2) (x) ... (x) exp(D_m)
     *
     * which is exact for piecewise-linear paths. A single-vertex path gives the unit.
     */
    SignatureResult signature(const PiecewiseLinearPath& path, int depth);

    // tensor_to_coords(tensor_log(signature)). Reuses basis when its shape matches.
    LyndonCoordinates log_signature(const PiecewiseLinearPath& path, int depth);
    LyndonCoordinates log_signature(const PiecewiseLinearPath& path, std::shared_ptr<const LyndonBasis> basis);

    // a.sig (x) b.sig over the union of the intervals; a must end where b starts.
    SignatureResult chen_concat(const SignatureResult& a, const SignatureResult& b);

    // A(i, j) = (S_ij - S_ji) / 2 from the depth-2 signature. Exactly antisymmetric.
    Eigen::MatrixXd levy_area(const PiecewiseLinearPath& path);

}  // namespace roughsig

#endif  // ROUGHSIG_SIGNATURE_HPP
