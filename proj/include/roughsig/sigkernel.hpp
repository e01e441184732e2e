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
// Signature kernels from the Goursat PDE, Gram matrices and the unbiased MMD^2 statistic.

#ifndef ROUGHSIG_SIGKERNEL_HPP
#define ROUGHSIG_SIGKERNEL_HPP

#include "roughsig/stream.hpp"

#include <Eigen/Core>

#include <span>
#include <vector>

namespace roughsig {

    enum class StaticKernelKind { Linear, Rbf };

    struct StaticKernel {
        StaticKernelKind kind{StaticKernelKind::Linear};
        double sigma{1.0};

        static StaticKernel linear() { return {StaticKernelKind::Linear, 1.0}; }
        // Throws InputError unless sigma is finite and positive.
        static StaticKernel rbf(double sigma = 1.0);

        double operator()(std::span<const double> x, std::span<const double> y) const;
    };

    // (P+1) x (Q+1) solution grid; row 0 and column 0 are exactly 1.
    class KernelGrid {
    public:
        KernelGrid(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, values_(rows * cols, 1.0) {}

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        double operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }
        double& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
        double corner() const { return values_.back(); }

    private:
        std::size_t rows_;
        std::size_t cols_;
        std::vector<double> values_;
    };

    /* Explicit scheme on the grid of path vertices, each segment split into 2^refine pieces:
     *
     *     U(i+1, j+1) = U(i+1, j) + U(i, j+1) - U(i, j) + A(i, j) (U(i+1, j) + U(i, j+1)) / 2
     *
     * with A(i, j) the double increment of the static kernel over cell (i, j). For the linear kernel
     * that is <dX_i, dY_j>.
     */
    KernelGrid solve_goursat(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y, const StaticKernel& kernel,
                             int refine);

    // Corner value of solve_goursat, computed with a single rolling row.
    double sig_kernel(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y, const StaticKernel& kernel,
                      int refine);

    // G(a, b) = sig_kernel(A_a, B_b). Pairs are evaluated in parallel.
    Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, std::span<const PiecewiseLinearPath> b,
                         const StaticKernel& kernel, int refine);
    // Same collection on both sides: upper triangle computed and mirrored, so exactly symmetric.
    Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, const StaticKernel& kernel, int refine);

    enum class PsdStatus { Ok, Flagged };

    struct PsdCheck {
        double min_eigenvalue;
        PsdStatus status;
    };

    // Flags min eigenvalue below -1e-8; throws NumericalError below -1e-6.
    PsdCheck check_psd(const Eigen::MatrixXd& g);

    /*   1/(M(M-1)) sum_{i != j} k(X_i, X_j)
     * - 2/(MN)     sum_{i, j}   k(X_i, Y_j)
     * + 1/(N(N-1)) sum_{i != j} k(Y_i, Y_j)
     *
     * Needs M >= 2 and N >= 2.
     */
    double mmd2_unbiased(std::span<const PiecewiseLinearPath> p, std::span<const PiecewiseLinearPath> q,
                         const StaticKernel& kernel, int refine);

    // The same statistic from precomputed Gram blocks.
    double mmd2_from_gram(const Eigen::MatrixXd& kxx, const Eigen::MatrixXd& kxy, const Eigen::MatrixXd& kyy);

}  // namespace roughsig

#endif  // ROUGHSIG_SIGKERNEL_HPP
