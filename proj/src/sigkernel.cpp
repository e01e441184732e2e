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
#include "roughsig/parallel.hpp"
#include "roughsig/sigkernel.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace roughsig {

    StaticKernel StaticKernel::rbf(double sigma) {
        if (!std::isfinite(sigma) || !(sigma > 0.0)) {
            throw InputError("RBF bandwidth must be finite and positive, got " + std::to_string(sigma));
        }
        return {StaticKernelKind::Rbf, sigma};
    }

    double StaticKernel::operator()(std::span<const double> x, std::span<const double> y) const {
        double acc = 0.0;
        if (kind == StaticKernelKind::Linear) {
            for (std::size_t i = 0; i < x.size(); ++i) {
                acc += x[i] * y[i];
            }
            return acc;
        }
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double diff = x[i] - y[i];
            acc += diff * diff;
        }
        return std::exp(-acc / (2.0 * sigma * sigma));
    }

    namespace {

        // Vertices of the dyadically refined path, row-major.
        std::vector<double> refined_vertices(const PiecewiseLinearPath& path, int refine) {
            const auto d = static_cast<std::size_t>(path.dimension());
            const std::size_t pieces = std::size_t{1} << refine;
            std::vector<double> out(path.vertex(0).begin(), path.vertex(0).end());
            out.reserve(((path.size() - 1) * pieces + 1) * d);
            for (std::size_t j = 0; j + 1 < path.size(); ++j) {
                const auto a = path.vertex(j);
                const auto b = path.vertex(j + 1);
                for (std::size_t s = 1; s <= pieces; ++s) {
                    const double lambda = static_cast<double>(s) / static_cast<double>(pieces);
                    for (std::size_t c = 0; c < d; ++c) {
                        out.push_back(s == pieces ? b[c] : a[c] + lambda * (b[c] - a[c]));
                    }
                }
            }
            return out;
        }

        void check_inputs(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y, int refine) {
            if (x.dimension() != y.dimension()) {
                throw InputError("signature kernel needs paths of equal dimension, got " +
                                 std::to_string(x.dimension()) + " and " + std::to_string(y.dimension()));
            }
            if (refine < 0 || refine > 20) {
                throw InputError("refine level must be in 0..20, got " + std::to_string(refine));
            }
        }

        /* Row-by-row sweep of the scheme. sink(i, row) receives every completed row U(i, .),
         * starting with the boundary row i = 0.
         */
        template <class Sink>
        void sweep(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y, const StaticKernel& kernel, int refine,
                   Sink&& sink) {
            check_inputs(x, y, refine);
            const auto d = static_cast<std::size_t>(x.dimension());
            const auto xs = refined_vertices(x, refine);
            const auto ys = refined_vertices(y, refine);
            const std::size_t rows = xs.size() / d;
            const std::size_t cols = ys.size() / d;
            auto xv = [&](std::size_t i) { return std::span<const double>(xs).subspan(i * d, d); };
            auto yv = [&](std::size_t j) { return std::span<const double>(ys).subspan(j * d, d); };

            std::vector<double> prev(cols, 1.0);
            std::vector<double> cur(cols, 1.0);
            sink(std::size_t{0}, std::span<const double>(prev));

            // Linear: increments of y, reused for every row.
            std::vector<double> dy;
            // Rbf: kernel values against y for the current row's lower and upper x vertices.
            std::vector<double> k_lo, k_hi;
            std::vector<double> dx(d);
            if (kernel.kind == StaticKernelKind::Linear) {
                dy.resize((cols - 1) * d);
                for (std::size_t j = 0; j + 1 < cols; ++j) {
                    for (std::size_t c = 0; c < d; ++c) {
                        dy[j * d + c] = ys[(j + 1) * d + c] - ys[j * d + c];
                    }
                }
            } else {
                k_lo.resize(cols);
                k_hi.resize(cols);
                for (std::size_t j = 0; j < cols; ++j) {
                    k_lo[j] = kernel(xv(0), yv(j));
                }
            }

            for (std::size_t i = 0; i + 1 < rows; ++i) {
                if (kernel.kind == StaticKernelKind::Linear) {
                    for (std::size_t c = 0; c < d; ++c) {
                        dx[c] = xs[(i + 1) * d + c] - xs[i * d + c];
                    }
                } else {
                    for (std::size_t j = 0; j < cols; ++j) {
                        k_hi[j] = kernel(xv(i + 1), yv(j));
                    }
                }
                cur[0] = 1.0;
                for (std::size_t j = 0; j + 1 < cols; ++j) {
                    double a = 0.0;
                    if (kernel.kind == StaticKernelKind::Linear) {
                        for (std::size_t c = 0; c < d; ++c) {
                            a += dx[c] * dy[j * d + c];
                        }
                    } else {
                        a = k_hi[j + 1] - k_hi[j] - k_lo[j + 1] + k_lo[j];
                    }
                    cur[j + 1] = cur[j] + prev[j + 1] - prev[j] + 0.5 * a * (cur[j] + prev[j + 1]);
                }
                if (!std::isfinite(cur.back())) {
                    throw NumericalError("signature kernel grid overflowed at row " + std::to_string(i + 1));
                }
                sink(i + 1, std::span<const double>(cur));
                prev.swap(cur);
                if (kernel.kind == StaticKernelKind::Rbf) {
                    k_lo.swap(k_hi);
                }
            }
        }

    }  // namespace

    KernelGrid solve_goursat(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y, const StaticKernel& kernel,
                             int refine) {
        check_inputs(x, y, refine);
        const std::size_t pieces = std::size_t{1} << refine;
        KernelGrid grid((x.size() - 1) * pieces + 1, (y.size() - 1) * pieces + 1);
        sweep(x, y, kernel, refine, [&](std::size_t i, std::span<const double> row) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                grid(i, j) = row[j];
            }
        });
        return grid;
    }

    double sig_kernel(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y, const StaticKernel& kernel,
                      int refine) {
        double corner = 1.0;
        sweep(x, y, kernel, refine, [&](std::size_t, std::span<const double> row) { corner = row.back(); });
        return corner;
    }

    Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, std::span<const PiecewiseLinearPath> b,
                         const StaticKernel& kernel, int refine) {
        return par::gram(a, b, kernel, refine);
    }

    Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, const StaticKernel& kernel, int refine) {
        return par::gram_symmetric(a, kernel, refine);
    }

    PsdCheck check_psd(const Eigen::MatrixXd& g) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw NumericalError("eigenvalue solve of the Gram matrix failed");
        }
        const double lowest = solver.eigenvalues().minCoeff();
        if (lowest < -1e-6) {
            throw NumericalError("Gram matrix is not positive semidefinite: min eigenvalue " +
                                 std::to_string(lowest));
        }
        return {lowest, lowest < -1e-8 ? PsdStatus::Flagged : PsdStatus::Ok};
    }

    double mmd2_from_gram(const Eigen::MatrixXd& kxx, const Eigen::MatrixXd& kxy, const Eigen::MatrixXd& kyy) {
        const auto m = static_cast<double>(kxx.rows());
        const auto n = static_cast<double>(kyy.rows());
        if (m < 2 || n < 2) {
            throw InputError("unbiased MMD needs at least two samples on each side");
        }
        const double xx = (kxx.sum() - kxx.trace()) / (m * (m - 1));
        const double yy = (kyy.sum() - kyy.trace()) / (n * (n - 1));
        const double xy = 2.0 * kxy.sum() / (m * n);
        return xx - xy + yy;
    }

    double mmd2_unbiased(std::span<const PiecewiseLinearPath> p, std::span<const PiecewiseLinearPath> q,
                         const StaticKernel& kernel, int refine) {
        if (p.size() < 2 || q.size() < 2) {
            throw InputError("unbiased MMD needs at least two samples on each side, got " +
                             std::to_string(p.size()) + " and " + std::to_string(q.size()));
        }
        return mmd2_from_gram(gram(p, kernel, refine), gram(p, q, kernel, refine), gram(q, kernel, refine));
    }

}  // namespace roughsig
