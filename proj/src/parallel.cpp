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

#include <omp.h>

#include <exception>
#include <optional>

namespace roughsig {
    namespace {

        // Exceptions may not cross an OpenMP region boundary; keep the first one and rethrow after.
        class FirstError {
        public:
            template <class F>
            void run(F&& f) {
                try {
                    f();
                } catch (...) {
#pragma omp critical(roughsig_first_error)
                    {
                        if (!error_) {
                            error_ = std::current_exception();
                        }
                    }
                }
            }

            void rethrow() const {
                if (error_) {
                    std::rethrow_exception(error_);
                }
            }

        private:
            std::exception_ptr error_;
        };

        void require_nonempty(std::size_t a, std::size_t b) {
            if (a == 0 || b == 0) {
                throw InputError("Gram matrix needs nonempty path collections");
            }
        }

    }  // namespace

    namespace par {

        int max_threads() { return omp_get_max_threads(); }

        std::vector<SignatureResult> batch_signature(std::span<const PiecewiseLinearPath> paths, int depth) {
            std::vector<std::optional<SignatureResult>> slots(paths.size());
            FirstError errors;
            const auto n = static_cast<std::ptrdiff_t>(paths.size());
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                errors.run([&] { slots[static_cast<std::size_t>(i)] = signature(paths[static_cast<std::size_t>(i)], depth); });
            }
            errors.rethrow();
            std::vector<SignatureResult> out;
            out.reserve(slots.size());
            for (auto& s : slots) {
                out.push_back(std::move(*s));
            }
            return out;
        }

        Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, std::span<const PiecewiseLinearPath> b,
                             const StaticKernel& kernel, int refine) {
            require_nonempty(a.size(), b.size());
            const auto rows = static_cast<std::ptrdiff_t>(a.size());
            const auto cols = static_cast<std::ptrdiff_t>(b.size());
            Eigen::MatrixXd g(rows, cols);
            FirstError errors;
#pragma omp parallel for collapse(2) schedule(dynamic)
            for (std::ptrdiff_t i = 0; i < rows; ++i) {
                for (std::ptrdiff_t j = 0; j < cols; ++j) {
                    errors.run([&] {
                        g(i, j) = sig_kernel(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(j)], kernel,
                                             refine);
                    });
                }
            }
            errors.rethrow();
            return g;
        }

        Eigen::MatrixXd gram_symmetric(std::span<const PiecewiseLinearPath> a, const StaticKernel& kernel,
                                       int refine) {
            require_nonempty(a.size(), a.size());
            const auto n = static_cast<std::ptrdiff_t>(a.size());
            // flatten the upper triangle so the schedule balances across rows
            std::vector<std::pair<std::ptrdiff_t, std::ptrdiff_t>> pairs;
            pairs.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
            for (std::ptrdiff_t i = 0; i < n; ++i) {
                for (std::ptrdiff_t j = i; j < n; ++j) {
                    pairs.emplace_back(i, j);
                }
            }
            Eigen::MatrixXd g(n, n);
            FirstError errors;
            const auto count = static_cast<std::ptrdiff_t>(pairs.size());
#pragma omp parallel for schedule(dynamic)
            for (std::ptrdiff_t k = 0; k < count; ++k) {
                errors.run([&] {
                    const auto [i, j] = pairs[static_cast<std::size_t>(k)];
                    const double v =
                        sig_kernel(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)], kernel, refine);
                    g(i, j) = v;
                    g(j, i) = v;
                });
            }
            errors.rethrow();
            return g;
        }

    }  // namespace par

    namespace serial {

        std::vector<SignatureResult> batch_signature(std::span<const PiecewiseLinearPath> paths, int depth) {
            std::vector<SignatureResult> out;
            out.reserve(paths.size());
            for (const auto& p : paths) {
                out.push_back(signature(p, depth));
            }
            return out;
        }

        Eigen::MatrixXd gram(std::span<const PiecewiseLinearPath> a, std::span<const PiecewiseLinearPath> b,
                             const StaticKernel& kernel, int refine) {
            require_nonempty(a.size(), b.size());
            Eigen::MatrixXd g(static_cast<Eigen::Index>(a.size()), static_cast<Eigen::Index>(b.size()));
            for (std::size_t i = 0; i < a.size(); ++i) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    g(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                        sig_kernel(a[i], b[j], kernel, refine);
                }
            }
            return g;
        }

        Eigen::MatrixXd gram_symmetric(std::span<const PiecewiseLinearPath> a, const StaticKernel& kernel,
                                       int refine) {
            require_nonempty(a.size(), a.size());
            const auto n = static_cast<Eigen::Index>(a.size());
            Eigen::MatrixXd g(n, n);
            for (Eigen::Index i = 0; i < n; ++i) {
                for (Eigen::Index j = i; j < n; ++j) {
                    const double v =
                        sig_kernel(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)], kernel, refine);
                    g(i, j) = v;
                    g(j, i) = v;
                }
            }
            return g;
        }

    }  // namespace serial
}  // namespace roughsig
