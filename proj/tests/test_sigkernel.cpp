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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "roughsig/errors.hpp"
#include "roughsig/sigkernel.hpp"
#include "roughsig/signature.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <numeric>

using namespace roughsig;

namespace {

    double truncated_inner(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y, int depth) {
        const auto sx = signature(x, depth);
        const auto sy = signature(y, depth);
        const auto a = sx.sig.coeffs();
        const auto b = sy.sig.coeffs();
        return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
    }

    // Smooth curve of total variation below 1.
    PiecewiseLinearPath short_curve(double phase, double scale) {
        std::vector<std::vector<double>> pts;
        for (int k = 0; k <= 12; ++k) {
            const double t = k / 12.0;
            pts.push_back({scale * std::sin(2.0 * t + phase), scale * (t * t - 0.5 * t)});
        }
        return PiecewiseLinearPath::from_points(pts);
    }

}  // namespace

TEST(StaticKernel, Values) {
    const std::vector<double> x{1.0, 2.0};
    const std::vector<double> y{3.0, -1.0};
    EXPECT_EQ(StaticKernel::linear()(x, y), 1.0);
    EXPECT_NEAR(StaticKernel::rbf(2.0)(x, y), std::exp(-13.0 / 8.0), 1e-15);
    EXPECT_THROW(StaticKernel::rbf(0.0), InputError);
    EXPECT_THROW(StaticKernel::rbf(-1.0), InputError);
}

TEST(Goursat, BoundaryIsOne) {
    fixture::Rng rng(61);
    const auto x = fixture::random_path(rng, 2, 3);
    const auto y = fixture::random_path(rng, 2, 5);
    const auto grid = solve_goursat(x, y, StaticKernel::linear(), 2);
    EXPECT_EQ(grid.rows(), 13u);
    EXPECT_EQ(grid.cols(), 21u);
    for (std::size_t i = 0; i < grid.rows(); ++i) {
        EXPECT_EQ(grid(i, 0), 1.0);
    }
    for (std::size_t j = 0; j < grid.cols(); ++j) {
        EXPECT_EQ(grid(0, j), 1.0);
    }
    EXPECT_EQ(grid.corner(), sig_kernel(x, y, StaticKernel::linear(), 2));
}

TEST(Goursat, ConstantPathGivesOne) {
    fixture::Rng rng(62);
    const auto x = fixture::random_path(rng, 2, 4);
    const auto y = PiecewiseLinearPath::from_points({{0.3, 0.3}});
    EXPECT_EQ(sig_kernel(x, y, StaticKernel::linear(), 3), 1.0);
}

TEST(Goursat, OneDimensionalConvergence) {
    const auto x = PiecewiseLinearPath::from_points({{0.0}, {1.0}});
    const double exact = oracle::inverse_factorial_squares(20);
    EXPECT_NEAR(exact, 2.2795853, 1e-7);
    double previous = 1.0;
    for (int r = 2; r <= 6; ++r) {
        const double err = std::abs(sig_kernel(x, x, StaticKernel::linear(), r) - exact);
        EXPECT_LT(err, previous) << "refine " << r;
        previous = err;
    }
    EXPECT_LE(previous, 1e-3);
}

TEST(Goursat, MatchesTruncatedInnerProduct) {
    const auto x = short_curve(0.0, 0.3);
    const auto y = short_curve(1.0, 0.25);
    ASSERT_LE(total_variation(x), 1.0);
    ASSERT_LE(total_variation(y), 1.0);
    const double reference = truncated_inner(x, y, 10);
    double previous = 1.0;
    for (int r = 3; r <= 7; ++r) {
        const double gap = std::abs(sig_kernel(x, y, StaticKernel::linear(), r) - reference);
        EXPECT_LE(gap, previous) << "refine " << r;
        previous = gap;
    }
    EXPECT_LE(previous, 1e-4);
}

TEST(Goursat, Symmetric) {
    fixture::Rng rng(63);
    for (int trial = 0; trial < 10; ++trial) {
        const auto x = fixture::random_path(rng, 3, fixture::uniform_int(rng, 1, 6));
        const auto y = fixture::random_path(rng, 3, fixture::uniform_int(rng, 1, 6));
        for (const auto& k : {StaticKernel::linear(), StaticKernel::rbf(0.7)}) {
            EXPECT_NEAR(sig_kernel(x, y, k, 3), sig_kernel(y, x, k, 3), 1e-12);
        }
    }
}

TEST(Goursat, Errors) {
    const auto x = PiecewiseLinearPath::from_points({{0.0}, {1.0}});
    const auto y = PiecewiseLinearPath::from_points({{0.0, 0.0}, {1.0, 1.0}});
    EXPECT_THROW(sig_kernel(x, y, StaticKernel::linear(), 2), InputError);
    EXPECT_THROW(sig_kernel(x, x, StaticKernel::linear(), -1), InputError);
    EXPECT_THROW(sig_kernel(x, x, StaticKernel::linear(), 21), InputError);
}

TEST(Gram, SinglePairAndSymmetry) {
    fixture::Rng rng(64);
    std::vector<PiecewiseLinearPath> paths;
    for (int i = 0; i < 4; ++i) {
        paths.push_back(fixture::random_path(rng, 2, 3));
    }
    const auto k = StaticKernel::rbf(1.5);
    const auto one = gram(std::span(paths).first(1), std::span(paths).subspan(1, 1), k, 3);
    ASSERT_EQ(one.rows(), 1);
    EXPECT_EQ(one(0, 0), sig_kernel(paths[0], paths[1], k, 3));
    const auto g = gram(paths, k, 3);
    EXPECT_LE((g - g.transpose()).cwiseAbs().maxCoeff(), 1e-12);
    const auto full = gram(paths, paths, k, 3);
    EXPECT_LE((g - full).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Gram, PositiveSemidefinite) {
    fixture::Rng rng(65);
    std::vector<PiecewiseLinearPath> paths;
    for (int i = 0; i < 5; ++i) {
        paths.push_back(fixture::random_path(rng, 2, 4));
    }
    const auto g = gram(paths, StaticKernel::linear(), 4);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
    EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-8);
    const auto check = check_psd(g);
    EXPECT_EQ(check.status, PsdStatus::Ok);
    EXPECT_NEAR(check.min_eigenvalue, eig.eigenvalues().minCoeff(), 1e-12);
}

TEST(Gram, PsdCheckFlagsAndRejects) {
    Eigen::MatrixXd g(2, 2);
    g << 1.0, 1.0 + 1e-7, 1.0 + 1e-7, 1.0;
    EXPECT_EQ(check_psd(g).status, PsdStatus::Flagged);
    g << 1.0, 2.0, 2.0, 1.0;
    EXPECT_THROW(check_psd(g), NumericalError);
}

TEST(Mmd, IdenticalSamplesGiveZero) {
    fixture::Rng rng(66);
    const auto x = fixture::random_path(rng, 2, 5);
    const std::vector<PiecewiseLinearPath> p{x, x};
    EXPECT_NEAR(mmd2_unbiased(p, p, StaticKernel::linear(), 3), 0.0, 1e-10);
}

TEST(Mmd, SymmetricAndPermutationInvariant) {
    fixture::Rng rng(67);
    std::vector<PiecewiseLinearPath> p;
    std::vector<PiecewiseLinearPath> q;
    for (int i = 0; i < 4; ++i) {
        p.push_back(fixture::random_path(rng, 2, 3));
        q.push_back(fixture::random_path(rng, 2, 4));
    }
    const auto k = StaticKernel::rbf(1.0);
    const double base = mmd2_unbiased(p, q, k, 3);
    EXPECT_NEAR(mmd2_unbiased(q, p, k, 3), base, 1e-12);
    std::reverse(p.begin(), p.end());
    std::swap(q[0], q[2]);
    EXPECT_NEAR(mmd2_unbiased(p, q, k, 3), base, 1e-12);
}

TEST(Mmd, MatchesThreeSumFormula) {
    fixture::Rng rng(68);
    std::vector<PiecewiseLinearPath> p;
    std::vector<PiecewiseLinearPath> q;
    for (int i = 0; i < 3; ++i) {
        p.push_back(fixture::random_path(rng, 2, 2));
    }
    for (int i = 0; i < 4; ++i) {
        q.push_back(fixture::random_path(rng, 2, 3));
    }
    const auto k = StaticKernel::linear();
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) {
            xx += i == j ? 0.0 : sig_kernel(p[i], p[j], k, 3);
        }
        for (const auto& b : q) {
            xy += sig_kernel(p[i], b, k, 3);
        }
    }
    for (std::size_t i = 0; i < q.size(); ++i) {
        for (std::size_t j = 0; j < q.size(); ++j) {
            yy += i == j ? 0.0 : sig_kernel(q[i], q[j], k, 3);
        }
    }
    const double expected = xx / 6.0 - 2.0 * xy / 12.0 + yy / 12.0;
    EXPECT_NEAR(mmd2_unbiased(p, q, k, 3), expected, 1e-10);
}

TEST(Mmd, NeedsTwoPerSample) {
    const auto x = PiecewiseLinearPath::from_points({{0.0}, {1.0}});
    const std::vector<PiecewiseLinearPath> one{x};
    const std::vector<PiecewiseLinearPath> two{x, x};
    EXPECT_THROW(mmd2_unbiased(one, two, StaticKernel::linear(), 1), InputError);
    EXPECT_THROW(mmd2_unbiased(two, one, StaticKernel::linear(), 1), InputError);
}
