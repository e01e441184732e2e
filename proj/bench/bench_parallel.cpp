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
// Wall-clock comparison of the serial reference loops and the OpenMP kernels.
//
//   bench_parallel [paths=48] [points=64] [refine=3] [depth=5]

#include "roughsig/parallel.hpp"

#include <omp.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>

namespace {
    using namespace roughsig;

    std::vector<PiecewiseLinearPath> random_walks(int count, int points, int dim, unsigned seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> step(0.0, 1.0 / std::sqrt(points));
        std::vector<PiecewiseLinearPath> out;
        for (int p = 0; p < count; ++p) {
            std::vector<std::vector<double>> pts(static_cast<std::size_t>(points), std::vector<double>(dim, 0.0));
            for (int i = 1; i < points; ++i) {
                for (int c = 0; c < dim; ++c) {
                    pts[i][c] = pts[i - 1][c] + step(rng);
                }
            }
            out.push_back(PiecewiseLinearPath::from_points(pts));
        }
        return out;
    }

    template <class F>
    double best_of(int repeats, F&& f) {
        double best = 1e300;
        for (int r = 0; r < repeats; ++r) {
            const double t0 = omp_get_wtime();
            f();
            best = std::min(best, omp_get_wtime() - t0);
        }
        return best;
    }

    int arg(int argc, char** argv, int i, int fallback) {
        return argc > i ? std::atoi(argv[i]) : fallback;
    }
}  // namespace

int main(int argc, char** argv) {
    const int count = arg(argc, argv, 1, 48);
    const int points = arg(argc, argv, 2, 64);
    const int refine = arg(argc, argv, 3, 3);
    const int depth = arg(argc, argv, 4, 5);
    const auto paths = random_walks(count, points, 3, 7);
    const auto kernel = StaticKernel::linear();

    std::printf("threads=%d paths=%d points=%d refine=%d depth=%d\n", par::max_threads(), count, points, refine,
                depth);

    Eigen::MatrixXd gs;
    Eigen::MatrixXd gp;
    const double t_gs = best_of(3, [&] { gs = serial::gram_symmetric(paths, kernel, refine); });
    const double t_gp = best_of(3, [&] { gp = par::gram_symmetric(paths, kernel, refine); });
    std::printf("gram       serial %9.4fs  parallel %9.4fs  speedup %5.2fx  max|diff| %.3g\n", t_gs, t_gp,
                t_gs / t_gp, (gs - gp).cwiseAbs().maxCoeff());

    std::vector<SignatureResult> ss;
    std::vector<SignatureResult> sp;
    const double t_ss = best_of(3, [&] { ss = serial::batch_signature(paths, depth); });
    const double t_sp = best_of(3, [&] { sp = par::batch_signature(paths, depth); });
    double diff = 0.0;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        diff = std::max(diff, max_abs_diff(ss[i].sig, sp[i].sig));
    }
    std::printf("signatures serial %9.4fs  parallel %9.4fs  speedup %5.2fx  max|diff| %.3g\n", t_ss, t_sp,
                t_ss / t_sp, diff);
    return 0;
}
