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
// Seeded generators and small conversions shared by the test binaries.

#ifndef ROUGHSIG_TESTS_FIXTURES_HPP
#define ROUGHSIG_TESTS_FIXTURES_HPP

#include "oracles.hpp"
#include "roughsig/stream.hpp"
#include "roughsig/tensor_algebra.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace fixture {

    using Rng = std::mt19937_64;

    inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    inline int uniform_int(Rng& rng, int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    // Vertices at parameters 0..segments with uniform(-1, 1) increments.
    inline std::vector<std::vector<double>> random_vertices(Rng& rng, int dim, int segments) {
        std::vector<std::vector<double>> pts(static_cast<std::size_t>(segments + 1),
                                             std::vector<double>(static_cast<std::size_t>(dim), 0.0));
        for (int c = 0; c < dim; ++c) {
            pts[0][c] = uniform(rng);
        }
        for (int j = 1; j <= segments; ++j) {
            for (int c = 0; c < dim; ++c) {
                pts[j][c] = pts[j - 1][c] + uniform(rng);
            }
        }
        return pts;
    }

    inline roughsig::PiecewiseLinearPath random_path(Rng& rng, int dim, int segments) {
        return roughsig::PiecewiseLinearPath::from_points(random_vertices(rng, dim, segments));
    }

    // Random coefficients on every word; eps set to eps_value.
    inline roughsig::TruncatedTensor random_tensor(Rng& rng, const roughsig::AlgebraShape& shape,
                                                   double eps_value) {
        std::vector<double> c(static_cast<std::size_t>(roughsig::dim(shape)));
        for (auto& x : c) {
            x = uniform(rng);
        }
        c[0] = eps_value;
        return roughsig::TruncatedTensor::from_coeffs(shape, std::move(c));
    }

    inline oracle::Series to_series(const roughsig::TruncatedTensor& t) {
        oracle::Series s;
        for (std::int64_t i = 0; i < t.size(); ++i) {
            s[roughsig::word_at(t.shape(), i)] = t[i];
        }
        return s;
    }

    // Largest |t_w - s_w| over the words of t; words absent from s count as 0.
    inline double max_diff(const roughsig::TruncatedTensor& t, const oracle::Series& s) {
        double worst = 0.0;
        for (std::int64_t i = 0; i < t.size(); ++i) {
            const auto it = s.find(roughsig::word_at(t.shape(), i));
            const double expected = it == s.end() ? 0.0 : it->second;
            worst = std::max(worst, std::abs(t[i] - expected));
        }
        return worst;
    }

    // (cos, sin) at equally spaced angles including both ends of [0, 2 pi * turns].
    inline std::vector<std::vector<double>> circle(int samples, double radius = 1.0, double turns = 1.0) {
        std::vector<std::vector<double>> pts;
        for (int k = 0; k < samples; ++k) {
            const double theta = 2.0 * std::numbers::pi * turns * k / (samples - 1);
            pts.push_back({radius * std::cos(theta), radius * std::sin(theta)});
        }
        return pts;
    }

}  // namespace fixture

#endif  // ROUGHSIG_TESTS_FIXTURES_HPP
