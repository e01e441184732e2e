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
// Log-ODE solver for controlled differential equations dy = sum_i f_i(y) dX^i.

#ifndef ROUGHSIG_LOGODE_HPP
#define ROUGHSIG_LOGODE_HPP

#include "roughsig/lie_basis.hpp"
#include "roughsig/stream.hpp"

#include <Eigen/Core>

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace roughsig {

    enum class FieldKind { Linear, General };

    /* The driving vector fields f_0 .. f_{d-1} on R^v. Channel indices are 0-based here; channel c
     * is letter c + 1 in word strings.
     *
     * Linear fields are f_c(y) = A_c y. General fields are arbitrary callbacks, optionally with a
     * directional derivative jvp(c, y, h) = Df_c(y) h. Callbacks must be deterministic, and safe to
     * call concurrently if the caller runs several solves in parallel.
     */
    class VectorFieldSet {
    public:
        using Eval = std::function<void(int channel, std::span<const double> y, std::span<double> out)>;
        using Jvp = std::function<void(int channel, std::span<const double> y, std::span<const double> h,
                                       std::span<double> out)>;

        static VectorFieldSet linear(std::vector<Eigen::MatrixXd> matrices);
        static VectorFieldSet general(int state_dim, int channels, Eval eval, Jvp jvp = {});

        FieldKind kind() const { return kind_; }
        int state_dim() const { return state_dim_; }
        int channels() const { return channels_; }
        bool has_jvp() const { return static_cast<bool>(jvp_); }
        const std::vector<Eigen::MatrixXd>& matrices() const { return matrices_; }

        void eval(int channel, std::span<const double> y, std::span<double> out) const;
        // Df_c(y) h, from jvp when supplied and central differences otherwise.
        void directional(int channel, std::span<const double> y, std::span<const double> h,
                         std::span<double> out) const;

        // Longest bracket the frozen field can be built from: unbounded for linear fields,
        // 3 for general fields with jvp, 2 without.
        int max_bracket_depth() const;

    private:
        VectorFieldSet() = default;

        FieldKind kind_{FieldKind::Linear};
        int state_dim_{0};
        int channels_{0};
        std::vector<Eigen::MatrixXd> matrices_;
        Eval eval_;
        Jvp jvp_;
    };

    /* F(y) = sum_w c_w B_w(y), where B_w is the vector-field bracket of the f_i mirroring the
     * standard bracketing of the Lyndon word w, with
     *
     *     [f, g](y) = Dg(y) f(y) - Df(y) g(y).
     *
     * For linear fields this is the matrix M = sum_w c_w Phi(w) with Phi(i) = A_i and
     * Phi([u, v]) = Phi(v) Phi(u) - Phi(u) Phi(v).
     */
    class FrozenField {
    public:
        int state_dim() const { return state_dim_; }
        void operator()(std::span<const double> y, std::span<double> out) const;
        // Linear fields only.
        const Eigen::MatrixXd& matrix() const { return matrix_; }

    private:
        friend FrozenField frozen_field(const VectorFieldSet& vf, const LyndonCoordinates& logsig);

        void bracket(std::size_t entry, std::span<const double> y, std::span<double> out) const;
        void bracket_derivative(std::size_t entry, std::span<const double> y, std::span<const double> h,
                                std::span<double> out) const;

        int state_dim_{0};
        FieldKind kind_{FieldKind::Linear};
        Eigen::MatrixXd matrix_;
        std::shared_ptr<const VectorFieldSet> vf_;
        std::shared_ptr<const LyndonBasis> basis_;
        std::vector<std::pair<std::size_t, double>> terms_;
    };

    // Throws InputError when the log-signature is deeper than vf.max_bracket_depth().
    FrozenField frozen_field(const VectorFieldSet& vf, const LyndonCoordinates& logsig);

    struct LogOdeConfig {
        int depth{2};
        std::vector<double> partition;  // r_0 < ... < r_m inside the path span
        int substeps{8};
    };

    // r_0 = path start, r_m = path end, equal spacing.
    std::vector<double> uniform_partition(const PiecewiseLinearPath& path, int steps);

    /* Integrates the frozen field of the piece's depth-n log-signature over unit time with classical
     * RK4, which is the same as integrating dz/du = F(z) / (t - s) over [s, t].
     */
    std::vector<double> logode_step(const VectorFieldSet& vf, std::span<const double> z_s,
                                    const PiecewiseLinearPath& piece, int depth, int substeps = 8);

    struct Trajectory {
        std::vector<double> times;
        std::vector<std::vector<double>> states;
    };

    // Folds logode_step over the partition; states[0] == z0.
    Trajectory solve_cde(const VectorFieldSet& vf, const PiecewiseLinearPath& path, const LogOdeConfig& config,
                         std::span<const double> z0);

}  // namespace roughsig

#endif  // ROUGHSIG_LOGODE_HPP
