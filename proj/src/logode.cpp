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
#include "roughsig/logode.hpp"
#include "roughsig/signature.hpp"

#include <climits>
#include <cmath>

namespace roughsig {
    namespace {

        double norm(std::span<const double> x) {
            double sq = 0.0;
            for (double v : x) {
                sq += v * v;
            }
            return std::sqrt(sq);
        }

        // Central difference of g along h with step 1e-5 (1 + |y|) measured in the direction of h.
        template <class Field>
        void central_difference(const Field& g, std::span<const double> y, std::span<const double> h,
                                std::span<double> out) {
            const double length = norm(h);
            if (length == 0.0) {
                std::fill(out.begin(), out.end(), 0.0);
                return;
            }
            const double step = 1e-5 * (1.0 + norm(y)) / length;
            std::vector<double> plus(y.begin(), y.end());
            std::vector<double> minus(y.begin(), y.end());
            for (std::size_t i = 0; i < y.size(); ++i) {
                plus[i] += step * h[i];
                minus[i] -= step * h[i];
            }
            std::vector<double> f_plus(out.size());
            std::vector<double> f_minus(out.size());
            g(plus, f_plus);
            g(minus, f_minus);
            for (std::size_t i = 0; i < out.size(); ++i) {
                out[i] = (f_plus[i] - f_minus[i]) / (2.0 * step);
            }
        }

        bool all_finite(std::span<const double> x) {
            for (double v : x) {
                if (!std::isfinite(v)) {
                    return false;
                }
            }
            return true;
        }

    }  // namespace

    VectorFieldSet VectorFieldSet::linear(std::vector<Eigen::MatrixXd> matrices) {
        if (matrices.empty()) {
            throw InputError("linear vector field set needs at least one matrix");
        }
        const auto v = matrices.front().rows();
        for (std::size_t i = 0; i < matrices.size(); ++i) {
            const auto& a = matrices[i];
            if (a.rows() != v || a.cols() != v || v < 1) {
                throw InputError("matrix " + std::to_string(i + 1) + " must be " + std::to_string(v) + "x" +
                                 std::to_string(v));
            }
            if (!a.allFinite()) {
                throw InputError("matrix " + std::to_string(i + 1) + " has a non-finite entry");
            }
        }
        VectorFieldSet vf;
        vf.kind_ = FieldKind::Linear;
        vf.state_dim_ = static_cast<int>(v);
        vf.channels_ = static_cast<int>(matrices.size());
        vf.matrices_ = std::move(matrices);
        return vf;
    }

    VectorFieldSet VectorFieldSet::general(int state_dim, int channels, Eval eval, Jvp jvp) {
        if (state_dim < 1 || channels < 1) {
            throw InputError("vector field set needs state_dim >= 1 and channels >= 1");
        }
        if (!eval) {
            throw InputError("general vector field set needs an eval callback");
        }
        VectorFieldSet vf;
        vf.kind_ = FieldKind::General;
        vf.state_dim_ = state_dim;
        vf.channels_ = channels;
        vf.eval_ = std::move(eval);
        vf.jvp_ = std::move(jvp);
        return vf;
    }

    void VectorFieldSet::eval(int channel, std::span<const double> y, std::span<double> out) const {
        if (kind_ == FieldKind::Linear) {
            Eigen::Map<const Eigen::VectorXd> in(y.data(), state_dim_);
            Eigen::Map<Eigen::VectorXd>(out.data(), state_dim_).noalias() =
                matrices_[static_cast<std::size_t>(channel)] * in;
            return;
        }
        eval_(channel, y, out);
    }

    void VectorFieldSet::directional(int channel, std::span<const double> y, std::span<const double> h,
                                     std::span<double> out) const {
        if (kind_ == FieldKind::Linear) {
            eval(channel, h, out);
            return;
        }
        if (jvp_) {
            jvp_(channel, y, h, out);
            return;
        }
        central_difference([&](std::span<const double> p, std::span<double> o) { eval_(channel, p, o); }, y, h,
                           out);
    }

    int VectorFieldSet::max_bracket_depth() const {
        if (kind_ == FieldKind::Linear) {
            return INT_MAX;
        }
        return jvp_ ? 3 : 2;
    }

    FrozenField frozen_field(const VectorFieldSet& vf, const LyndonCoordinates& logsig) {
        const auto& basis = *logsig.basis;
        if (basis.shape().width != vf.channels()) {
            throw InputError("log-signature has " + std::to_string(basis.shape().width) +
                             " channels but the vector field set has " + std::to_string(vf.channels()));
        }
        if (logsig.coords.size() != basis.size()) {
            throw InputError("log-signature coordinate count does not match its basis");
        }
        if (basis.shape().depth > vf.max_bracket_depth()) {
            throw InputError("log-signature depth " + std::to_string(basis.shape().depth) +
                             " exceeds the bracket depth limit of " + std::to_string(vf.max_bracket_depth()) +
                             " for general vector fields" + (vf.has_jvp() ? "" : " without jvp"));
        }

        FrozenField field;
        field.state_dim_ = vf.state_dim();
        field.kind_ = vf.kind();
        if (vf.kind() == FieldKind::Linear) {
            const auto v = vf.state_dim();
            std::vector<Eigen::MatrixXd> phi;
            phi.reserve(basis.size());
            field.matrix_ = Eigen::MatrixXd::Zero(v, v);
            for (std::size_t i = 0; i < basis.size(); ++i) {
                const auto& entry = basis[i];
                if (entry.letters.size() == 1) {
                    phi.push_back(vf.matrices()[static_cast<std::size_t>(entry.letters[0] - 1)]);
                } else {
                    const auto& u = phi[static_cast<std::size_t>(entry.left)];
                    const auto& w = phi[static_cast<std::size_t>(entry.right)];
                    phi.push_back(w * u - u * w);
                }
                field.matrix_ += logsig.coords[i] * phi.back();
            }
            return field;
        }

        field.vf_ = std::make_shared<const VectorFieldSet>(vf);
        field.basis_ = logsig.basis;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (logsig.coords[i] != 0.0) {
                field.terms_.emplace_back(i, logsig.coords[i]);
            }
        }
        return field;
    }

    void FrozenField::operator()(std::span<const double> y, std::span<double> out) const {
        if (kind_ == FieldKind::Linear) {
            Eigen::Map<const Eigen::VectorXd> in(y.data(), state_dim_);
            Eigen::Map<Eigen::VectorXd>(out.data(), state_dim_).noalias() = matrix_ * in;
            return;
        }
        std::fill(out.begin(), out.end(), 0.0);
        std::vector<double> term(static_cast<std::size_t>(state_dim_));
        for (const auto& [entry, coeff] : terms_) {
            bracket(entry, y, term);
            for (std::size_t i = 0; i < term.size(); ++i) {
                out[i] += coeff * term[i];
            }
        }
    }

    void FrozenField::bracket(std::size_t entry, std::span<const double> y, std::span<double> out) const {
        const auto& e = (*basis_)[entry];
        if (e.letters.size() == 1) {
            vf_->eval(e.letters[0] - 1, y, out);
            return;
        }
        // [f, g](y) = Dg(y) f(y) - Df(y) g(y)
        const auto n = static_cast<std::size_t>(state_dim_);
        std::vector<double> f(n), g(n), dg_f(n), df_g(n);
        const auto left = static_cast<std::size_t>(e.left);
        const auto right = static_cast<std::size_t>(e.right);
        bracket(left, y, f);
        bracket(right, y, g);
        bracket_derivative(right, y, f, dg_f);
        bracket_derivative(left, y, g, df_g);
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = dg_f[i] - df_g[i];
        }
    }

    void FrozenField::bracket_derivative(std::size_t entry, std::span<const double> y, std::span<const double> h,
                                         std::span<double> out) const {
        const auto& e = (*basis_)[entry];
        if (e.letters.size() == 1) {
            vf_->directional(e.letters[0] - 1, y, h, out);
            return;
        }
        central_difference([&](std::span<const double> p, std::span<double> o) { bracket(entry, p, o); }, y, h,
                           out);
    }

    std::vector<double> uniform_partition(const PiecewiseLinearPath& path, int steps) {
        if (steps < 1) {
            throw InputError("partition needs at least one step");
        }
        if (path.size() < 2) {
            throw InputError("cannot partition a single-vertex path");
        }
        std::vector<double> out(static_cast<std::size_t>(steps) + 1);
        const double s = path.start();
        const double t = path.end();
        for (int i = 0; i <= steps; ++i) {
            out[static_cast<std::size_t>(i)] = s + (t - s) * i / steps;
        }
        out.back() = t;
        return out;
    }

    namespace {

        std::vector<double> integrate_unit_time(const FrozenField& field, std::span<const double> z_s, int substeps) {
            const auto n = z_s.size();
            std::vector<double> z(z_s.begin(), z_s.end());
            std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
            const double h = 1.0 / substeps;
            for (int s = 0; s < substeps; ++s) {
                field(z, k1);
                for (std::size_t i = 0; i < n; ++i) {
                    tmp[i] = z[i] + 0.5 * h * k1[i];
                }
                field(tmp, k2);
                for (std::size_t i = 0; i < n; ++i) {
                    tmp[i] = z[i] + 0.5 * h * k2[i];
                }
                field(tmp, k3);
                for (std::size_t i = 0; i < n; ++i) {
                    tmp[i] = z[i] + h * k3[i];
                }
                field(tmp, k4);
                for (std::size_t i = 0; i < n; ++i) {
                    z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
                }
                if (!all_finite(z)) {
                    throw NumericalError("non-finite state at RK4 substep " + std::to_string(s));
                }
            }
            return z;
        }

        std::vector<double> step_with_basis(const VectorFieldSet& vf, std::span<const double> z_s,
                                            const PiecewiseLinearPath& piece,
                                            const std::shared_ptr<const LyndonBasis>& basis, int substeps) {
            if (static_cast<int>(z_s.size()) != vf.state_dim()) {
                throw InputError("state has " + std::to_string(z_s.size()) + " entries, expected " +
                                 std::to_string(vf.state_dim()));
            }
            if (piece.dimension() != vf.channels()) {
                throw InputError("control path has " + std::to_string(piece.dimension()) +
                                 " channels but the vector field set has " + std::to_string(vf.channels()));
            }
            if (substeps < 1) {
                throw InputError("substeps must be >= 1");
            }
            const auto logsig = log_signature(piece, basis);
            const auto field = frozen_field(vf, logsig);
            return integrate_unit_time(field, z_s, substeps);
        }

    }  // namespace

    std::vector<double> logode_step(const VectorFieldSet& vf, std::span<const double> z_s,
                                    const PiecewiseLinearPath& piece, int depth, int substeps) {
        if (depth < 1) {
            throw InputError("log-ODE depth must be >= 1");
        }
        return step_with_basis(vf, z_s, piece, build_basis({piece.dimension(), depth}), substeps);
    }

    Trajectory solve_cde(const VectorFieldSet& vf, const PiecewiseLinearPath& path, const LogOdeConfig& config,
                         std::span<const double> z0) {
        if (config.depth < 1) {
            throw InputError("log-ODE depth must be >= 1");
        }
        const auto& r = config.partition;
        if (r.size() < 2) {
            throw InputError("partition needs at least two points");
        }
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (!(r[i] >= path.start() && r[i] <= path.end())) {
                throw InputError("partition point " + std::to_string(i) + " lies outside the path span");
            }
            if (i > 0 && !(r[i] > r[i - 1])) {
                throw InputError("partition must be strictly increasing (point " + std::to_string(i) + ")");
            }
        }
        if (!all_finite(z0)) {
            throw InputError("initial state has a non-finite entry");
        }
        const AlgebraShape shape{path.dimension(), config.depth};
        if (vf.kind() == FieldKind::General && config.depth > vf.max_bracket_depth()) {
            throw InputError("log-ODE depth " + std::to_string(config.depth) + " exceeds the bracket depth limit of " +
                             std::to_string(vf.max_bracket_depth()) + " for general vector fields" +
                             (vf.has_jvp() ? "" : " without jvp"));
        }
        const auto basis = build_basis(shape);

        Trajectory out;
        out.times = r;
        out.states.emplace_back(z0.begin(), z0.end());
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            const auto piece = restrict_to(path, r[i], r[i + 1]);
            try {
                out.states.push_back(step_with_basis(vf, out.states.back(), piece, basis, config.substeps));
            } catch (const NumericalError& e) {
                throw NumericalError("log-ODE step " + std::to_string(i) + ": " + e.what());
            }
        }
        return out;
    }

}  // namespace roughsig
