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
// Raw time series and tick data, and their piecewise-linear embeddings.

#ifndef ROUGHSIG_STREAM_HPP
#define ROUGHSIG_STREAM_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace roughsig {

    // Strictly increasing times t_1 < ... < t_T, each with one optional value per channel.
    struct Stream {
        std::vector<double> times;
        std::vector<std::vector<std::optional<double>>> values;

        std::size_t channels() const { return values.empty() ? 0 : values.front().size(); }
        std::size_t length() const { return times.size(); }
    };

    struct TableFormat {
        char delimiter{','};
        bool header{false};
    };

    // First column time, remaining columns channels, empty cell = missing.
    Stream parse_table(std::string_view text, const TableFormat& format = {});

    /* Ordered vertices (u_j, p_j) of a continuous piecewise-linear path in R^d.
     * Parameters are strictly increasing; a single vertex is the constant path.
     */
    class PiecewiseLinearPath {
    public:
        // points holds times.size() * dimension coordinates, row-major.
        PiecewiseLinearPath(std::vector<double> times, std::vector<double> points, int dimension);

        // Convenience for tests and small fixtures: parameters 0, 1, 2, ...
        static PiecewiseLinearPath from_points(const std::vector<std::vector<double>>& points);

        int dimension() const { return dimension_; }
        std::size_t size() const { return times_.size(); }
        std::size_t segments() const { return times_.size() - 1; }

        std::span<const double> times() const { return times_; }
        std::span<const double> points() const { return points_; }
        double time(std::size_t j) const { return times_[j]; }
        std::span<const double> vertex(std::size_t j) const;

        double start() const { return times_.front(); }
        double end() const { return times_.back(); }

        // p_{j+1} - p_j
        std::vector<double> increment(std::size_t j) const;
        // Position at parameter u by linear interpolation; u must lie in [start, end].
        std::vector<double> at(double u) const;

    private:
        std::vector<double> times_;
        std::vector<double> points_;
        int dimension_;
    };

    enum class MissingPolicy { ForwardFill };

    struct EmbedOptions {
        MissingPolicy missing{MissingPolicy::ForwardFill};
        // Prepends time as channel 1.
        bool time_augment{false};
    };

    PiecewiseLinearPath embed_linear(const Stream& stream, const EmbedOptions& options = {});

    struct TickEvent {
        double time;
        int category;  // 1..C
    };

    // Time-stamped categorical events with non-decreasing times.
    struct TickTable {
        std::vector<std::string> labels;  // labels[c - 1] names category c
        std::vector<TickEvent> events;

        int categories() const { return static_cast<int>(labels.size()); }
    };

    /* Two columns: time, category label. With fixed_labels the category ids follow that list and
     * any other label is an error; otherwise ids are assigned in order of first appearance.
     */
    TickTable parse_ticks(std::string_view text, const TableFormat& format = {},
                          const std::vector<std::string>& fixed_labels = {});

    /* Cumulative per-category counts, starting at the origin. Event j becomes vertex j at parameter j,
     * so the path has one vertex more than there are events and ramps linearly between them.
     */
    PiecewiseLinearPath embed_counting(const TickTable& ticks);

    // Adds vertices at the given parameters by linear interpolation. Existing parameters are ignored.
    PiecewiseLinearPath insert_points(const PiecewiseLinearPath& path, std::span<const double> extra_times);

    // The restriction of the path to [s, t] (s <= t, both inside the span), with endpoint vertices.
    PiecewiseLinearPath restrict_to(const PiecewiseLinearPath& path, double s, double t);

    // Same parameters, vertices in reverse order.
    PiecewiseLinearPath reversed(const PiecewiseLinearPath& path);

    // Sum of Euclidean segment lengths.
    double total_variation(const PiecewiseLinearPath& path);

}  // namespace roughsig

#endif  // ROUGHSIG_STREAM_HPP
