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
#include "roughsig/stream.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

namespace roughsig {
    namespace {

        struct Line {
            long row;
            std::string_view text;
        };

        std::string_view trim(std::string_view s) {
            while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
                s.remove_prefix(1);
            }
            while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
                s.remove_suffix(1);
            }
            return s;
        }

        // Non-blank lines, header dropped.
        std::vector<Line> data_lines(std::string_view text, const TableFormat& format) {
            std::vector<Line> out;
            long row = 0;
            bool header_pending = format.header;
            while (!text.empty()) {
                const auto nl = text.find('\n');
                auto line = text.substr(0, nl);
                text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
                ++row;
                if (!line.empty() && line.back() == '\r') {
                    line.remove_suffix(1);
                }
                if (trim(line).empty()) {
                    continue;
                }
                if (header_pending) {
                    header_pending = false;
                    continue;
                }
                out.push_back({row, line});
            }
            return out;
        }

        std::vector<std::string_view> split(std::string_view line, char delimiter) {
            std::vector<std::string_view> cells;
            while (true) {
                const auto pos = line.find(delimiter);
                cells.push_back(trim(line.substr(0, pos)));
                if (pos == std::string_view::npos) {
                    break;
                }
                line.remove_prefix(pos + 1);
            }
            return cells;
        }

        double parse_number(std::string_view cell, long row, const char* what) {
            double value = 0.0;
            const char* first = cell.data();
            const char* last = cell.data() + cell.size();
            if (first != last && *first == '+') {
                ++first;
            }
            auto [ptr, ec] = std::from_chars(first, last, value);
            if (ec != std::errc{} || ptr != last || cell.empty()) {
                throw ParseError(ParseIssue::NonNumeric,
                                 std::string(what) + " \"" + std::string(cell) + "\" is not a number", row);
            }
            if (!std::isfinite(value)) {
                throw ParseError(ParseIssue::NonFinite, std::string(what) + " is not finite", row);
            }
            return value;
        }

        void check_time_order(double previous, double current, long row) {
            if (current == previous) {
                throw ParseError(ParseIssue::DuplicateTime, "duplicate timestamp", row);
            }
            if (current < previous) {
                throw ParseError(ParseIssue::DecreasingTime, "timestamp goes backwards", row);
            }
        }

    }  // namespace

    Stream parse_table(std::string_view text, const TableFormat& format) {
        const auto lines = data_lines(text, format);
        if (lines.empty()) {
            throw ParseError(ParseIssue::Empty, "table has no data rows", 1);
        }
        Stream stream;
        std::size_t columns = 0;
        std::vector<bool> observed;
        for (const auto& [row, line] : lines) {
            const auto cells = split(line, format.delimiter);
            if (columns == 0) {
                columns = cells.size();
                observed.assign(columns - 1, false);
            } else if (cells.size() != columns) {
                throw ParseError(ParseIssue::Ragged,
                                 "expected " + std::to_string(columns) + " columns, found " +
                                     std::to_string(cells.size()),
                                 row);
            }
            const double t = parse_number(cells[0], row, "time");
            if (!stream.times.empty()) {
                check_time_order(stream.times.back(), t, row);
            }
            std::vector<std::optional<double>> values(columns - 1);
            for (std::size_t c = 1; c < columns; ++c) {
                if (!cells[c].empty()) {
                    values[c - 1] = parse_number(cells[c], row, "value");
                    observed[c - 1] = true;
                }
            }
            stream.times.push_back(t);
            stream.values.push_back(std::move(values));
        }
        for (std::size_t c = 0; c < observed.size(); ++c) {
            if (!observed[c]) {
                throw ParseError(ParseIssue::NoObservations,
                                 "channel " + std::to_string(c + 1) + " has no observed values",
                                 lines.back().row);
            }
        }
        return stream;
    }

    PiecewiseLinearPath::PiecewiseLinearPath(std::vector<double> times, std::vector<double> points, int dimension)
        : times_{std::move(times)}, points_{std::move(points)}, dimension_{dimension} {
        if (dimension_ < 1) {
            throw InputError("path dimension must be >= 1");
        }
        if (times_.empty()) {
            throw InputError("path needs at least one vertex");
        }
        if (points_.size() != times_.size() * static_cast<std::size_t>(dimension_)) {
            throw InputError("path has " + std::to_string(times_.size()) + " parameters but " +
                             std::to_string(points_.size()) + " coordinates for dimension " +
                             std::to_string(dimension_));
        }
        for (std::size_t j = 0; j < times_.size(); ++j) {
            if (!std::isfinite(times_[j])) {
                throw InputError("path parameter " + std::to_string(j) + " is not finite");
            }
            if (j > 0 && !(times_[j] > times_[j - 1])) {
                throw InputError("path parameters must be strictly increasing (vertex " + std::to_string(j) + ")");
            }
        }
        for (double p : points_) {
            if (!std::isfinite(p)) {
                throw InputError("path has a non-finite coordinate");
            }
        }
    }

    PiecewiseLinearPath PiecewiseLinearPath::from_points(const std::vector<std::vector<double>>& points) {
        if (points.empty()) {
            throw InputError("path needs at least one vertex");
        }
        const auto dimension = points.front().size();
        std::vector<double> times;
        std::vector<double> flat;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (points[j].size() != dimension) {
                throw InputError("vertex " + std::to_string(j) + " has the wrong dimension");
            }
            times.push_back(static_cast<double>(j));
            flat.insert(flat.end(), points[j].begin(), points[j].end());
        }
        return PiecewiseLinearPath(std::move(times), std::move(flat), static_cast<int>(dimension));
    }

    std::span<const double> PiecewiseLinearPath::vertex(std::size_t j) const {
        return std::span<const double>(points_).subspan(j * static_cast<std::size_t>(dimension_),
                                                        static_cast<std::size_t>(dimension_));
    }

    std::vector<double> PiecewiseLinearPath::increment(std::size_t j) const {
        const auto a = vertex(j);
        const auto b = vertex(j + 1);
        std::vector<double> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = b[i] - a[i];
        }
        return out;
    }

    std::vector<double> PiecewiseLinearPath::at(double u) const {
        if (!(u >= start() && u <= end())) {
            throw InputError("parameter " + std::to_string(u) + " outside the path span [" +
                             std::to_string(start()) + ", " + std::to_string(end()) + "]");
        }
        const auto it = std::lower_bound(times_.begin(), times_.end(), u);
        const auto j = static_cast<std::size_t>(it - times_.begin());
        if (times_[j] == u) {
            const auto v = vertex(j);
            return {v.begin(), v.end()};
        }
        const double lambda = (u - times_[j - 1]) / (times_[j] - times_[j - 1]);
        const auto a = vertex(j - 1);
        const auto b = vertex(j);
        std::vector<double> out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = a[i] + lambda * (b[i] - a[i]);
        }
        return out;
    }

    PiecewiseLinearPath embed_linear(const Stream& stream, const EmbedOptions& options) {
        if (stream.times.empty()) {
            throw InputError("stream has no observations");
        }
        const std::size_t channels = stream.channels();
        const std::size_t width = channels + (options.time_augment ? 1 : 0);
        if (width == 0) {
            throw InputError("stream has no channels; enable time augmentation to embed timestamps alone");
        }
        const std::size_t length = stream.length();

        std::vector<double> points(length * width, 0.0);
        const std::size_t first_channel = options.time_augment ? 1 : 0;
        for (std::size_t j = 0; j < length; ++j) {
            if (stream.values[j].size() != channels) {
                throw InputError("stream record " + std::to_string(j) + " has the wrong channel count");
            }
            if (options.time_augment) {
                points[j * width] = stream.times[j];
            }
        }
        for (std::size_t c = 0; c < channels; ++c) {
            std::optional<double> first;
            for (std::size_t j = 0; j < length && !first; ++j) {
                first = stream.values[j][c];
            }
            if (!first) {
                throw InputError("channel " + std::to_string(c + 1) + " has no observed values");
            }
            // forward fill, leading gap back-filled from the first observation
            double held = *first;
            for (std::size_t j = 0; j < length; ++j) {
                if (stream.values[j][c]) {
                    held = *stream.values[j][c];
                }
                points[j * width + first_channel + c] = held;
            }
        }
        return PiecewiseLinearPath(stream.times, std::move(points), static_cast<int>(width));
    }

    TickTable parse_ticks(std::string_view text, const TableFormat& format,
                          const std::vector<std::string>& fixed_labels) {
        TickTable table;
        table.labels = fixed_labels;
        for (const auto& [row, line] : data_lines(text, format)) {
            const auto cells = split(line, format.delimiter);
            if (cells.size() != 2) {
                throw ParseError(ParseIssue::Ragged,
                                 "tick rows need 2 columns (time, label), found " + std::to_string(cells.size()),
                                 row);
            }
            const double t = parse_number(cells[0], row, "time");
            if (!table.events.empty() && t < table.events.back().time) {
                throw ParseError(ParseIssue::DecreasingTime, "timestamp goes backwards", row);
            }
            const std::string label(cells[1]);
            auto it = std::find(table.labels.begin(), table.labels.end(), label);
            if (it == table.labels.end()) {
                if (!fixed_labels.empty() || label.empty()) {
                    throw ParseError(ParseIssue::UnknownLabel, "unknown category label \"" + label + "\"", row);
                }
                table.labels.push_back(label);
                it = table.labels.end() - 1;
            }
            table.events.push_back({t, static_cast<int>(it - table.labels.begin()) + 1});
        }
        return table;
    }

    PiecewiseLinearPath embed_counting(const TickTable& ticks) {
        const int categories = ticks.categories();
        if (categories < 1) {
            throw InputError("tick table has no categories");
        }
        const auto width = static_cast<std::size_t>(categories);
        std::vector<double> times{0.0};
        std::vector<double> points(width, 0.0);
        std::vector<double> counts(width, 0.0);
        double previous = -INFINITY;
        for (std::size_t j = 0; j < ticks.events.size(); ++j) {
            const auto& event = ticks.events[j];
            if (event.category < 1 || event.category > categories) {
                throw InputError("tick " + std::to_string(j) + " has category " + std::to_string(event.category) +
                                 " outside 1.." + std::to_string(categories));
            }
            if (event.time < previous) {
                throw InputError("tick times must be non-decreasing (tick " + std::to_string(j) + ")");
            }
            previous = event.time;
            counts[static_cast<std::size_t>(event.category - 1)] += 1.0;
            times.push_back(static_cast<double>(j + 1));
            points.insert(points.end(), counts.begin(), counts.end());
        }
        return PiecewiseLinearPath(std::move(times), std::move(points), categories);
    }

    PiecewiseLinearPath insert_points(const PiecewiseLinearPath& path, std::span<const double> extra_times) {
        std::vector<double> merged(path.times().begin(), path.times().end());
        for (double u : extra_times) {
            if (!(u >= path.start() && u <= path.end())) {
                throw InputError("insert time " + std::to_string(u) + " lies outside the path span");
            }
            merged.push_back(u);
        }
        std::sort(merged.begin(), merged.end());
        merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

        std::vector<double> points;
        points.reserve(merged.size() * static_cast<std::size_t>(path.dimension()));
        for (double u : merged) {
            const auto p = path.at(u);
            points.insert(points.end(), p.begin(), p.end());
        }
        return PiecewiseLinearPath(std::move(merged), std::move(points), path.dimension());
    }

    PiecewiseLinearPath restrict_to(const PiecewiseLinearPath& path, double s, double t) {
        if (!(s <= t)) {
            throw InputError("restriction interval is reversed");
        }
        std::vector<double> times{s};
        auto start = path.at(s);
        std::vector<double> points(start.begin(), start.end());
        for (std::size_t j = 0; j < path.size(); ++j) {
            const double u = path.time(j);
            if (u > s && u < t) {
                times.push_back(u);
                const auto v = path.vertex(j);
                points.insert(points.end(), v.begin(), v.end());
            }
        }
        if (t > s) {
            times.push_back(t);
            const auto end = path.at(t);
            points.insert(points.end(), end.begin(), end.end());
        }
        return PiecewiseLinearPath(std::move(times), std::move(points), path.dimension());
    }

    PiecewiseLinearPath reversed(const PiecewiseLinearPath& path) {
        std::vector<double> points;
        points.reserve(path.points().size());
        for (std::size_t j = path.size(); j-- > 0;) {
            const auto v = path.vertex(j);
            points.insert(points.end(), v.begin(), v.end());
        }
        return PiecewiseLinearPath(std::vector<double>(path.times().begin(), path.times().end()), std::move(points),
                                   path.dimension());
    }

    double total_variation(const PiecewiseLinearPath& path) {
        double total = 0.0;
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            double sq = 0.0;
            for (double x : path.increment(j)) {
                sq += x * x;
            }
            total += std::sqrt(sq);
        }
        return total;
    }

}  // namespace roughsig
