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
#include "roughsig/errors.hpp"
#include "roughsig/signature.hpp"
#include "roughsig/stream.hpp"

#include <gtest/gtest.h>

using namespace roughsig;

namespace {

    ParseIssue issue_of(std::string_view text, const TableFormat& format = {}) {
        try {
            parse_table(text, format);
        } catch (const ParseError& e) {
            return e.issue;
        }
        ADD_FAILURE() << "no ParseError for: " << text;
        return ParseIssue::Empty;
    }

    long row_of(std::string_view text) {
        try {
            parse_table(text);
        } catch (const ParseError& e) {
            return e.row;
        }
        return -1;
    }

    std::vector<double> vertex(const PiecewiseLinearPath& p, std::size_t j) {
        const auto v = p.vertex(j);
        return {v.begin(), v.end()};
    }

}  // namespace

TEST(ParseTable, Basic) {
    const auto s = parse_table("0,1.0\n1,2.0");
    ASSERT_EQ(s.length(), 2u);
    ASSERT_EQ(s.channels(), 1u);
    EXPECT_EQ(s.times, (std::vector<double>{0.0, 1.0}));
    EXPECT_EQ(*s.values[1][0], 2.0);
}

TEST(ParseTable, MissingCell) {
    const auto s = parse_table("0,\n1,2.0");
    ASSERT_EQ(s.length(), 2u);
    EXPECT_FALSE(s.values[0][0].has_value());
    EXPECT_EQ(*s.values[1][0], 2.0);
}

TEST(ParseTable, HeaderTabsAndBlankLines) {
    const auto s = parse_table("t\tx\ty\n\n0\t1\t2\n\n1\t3\t4\n", {'\t', true});
    ASSERT_EQ(s.length(), 2u);
    ASSERT_EQ(s.channels(), 2u);
    EXPECT_EQ(*s.values[1][1], 4.0);
}

TEST(ParseTable, DistinctErrors) {
    EXPECT_EQ(issue_of("0,1.0\n0,2.0"), ParseIssue::DuplicateTime);
    EXPECT_EQ(row_of("0,1.0\n0,2.0"), 2);
    EXPECT_EQ(issue_of("1,1.0\n0,2.0"), ParseIssue::DecreasingTime);
    EXPECT_EQ(issue_of("0,abc"), ParseIssue::NonNumeric);
    EXPECT_EQ(issue_of("0,nan"), ParseIssue::NonFinite);
    EXPECT_EQ(issue_of("0,inf"), ParseIssue::NonFinite);
    EXPECT_EQ(issue_of("0,1,2\n1,3"), ParseIssue::Ragged);
    EXPECT_EQ(row_of("0,1,2\n\n1,3"), 3);
    EXPECT_EQ(issue_of(""), ParseIssue::Empty);
    EXPECT_EQ(issue_of("\n\n"), ParseIssue::Empty);
    EXPECT_EQ(issue_of("0,1,\n1,2,"), ParseIssue::NoObservations);
}

TEST(EmbedLinear, FullyObservedIsLossless) {
    const auto s = parse_table("0,1,5\n0.5,2,6\n2,-3,7");
    const auto p = embed_linear(s);
    ASSERT_EQ(p.size(), 3u);
    EXPECT_EQ(p.dimension(), 2);
    EXPECT_EQ(std::vector<double>(p.times().begin(), p.times().end()), s.times);
    for (std::size_t j = 0; j < 3; ++j) {
        EXPECT_EQ(vertex(p, j), (std::vector<double>{*s.values[j][0], *s.values[j][1]}));
    }
}

TEST(EmbedLinear, ForwardFill) {
    const auto p = embed_linear(parse_table("0,1\n1,\n2,3"));
    EXPECT_EQ(vertex(p, 1), (std::vector<double>{1.0}));
    EXPECT_EQ(vertex(p, 2), (std::vector<double>{3.0}));
}

TEST(EmbedLinear, LeadingGapIsBackFilled) {
    const auto p = embed_linear(parse_table("0,\n1,2"));
    EXPECT_EQ(vertex(p, 0), (std::vector<double>{2.0}));
    EXPECT_EQ(vertex(p, 1), (std::vector<double>{2.0}));
}

TEST(EmbedLinear, TimeAugmentationIsChannelOne) {
    const auto p = embed_linear(parse_table("0.5,1\n2,3"), {MissingPolicy::ForwardFill, true});
    ASSERT_EQ(p.dimension(), 2);
    EXPECT_EQ(vertex(p, 0), (std::vector<double>{0.5, 1.0}));
    EXPECT_EQ(vertex(p, 1), (std::vector<double>{2.0, 3.0}));
}

TEST(EmbedLinear, TimeOnlyNeedsAugmentation) {
    const auto s = parse_table("0\n1\n2");
    EXPECT_THROW(embed_linear(s), InputError);
    EXPECT_EQ(embed_linear(s, {MissingPolicy::ForwardFill, true}).dimension(), 1);
}

TEST(Path, Validation) {
    EXPECT_THROW(PiecewiseLinearPath({0.0, 0.0}, {1.0, 2.0}, 1), InputError);
    EXPECT_THROW(PiecewiseLinearPath({1.0, 0.0}, {1.0, 2.0}, 1), InputError);
    EXPECT_THROW(PiecewiseLinearPath({0.0, 1.0}, {1.0, 2.0, 3.0}, 1), InputError);
    EXPECT_THROW(PiecewiseLinearPath({0.0}, {1.0}, 0), InputError);
    EXPECT_THROW(PiecewiseLinearPath({0.0, 1.0}, {1.0, NAN}, 1), InputError);
    EXPECT_THROW(PiecewiseLinearPath({}, {}, 1), InputError);
}

TEST(Path, Interpolation) {
    const PiecewiseLinearPath p({0.0, 2.0, 3.0}, {0.0, 0.0, 2.0, 4.0, 2.0, 5.0}, 2);
    EXPECT_EQ(p.at(1.0), (std::vector<double>{1.0, 2.0}));
    EXPECT_EQ(p.at(2.5), (std::vector<double>{2.0, 4.5}));
    EXPECT_EQ(p.at(3.0), (std::vector<double>{2.0, 5.0}));
    EXPECT_THROW(p.at(3.5), InputError);
}

TEST(Ticks, CountingPath) {
    const auto ticks = parse_ticks("1,a\n2,b\n3,c");
    ASSERT_EQ(ticks.categories(), 3);
    const auto p = embed_counting(ticks);
    ASSERT_EQ(p.size(), 4u);
    EXPECT_EQ(vertex(p, 0), (std::vector<double>{0, 0, 0}));
    EXPECT_EQ(vertex(p, 1), (std::vector<double>{1, 0, 0}));
    EXPECT_EQ(vertex(p, 2), (std::vector<double>{1, 1, 0}));
    EXPECT_EQ(vertex(p, 3), (std::vector<double>{1, 1, 1}));
}

TEST(Ticks, FixedLabelsOrderCategories) {
    const std::vector<std::string> labels{"x", "y"};
    const auto ticks = parse_ticks("1,y\n2,x", {}, labels);
    const auto p = embed_counting(ticks);
    EXPECT_EQ(vertex(p, 0), (std::vector<double>{0, 0}));
    EXPECT_EQ(vertex(p, 1), (std::vector<double>{0, 1}));
    EXPECT_EQ(vertex(p, 2), (std::vector<double>{1, 1}));
}

TEST(Ticks, EmptyTableIsTheOrigin) {
    const std::vector<std::string> labels{"x", "y", "z"};
    const auto ticks = parse_ticks("", {}, labels);
    const auto p = embed_counting(ticks);
    ASSERT_EQ(p.size(), 1u);
    EXPECT_EQ(vertex(p, 0), (std::vector<double>{0, 0, 0}));
    EXPECT_EQ(max_abs_diff(signature(p, 3).sig, TruncatedTensor::unit({3, 3})), 0.0);
}

TEST(Ticks, Errors) {
    const std::vector<std::string> labels{"x"};
    try {
        parse_ticks("1,x\n2,q", {}, labels);
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.issue, ParseIssue::UnknownLabel);
        EXPECT_EQ(e.row, 2);
    }
    try {
        parse_ticks("2,x\n1,x");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.issue, ParseIssue::DecreasingTime);
    }
    EXPECT_NO_THROW(parse_ticks("1,x\n1,x"));
}

TEST(Ticks, CountingIsMonotoneAndCounts) {
    fixture::Rng rng(31);
    std::string text;
    std::vector<int> counts(4, 0);
    const std::vector<std::string> names{"a", "b", "c", "d"};
    for (int j = 0; j < 60; ++j) {
        const int c = fixture::uniform_int(rng, 0, 3);
        ++counts[c];
        text += std::to_string(j / 3) + "," + names[c] + "\n";
    }
    const auto p = embed_counting(parse_ticks(text, {}, names));
    for (std::size_t j = 1; j < p.size(); ++j) {
        for (int c = 0; c < 4; ++c) {
            EXPECT_GE(p.vertex(j)[c], p.vertex(j - 1)[c]);
        }
    }
    for (int c = 0; c < 4; ++c) {
        EXPECT_EQ(p.vertex(p.size() - 1)[c], counts[c]);
    }
}

TEST(InsertPoints, Midpoint) {
    const PiecewiseLinearPath p({0.0, 1.0}, {0.0, 0.0, 2.0, 2.0}, 2);
    const std::vector<double> extra{0.5};
    const auto q = insert_points(p, extra);
    ASSERT_EQ(q.size(), 3u);
    EXPECT_EQ(q.time(1), 0.5);
    EXPECT_EQ(vertex(q, 1), (std::vector<double>{1.0, 1.0}));
}

TEST(InsertPoints, ExistingTimeIsIgnored) {
    const PiecewiseLinearPath p({0.0, 1.0, 2.0}, {0.0, 1.0, 3.0}, 1);
    const std::vector<double> extra{1.0, 0.0};
    const auto q = insert_points(p, extra);
    EXPECT_EQ(q.size(), 3u);
    EXPECT_EQ(std::vector<double>(q.points().begin(), q.points().end()), (std::vector<double>{0.0, 1.0, 3.0}));
    const std::vector<double> outside{2.5};
    EXPECT_THROW(insert_points(p, outside), InputError);
}

TEST(InsertPoints, PreservesTotalVariationAndSignature) {
    fixture::Rng rng(32);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = fixture::random_path(rng, 3, 6);
        std::vector<double> extra;
        for (int k = 0; k < 25; ++k) {
            extra.push_back(fixture::uniform(rng, p.start(), p.end()));
        }
        const auto q = insert_points(p, extra);
        EXPECT_NEAR(total_variation(q), total_variation(p), 1e-12);
        EXPECT_LE(max_abs_diff(signature(q, 4).sig, signature(p, 4).sig), 1e-12);
    }
}

TEST(RestrictTo, Endpoints) {
    const PiecewiseLinearPath p({0.0, 1.0, 2.0}, {0.0, 2.0, 0.0}, 1);
    const auto q = restrict_to(p, 0.5, 1.5);
    EXPECT_EQ(q.start(), 0.5);
    EXPECT_EQ(q.end(), 1.5);
    EXPECT_EQ(std::vector<double>(q.points().begin(), q.points().end()), (std::vector<double>{1.0, 2.0, 1.0}));
    EXPECT_THROW(restrict_to(p, 1.5, 0.5), InputError);
}
