#include "tgf/trees.hpp"

#include <set>
#include <string>

#include "gtest/gtest.h"
#include "reference_table.hpp"

namespace tgf {
namespace {

TernaryTree left_chain(int n) {
    TernaryTree t;
    for (int i = 0; i < n; ++i) {
        t = TernaryTree(t, {}, {});
    }
    return t;
}

// 17 nodes, thick (middle) edges below the root, below its right
// child, and below the fourth node of the right spine.
TernaryTree seventeen_node_tree() {
    const TernaryTree leaf = TernaryTree::leaf();
    const TernaryTree spine4(left_chain(2), leaf, leaf);
    const TernaryTree spine3({}, {}, spine4);
    const TernaryTree spine2(left_chain(4), leaf, spine3);
    return {left_chain(3), leaf, spine2};
}

TEST(Trees, EnumerationCounts) {
    const long expected[] = {1, 1, 3, 12, 55, 273, 1428, 7752, 43263};
    for (long n = 0; n <= 8; ++n) {
        long count = 0;
        enumerate(n, [&](const TernaryTree& t) {
            ++count;
            ASSERT_EQ(t.node_count(), static_cast<std::size_t>(n));
        });
        EXPECT_EQ(count, expected[n]) << n;
        if (n >= 1) {
            EXPECT_EQ(BigInt(count), row_sum_closed(n));
        }
        EXPECT_EQ(BigInt(count), binomial(3 * n, n) / (2 * n + 1));
    }
}

TEST(Trees, EmptyTreeForZeroNodes) {
    const auto all = enumerate_all(0);
    ASSERT_EQ(all.size(), 1U);
    EXPECT_TRUE(all[0].empty());
    EXPECT_EQ(all[0].serialize(), ".");
}

TEST(Trees, NoDuplicates) {
    for (long n = 0; n <= 6; ++n) {
        std::set<std::string> seen;
        std::size_t count = 0;
        enumerate(n, [&](const TernaryTree& t) {
            seen.insert(t.serialize());
            ++count;
        });
        EXPECT_EQ(seen.size(), count) << n;
    }
}

TEST(Trees, MiddleEdges) {
    EXPECT_EQ(middle_edges(TernaryTree::leaf()), 0U);
    EXPECT_EQ(middle_edges(TernaryTree({}, TernaryTree::leaf(), {})), 1U);
    const TernaryTree fig = seventeen_node_tree();
    EXPECT_EQ(fig.node_count(), 17U);
    EXPECT_EQ(middle_edges(fig), 3U);
}

TEST(Trees, OracleReproducesReferenceTable) {
    const Triangle tri = triangle_oracle(6);
    const auto& rows = testing::reference_table();
    for (long n = 0; n <= 6; ++n) {
        for (long k = 0; k < static_cast<long>(rows[n].size()); ++k) {
            EXPECT_EQ(tri.at(n, k), rows[n][k]) << n << "," << k;
        }
    }
    EXPECT_EQ(tri.at(2, 1), 1);
}

TEST(Trees, OracleMatchesClosedFormThroughEight) {
    EXPECT_EQ(triangle_oracle(8), triangle_closed(8));
}

TEST(Trees, OracleBoundEnforced) {
    EXPECT_THROW(triangle_oracle(11), UsageError);
    EXPECT_THROW(triangle_oracle(5, 4), UsageError);
    try {
        (void)triangle_oracle(11);
    } catch (const UsageError& e) {
        EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
    }
}

TEST(Trees, SerializationRoundTrip) {
    enumerate(5, [](const TernaryTree& t) {
        const std::string s = t.serialize();
        ASSERT_EQ(parse_tree(s).serialize(), s);
        ASSERT_EQ(s.size(), 3 * t.node_count() + 1);
    });
    EXPECT_EQ(parse_tree(" N . N . . . . ").serialize(), "N.N....");
}

TEST(Trees, ParseErrorsReportPosition) {
    const auto position_of = [](const std::string& text) -> long {
        try {
            (void)parse_tree(text);
        } catch (const TreeParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    EXPECT_EQ(position_of("N..x"), 3);
    EXPECT_EQ(position_of("N.."), 3);
    EXPECT_EQ(position_of("N...."), 4);
    EXPECT_EQ(position_of(""), 0);
    EXPECT_EQ(position_of("."), -1);
}

TEST(Trees, DotOutput) {
    EXPECT_EQ(to_dot(TernaryTree()), "digraph ternary_tree {\n}\n");
    const std::string one = to_dot(TernaryTree::leaf());
    EXPECT_NE(one.find("n0;"), std::string::npos);
    EXPECT_EQ(one.find("->"), std::string::npos);
    const std::string mid = to_dot(TernaryTree({}, TernaryTree::leaf(), {}));
    EXPECT_NE(mid.find("n0 -> n1 [label=\"middle\""), std::string::npos);
    const std::string fig = to_dot(seventeen_node_tree());
    std::size_t arrows = 0;
    std::size_t middles = 0;
    for (std::size_t p = fig.find("->"); p != std::string::npos; p = fig.find("->", p + 1)) {
        ++arrows;
    }
    for (std::size_t p = fig.find("\"middle\""); p != std::string::npos;
         p = fig.find("\"middle\"", p + 1)) {
        ++middles;
    }
    EXPECT_EQ(arrows, 16U);
    EXPECT_EQ(middles, 3U);
}

}  // namespace
}  // namespace tgf
