#include "tgf/combinatorics.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "reference_table.hpp"

namespace tgf {
namespace {

// Pascal's rule, independent of the multiplicative formula under test.
std::vector<std::vector<BigInt>> pascal(long nmax) {
    std::vector<std::vector<BigInt>> rows(static_cast<std::size_t>(nmax) + 1);
    for (long n = 0; n <= nmax; ++n) {
        rows[n].assign(static_cast<std::size_t>(n) + 1, 1);
        for (long k = 1; k < n; ++k) {
            rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
    }
    return rows;
}

TEST(Binomial, SmallValues) {
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(4, 7), 0);
    EXPECT_EQ(binomial(12, 4), 495);
    EXPECT_EQ(binomial(0, 0), 1);
    EXPECT_EQ(binomial(3, -1), 0);
    EXPECT_THROW(binomial(-1, 0), UsageError);
}

TEST(Binomial, MatchesPascalTriangle) {
    const auto p = pascal(120);
    for (long n = 0; n <= 120; ++n) {
        for (long k = -1; k <= n + 1; ++k) {
            const BigInt expected = (k < 0 || k > n) ? BigInt(0) : p[n][k];
            ASSERT_EQ(binomial(n, k), expected) << n << "," << k;
        }
    }
}

TEST(TClosed, ReferenceTable) {
    const auto& rows = testing::reference_table();
    for (long n = 0; n < static_cast<long>(rows.size()); ++n) {
        for (long k = 0; k < static_cast<long>(rows[n].size()); ++k) {
            EXPECT_EQ(t_closed(n, k), rows[n][k]) << n << "," << k;
        }
    }
    EXPECT_EQ(t_closed(4, 1), 28);
    EXPECT_EQ(t_closed(6, 2), 550);
    EXPECT_EQ(t_closed(3, 3), 0);
    EXPECT_EQ(t_closed(0, 1), 0);
}

TEST(TClosed, EdgesOfTheTriangle) {
    for (long n = 1; n <= 60; ++n) {
        EXPECT_EQ(t_closed(n, n - 1), 1);
        for (long k = n; k <= n + 2; ++k) {
            EXPECT_EQ(t_closed(n, k), 0);
        }
        // Column 0 is Catalan.
        EXPECT_EQ(t_closed(n, 0), binomial(2 * n, n) / (n + 1));
    }
}

TEST(TClosed, DivisionByNIsExact) {
    for (long n = 1; n <= 150; ++n) {
        for (long k = 0; k <= n; ++k) {
            const BigInt product = binomial(n, k) * binomial(2 * n, n - 1 - k);
            EXPECT_EQ(product % n, 0);
        }
    }
}

TEST(FourBinomial, HandValues) {
    // 3 - 2 - 0
    EXPECT_EQ(four_binomial(1, 0), 1);
    EXPECT_EQ(four_binomial(4, 1), 28);
    EXPECT_EQ(four_binomial(5, 2), 90);
}

TEST(FourBinomial, SimplifiesToClosedForm) {
    for (long n = 1; n <= 200; ++n) {
        for (long k = 0; k <= n; ++k) {
            ASSERT_EQ(four_binomial(n, k), t_closed(n, k)) << n << "," << k;
        }
    }
}

TEST(RowSum, ReferenceValues) {
    EXPECT_EQ(row_sum_closed(1), 1);
    EXPECT_EQ(row_sum_closed(5), 273);
    EXPECT_EQ(row_sum_closed(6), 1428);
    EXPECT_THROW(row_sum_closed(0), UsageError);
}

TEST(RowSum, MatchesRowsUpTo200) {
    for (long n = 1; n <= 200; ++n) {
        BigInt sum = 0;
        for (long k = 0; k < n; ++k) {
            sum += t_closed(n, k);
        }
        ASSERT_EQ(sum, row_sum_closed(n)) << n;
        ASSERT_EQ(sum, binomial(3 * n, n) / (2 * n + 1)) << n;
    }
}

TEST(LagrangeCoeff, HandValues) {
    EXPECT_EQ(lagrange_tpow_coeff(1, 0, 1), Rat(1));
    EXPECT_EQ(lagrange_tpow_coeff(2, 1, 1), Rat(1));
    EXPECT_EQ(lagrange_tpow_coeff(3, 1, 1), Rat(4));
    EXPECT_EQ(lagrange_tpow_coeff(1, 0, 2), Rat(0));
    EXPECT_EQ(lagrange_tpow_coeff(3, 0, 3), Rat(1));
    EXPECT_THROW(lagrange_tpow_coeff(0, 0, 1), UsageError);
}

TEST(Triangle, ClosedTableShape) {
    const Triangle tri = triangle_closed(6);
    const auto& rows = testing::reference_table();
    for (long n = 0; n <= 6; ++n) {
        ASSERT_EQ(tri.row(n).size(), rows[n].size());
        for (long k = 0; k < static_cast<long>(rows[n].size()); ++k) {
            EXPECT_EQ(tri.at(n, k), rows[n][k]);
        }
    }
    EXPECT_EQ(triangle_closed(0).row(0), std::vector<BigInt>{1});
    EXPECT_EQ(triangle_closed(10).at(10, 9), 1);
    EXPECT_EQ(tri.value(3, 5), 0);
    EXPECT_THROW((void)tri.at(3, 3), UsageError);
    EXPECT_THROW(Triangle(-1), UsageError);
}

}  // namespace
}  // namespace tgf
