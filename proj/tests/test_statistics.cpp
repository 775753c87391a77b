#include "glq/statistics.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using glq::BigInt;
using glq::ReportKind;

namespace {

// #{mu : d | d_mu} from explicit big-integer degrees.
BigInt count_divisible_by_bigint(int n, std::int64_t q, std::int64_t d) {
    BigInt count = 0;
    for (const auto& p : glq::enumerate_profiles(n, q))
        if (glq::degree(p, q).d_mu % d == 0) count += glq::profile_multiplicity(p, q);
    return count;
}

}  // namespace

TEST(RenderDecimal, RoundsHalfToEven) {
    EXPECT_EQ(glq::render_decimal(1, 3), "0.333333");
    EXPECT_EQ(glq::render_decimal(2, 3), "0.666667");
    EXPECT_EQ(glq::render_decimal(3, 3), "1.000000");
    EXPECT_EQ(glq::render_decimal(0, 7), "0.000000");
    EXPECT_EQ(glq::render_decimal(1, 8, 2), "0.12");
    EXPECT_EQ(glq::render_decimal(3, 8, 2), "0.38");
    EXPECT_EQ(glq::render_decimal(1, 2, 0), "0");
    EXPECT_EQ(glq::render_decimal(3, 2, 0), "2");
    EXPECT_THROW(glq::render_decimal(1, 0), std::invalid_argument);
}

TEST(ReportKind, NamesRoundTrip) {
    for (ReportKind k : {ReportKind::DegreeDivisible, ReportKind::HelmetCertified, ReportKind::PDivisible})
        EXPECT_EQ(glq::parse_report_kind(glq::to_string(k)), k);
    EXPECT_FALSE(glq::parse_report_kind("degree").has_value());
}

TEST(DegreeDivisible, GL2OverF2) {
    const auto two = glq::proportion_degree_divisible(2, 2, 2);
    EXPECT_EQ(two.numerator, 1);
    EXPECT_EQ(two.denominator, 3);
    // Degrees of GL(2, 2) are 1, 1, 2: none is divisible by 3.
    const auto three = glq::proportion_degree_divisible(2, 2, 3);
    EXPECT_EQ(three.numerator, 0);
    EXPECT_EQ(three.denominator, 3);
    const auto one = glq::proportion_degree_divisible(2, 2, 1);
    EXPECT_EQ(one.numerator, one.denominator);
    EXPECT_THROW(glq::proportion_degree_divisible(0, 2, 2), std::invalid_argument);
    EXPECT_THROW(glq::proportion_degree_divisible(2, 6, 2), std::invalid_argument);
}

TEST(DegreeDivisible, MatchesBigIntegerDegrees) {
    for (std::int64_t q : {2, 3, 4, 5})
        for (int n = 1; n <= 5; ++n)
            for (std::int64_t d : {2, 3, 4, 5, 6, 7, 8, 9, 12}) {
                const auto r = glq::proportion_degree_divisible(n, q, d);
                EXPECT_EQ(r.numerator, count_divisible_by_bigint(n, q, d)) << n << " " << q << " " << d;
                EXPECT_EQ(r.denominator, glq::count_X(n, q));
                EXPECT_LE(r.numerator, r.denominator);
            }
}

TEST(PDivisible, VoltasIdentity) {
    const auto v = glq::voltas_exact_count(3, 2);
    EXPECT_EQ(v.count_not_p_divisible, 4);
    EXPECT_EQ(v.expected, 4);
    for (std::int64_t q : {2, 3, 4, 5, 7, 8, 9})
        for (int n = 1; n <= 6; ++n) {
            EXPECT_NO_THROW(glq::voltas_exact_count(n, q));
            const auto r = glq::proportion_p_divisible(glq::LabelSpace(n, q));
            EXPECT_EQ(r.kind, ReportKind::PDivisible);
            EXPECT_EQ(r.d, glq::require_prime_power(q).p);
            EXPECT_EQ(r.denominator - r.numerator, glq::voltas_exact_count(n, q).expected);
            EXPECT_TRUE(r.at_most(1, q)) << n << " " << q;
            EXPECT_TRUE(glq::voltas_bound_check(n, q, glq::require_prime_power(q).p));
        }
    EXPECT_THROW(glq::voltas_bound_check(3, 3, 2), std::invalid_argument);
}

TEST(HelmetCertified, CountsCertifiedLabels) {
    for (std::int64_t q : {2, 3, 5})
        for (std::int64_t d : {2, 3, 4, 5})
            for (int n = 1; n <= 5; ++n)
                for (std::int64_t n0 = 1; n0 <= n; ++n0) {
                    if (glq::gcd_i64(d, q) != 1) {
                        EXPECT_THROW(glq::proportion_helmet_certified(n, q, d, n0), std::invalid_argument);
                        continue;
                    }
                    BigInt expected = 0;
                    for (const auto& l : glq::enumerate_labels(n, q))
                        if (glq::helmet_certificate(l, q, d, n0)) expected += 1;
                    const auto r = glq::proportion_helmet_certified(n, q, d, n0);
                    EXPECT_EQ(r.numerator, expected);
                    EXPECT_EQ(r.n0, n0);
                    // A certified label has d | d_mu (the identity element lies in every block).
                    EXPECT_LE(r.numerator, glq::proportion_degree_divisible(n, q, d).numerator);
                }
    EXPECT_THROW(glq::proportion_helmet_certified(3, 3, 2, 4), std::invalid_argument);
}

TEST(Sweep, RowOrderAndAutoKinds) {
    glq::SweepGrid grid;
    grid.q_list = {3, 2};
    grid.d_list = {2};
    grid.n_list = {3, 1, 2};
    grid.n0_list = {1};
    const auto table = glq::sweep(grid, 1);
    ASSERT_TRUE(table.errors.empty());
    ASSERT_EQ(table.rows.size(), 6U);
    EXPECT_EQ(table.rows[0].q, 2);
    EXPECT_EQ(table.rows[0].kind, ReportKind::DegreeDivisible);
    EXPECT_EQ(table.rows[0].n0, 0);
    EXPECT_EQ(table.rows[1].n, 2);
    EXPECT_EQ(table.rows[1].numerator, 1);
    EXPECT_EQ(table.rows[3].q, 3);
    EXPECT_EQ(table.rows[3].kind, ReportKind::HelmetCertified);
    for (std::size_t i = 1; i < 3; ++i) EXPECT_LT(table.rows[i - 1].n, table.rows[i].n);
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
    glq::SweepGrid grid;
    grid.q_list = {2, 3, 4, 5};
    grid.d_list = {2, 3, 5};
    grid.n_list = {1, 2, 3, 4, 5};
    grid.n0_list = {1, 2};
    grid.kinds = {ReportKind::DegreeDivisible, ReportKind::HelmetCertified, ReportKind::PDivisible};
    const auto serial = glq::sweep(grid, 1);
    for (unsigned threads : {2U, 3U, 8U}) EXPECT_EQ(glq::sweep(grid, threads), serial);
    EXPECT_FALSE(serial.errors.empty());  // helmet cells with gcd(d, q) > 1, n0 > n
    for (const auto& row : serial.rows) {
        if (row.kind != ReportKind::HelmetCertified) continue;
        EXPECT_EQ(row, glq::proportion_helmet_certified(row.n, row.q, row.d, row.n0));
    }
}

TEST(Sweep, BadCellsBecomeErrors) {
    glq::SweepGrid grid;
    grid.q_list = {6, 3};
    grid.d_list = {2};
    grid.n_list = {2};
    grid.n0_list = {1, 3};
    const auto table = glq::sweep(grid, 2);
    ASSERT_EQ(table.rows.size(), 1U);
    EXPECT_EQ(table.rows[0].q, 3);
    EXPECT_EQ(table.rows[0].n0, 1);
    ASSERT_EQ(table.errors.size(), 2U);
    EXPECT_EQ(table.errors[0].q, 3);
    EXPECT_EQ(table.errors[0].n0, 3);
    EXPECT_EQ(table.errors[1].q, 6);
}

TEST(ParallelFor, PropagatesFirstException) {
    EXPECT_THROW(glq::detail::parallel_for(100, 4,
                                           [](std::size_t i) {
                                               if (i == 37) throw std::runtime_error("boom");
                                           }),
                 std::runtime_error);
}
