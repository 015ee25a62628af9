#include <gtest/gtest.h>

#include "volrig/errors.hpp"
#include "volrig/linalg.hpp"

using namespace volrig;

namespace {

RationalMatrix from_rows(std::vector<std::vector<long>> rows)
{
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST(Rational, ParsesFractionsAndIntegers)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_THROW(parse_rational("5/-10"), Error);
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
    EXPECT_THROW(parse_rational(" 1/2"), Error);
}

TEST(Rational, PrintsLowestTermsWithDenominator)
{
    EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
    EXPECT_EQ(to_string(Rational(-3)), "-3/1");
    EXPECT_EQ(to_string(Rational(0)), "0/1");
    EXPECT_EQ(parse_rational(to_string(Rational(-22, 7))), Rational(-22, 7));
}

TEST(Rank, ZeroAndIdentity)
{
    EXPECT_EQ(rank(RationalMatrix(3, 4)), 0u);
    EXPECT_EQ(rank(RationalMatrix::identity(5)), 5u);
    EXPECT_EQ(rank(RationalMatrix()), 0u);
}

TEST(Rank, DependentRows)
{
    const auto m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    EXPECT_EQ(rank(m), 2u);
    EXPECT_EQ(rank(m.transposed()), 2u);
}

TEST(Rank, RationalEntries)
{
    RationalMatrix m(2, 2);
    m(0, 0) = Rational(1, 3);
    m(0, 1) = Rational(1, 2);
    m(1, 0) = Rational(2, 9);
    m(1, 1) = Rational(1, 3);
    EXPECT_EQ(rank(m), 1u);
    EXPECT_EQ(determinant(m), 0);
}

TEST(Determinant, MatchesCofactorExpansion)
{
    const auto m = from_rows({{2, -1, 0}, {1, 3, 4}, {0, 5, -2}});
    // 2(3·-2 - 4·5) + 1(1·-2 - 4·0) = 2(-26) - 2 = -54
    EXPECT_EQ(determinant(m), -54);
    EXPECT_EQ(determinant(RationalMatrix::identity(4)), 1);
    EXPECT_THROW(determinant(RationalMatrix(2, 3)), Error);
}

TEST(Determinant, NeedsRowSwap)
{
    const auto m = from_rows({{0, 1}, {1, 0}});
    EXPECT_EQ(determinant(m), -1);
}

TEST(Nullspace, VectorsAreAnnihilatedAndIndependent)
{
    const auto m = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 1}});
    const auto basis = nullspace(m);
    ASSERT_EQ(basis.size(), 4u - rank(m));
    for (const auto& v : basis)
        for (const auto& entry : m * v)
            EXPECT_EQ(entry, 0);
    RationalMatrix stacked(basis.size(), 4);
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < 4; ++j)
            stacked(i, j) = basis[i][j];
    EXPECT_EQ(rank(stacked), basis.size());
}

TEST(Solve, SquareSystem)
{
    const auto m = from_rows({{2, 1}, {1, 3}});
    const auto x = solve(m, {Rational(3), Rational(5)});
    EXPECT_EQ(x, (RationalVector{Rational(4, 5), Rational(7, 5)}));
    EXPECT_THROW(solve(from_rows({{1, 2}, {2, 4}}), {Rational(1), Rational(2)}), Error);
}

TEST(Matrix, ProductsAndSubmatrices)
{
    const auto a = from_rows({{1, 2}, {3, 4}});
    const auto b = from_rows({{0, 1}, {1, 0}});
    EXPECT_EQ(a * b, from_rows({{2, 1}, {4, 3}}));
    EXPECT_EQ(a.without(0, 1), from_rows({{3}}));
    EXPECT_EQ(a.select_columns({1}), from_rows({{2}, {4}}));
    EXPECT_EQ(a.transposed(), from_rows({{1, 3}, {2, 4}}));
}

TEST(Cross, TwoByTwoDeterminant)
{
    EXPECT_EQ(cross(1, 0, 0, 1), 1);
    EXPECT_EQ(cross(0, 1, 1, 0), -1);
}
