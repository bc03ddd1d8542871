// Exact rational linear algebra: rank (fraction-free and modular), reduced
// echelon form, kernels, determinants, and linear solves.

#include <catch2/catch_amalgamated.hpp>

#include <multifan/linalg.hpp>
#include <multifan/rng.hpp>

using namespace multifan;

namespace {

RationalMatrix mat(const std::vector<std::vector<Rational>>& rows)
{
    return RationalMatrix::from_rows(rows);
}

}  // namespace

TEST_CASE("rank of small matrices", "[linalg]")
{
    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
    CHECK(rank(mat({{1, 2}, {3, 4}})) == 2);
    CHECK(rank(RationalMatrix(0, 5)) == 0);
    CHECK(rank(RationalMatrix(5, 0)) == 0);
    CHECK(rank(mat({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("rank handles rational entries", "[linalg]")
{
    // Rows are proportional: (1/2, 1/3) = (3/2) * (1/3, 2/9).
    const auto M = mat({{Rational(1, 2), Rational(1, 3)},
                        {Rational(1, 3), Rational(2, 9)}});
    CHECK(rank(M) == 1);
}

TEST_CASE("exact and adaptive rank agree on random matrices", "[linalg]")
{
    Rng rng(20240501);
    for (int trial = 0; trial < 20; ++trial) {
        const int r = static_cast<int>(rng.uniform(1, 6));
        const int c = static_cast<int>(rng.uniform(1, 6));
        RationalMatrix M(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                M(i, j) = Rational(rng.uniform(0, 20)) - Rational(10);
        const int exact = rank(M, RankMethod::exact);
        const int adaptive = rank(M, RankMethod::adaptive, rng.next());
        CHECK(exact == adaptive);
    }
}

TEST_CASE("determinant of reference matrices", "[linalg]")
{
    CHECK(determinant(mat({{1, 2}, {3, 4}})) == Rational(-2));
    CHECK(determinant(mat({{2, 0}, {0, 3}})) == Rational(6));
    // Vandermonde on 1, 2, 3: product of pairwise differences.
    CHECK(determinant(mat({{1, 1, 1}, {1, 2, 4}, {1, 3, 9}})) == Rational(2));
    CHECK(determinant(RationalMatrix::identity(4)) == Rational(1));
    CHECK(determinant(mat({{Rational(1, 2), 0}, {0, Rational(1, 3)}})) ==
          Rational(1, 6));
}

TEST_CASE("determinant changes sign under row swap", "[linalg]")
{
    const auto M = mat({{1, 2, 3}, {0, 1, 4}, {5, 6, 0}});
    const auto S = mat({{0, 1, 4}, {1, 2, 3}, {5, 6, 0}});
    CHECK(determinant(M) == -determinant(S));
    CHECK(determinant(M) == Rational(1));
}

TEST_CASE("solve returns the unique solution", "[linalg]")
{
    const auto M = mat({{1, 1}, {1, -1}});
    const auto x = solve(M, {Rational(3), Rational(1)});
    CHECK(x[0] == Rational(2));
    CHECK(x[1] == Rational(1));
}

TEST_CASE("solve raises on singular systems", "[linalg]")
{
    CHECK_THROWS_AS(solve(mat({{1, 1}, {2, 2}}), {Rational(1), Rational(3)}),
                    FanError);
    CHECK_THROWS_AS(solve(mat({{0, 0}, {0, 0}}), {Rational(1), Rational(0)}),
                    FanError);
}

TEST_CASE("kernel basis spans the null space", "[linalg]")
{
    const auto M = mat({{1, 1, 1}});
    const auto K = kernel_basis(M);
    REQUIRE(K.size() == 2);
    for (const auto& v : K) {
        Rational dot = 0;
        for (std::size_t j = 0; j < v.size(); ++j) dot += M(0, j) * v[j];
        CHECK(dot == Rational(0));
    }

    CHECK(kernel_basis(RationalMatrix::identity(3)).empty());
}

TEST_CASE("kernel dimension matches rank deficiency on random matrices",
          "[linalg]")
{
    Rng rng(77001);
    for (int trial = 0; trial < 10; ++trial) {
        const int r = static_cast<int>(rng.uniform(1, 5));
        const int c = static_cast<int>(rng.uniform(1, 5));
        RationalMatrix M(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                M(i, j) = Rational(rng.uniform(0, 6)) - Rational(3);
        const auto K = kernel_basis(M);
        CHECK(static_cast<int>(K.size()) == c - rank(M));
        for (const auto& v : K)
            for (int i = 0; i < r; ++i) {
                Rational dot = 0;
                for (int j = 0; j < c; ++j) dot += M(i, j) * v[j];
                CHECK(dot == Rational(0));
            }
    }
}

TEST_CASE("rref produces identity columns at pivots", "[linalg]")
{
    std::vector<std::size_t> pivots;
    const auto R = rref(mat({{2, 4, 2}, {1, 3, 3}}), &pivots);
    REQUIRE(pivots.size() == 2);
    CHECK(pivots[0] == 0);
    CHECK(pivots[1] == 1);
    CHECK(R(0, 0) == Rational(1));
    CHECK(R(0, 1) == Rational(0));
    CHECK(R(1, 0) == Rational(0));
    CHECK(R(1, 1) == Rational(1));
    // Row space is preserved, so reducing twice is a fixed point.
    CHECK(rref(R) == R);
}
