// Sparse multivariate rational polynomials: ordering, arithmetic,
// differentiation, and operator application.

#include <catch2/catch_amalgamated.hpp>

#include <multifan/polynomial.hpp>

using namespace multifan;

namespace {

SparsePolynomial var(int nvars, int v) { return SparsePolynomial::variable(nvars, v); }

}  // namespace

TEST_CASE("monomial ordering is graded lex with x1 largest", "[polynomial]")
{
    const auto x1 = Monomial::variable(1);
    const auto x2 = Monomial::variable(2);
    const auto x1x1 = Monomial::variable(1, 2);
    const auto x1x2 = x1 * x2;
    const auto x2x2 = Monomial::variable(2, 2);

    CHECK(x2 < x1);             // lex tie-break inside a degree
    CHECK(x1 < x2x2);           // degree dominates
    CHECK(x2x2 < x1x2);
    CHECK(x1x2 < x1x1);
    CHECK_FALSE(x1x1 < x1x1);
}

TEST_CASE("monomial construction and accessors", "[polynomial]")
{
    const auto m = Monomial::from_multiset({2, 1, 2});
    CHECK(m.degree() == 3);
    CHECK(m.exponent(1) == 1);
    CHECK(m.exponent(2) == 2);
    CHECK(m.exponent(3) == 0);
    CHECK(m.max_variable() == 2);
    CHECK(m == Monomial::from_exponents({1, 2}));
    CHECK(m.str() == "c1*c2^2");
    CHECK(Monomial().str() == "1");
}

TEST_CASE("binomial square expands with exact coefficients", "[polynomial]")
{
    const auto p = (var(2, 1) + var(2, 2)).pow(2);
    CHECK(p.coefficient(Monomial::variable(1, 2)) == Rational(1));
    CHECK(p.coefficient(Monomial::variable(1) * Monomial::variable(2)) == Rational(2));
    CHECK(p.coefficient(Monomial::variable(2, 2)) == Rational(1));
    CHECK(p.homogeneous_degree() == 2);
    CHECK(p.str() == "c1^2 + 2*c1*c2 + c2^2");
}

TEST_CASE("arithmetic keeps polynomials normalized", "[polynomial]")
{
    const auto p = var(2, 1) + var(2, 2);
    const auto q = var(2, 1) - var(2, 2);
    CHECK((p + q) == var(2, 1) * SparsePolynomial::constant(2, 2));
    CHECK((p * q) == var(2, 1) * var(2, 1) - var(2, 2) * var(2, 2));
    CHECK((p - p).is_zero());
    CHECK((-p).coefficient(Monomial::variable(1)) == Rational(-1));
}

TEST_CASE("evaluation is exact", "[polynomial]")
{
    const auto p = var(2, 1) + var(2, 2) * SparsePolynomial::constant(2, 2);
    CHECK(p.evaluate({Rational(3), Rational(1, 2)}) == Rational(4));
    const auto cube = (var(1, 1)).pow(3);
    CHECK(cube.evaluate({Rational(1, 2)}) == Rational(1, 8));
}

TEST_CASE("differentiation follows the power rule", "[polynomial]")
{
    const auto p = var(1, 1).pow(3);
    const auto dp = differentiate(p, 1);
    CHECK(dp == var(1, 1).pow(2) * SparsePolynomial::constant(1, 3));
    CHECK(differentiate(dp, 1) == var(1, 1) * SparsePolynomial::constant(1, 6));
    CHECK(differentiate(SparsePolynomial::constant(1, 5), 1).is_zero());
}

TEST_CASE("multiset differentiation repeats single steps", "[polynomial]")
{
    const auto p = (var(2, 1) + var(2, 2)).pow(3);
    const auto once = differentiate(differentiate(p, 1), 2);
    CHECK(differentiate(p, std::vector<int>{1, 2}) == once);
}

TEST_CASE("operator application contracts degrees", "[polynomial]")
{
    const auto p = var(2, 1) * var(2, 2);
    SparsePolynomial op(2);
    op.add_term(Monomial::variable(1) * Monomial::variable(2), 1);
    CHECK(apply_operator(op, p) == SparsePolynomial::constant(2, 1));

    // d1^2 annihilates c1*c2.
    SparsePolynomial op2(2);
    op2.add_term(Monomial::variable(1, 2), 1);
    CHECK(apply_operator(op2, p).is_zero());
}

TEST_CASE("variable shift relabels into a larger ring", "[polynomial]")
{
    const auto p = var(2, 1) + var(2, 2);
    const auto q = p.shift_variables(2, 4);
    CHECK(q == var(4, 3) + var(4, 4));
}

TEST_CASE("printing is descending graded lex with rational coefficients",
          "[polynomial]")
{
    auto p = SparsePolynomial(2);
    p.add_term(Monomial::variable(2), Rational(-1, 2));
    p.add_term(Monomial::variable(1, 2), 3);
    p.add_term(Monomial(), 1);
    CHECK(p.str() == "3*c1^2 - 1/2*c2 + 1");
    CHECK(SparsePolynomial(3).str() == "0");
}
