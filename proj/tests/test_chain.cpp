// Weighted simplicial chains: boundaries, cycles, links, joins, suspensions,
// relabeling, and orientation of closed pseudomanifolds.

#include <catch2/catch_amalgamated.hpp>

#include <multifan/chain.hpp>
#include <multifan/errors.hpp>

using namespace multifan;

namespace {

// Boundary of the full triangle on {1,2,3}: an oriented circle.
SimplicialChain triangle()
{
    return SimplicialChain::from_terms(3, 2, {{{1, 2}, 1}, {{2, 3}, 1}, {{1, 3}, -1}});
}

}  // namespace

TEST_CASE("boundary squares to zero", "[chain]")
{
    SimplicialChain tet(4, 3);
    tet.add({1, 2, 3}, 1);
    tet.add({1, 2, 4}, -1);
    tet.add({1, 3, 4}, 1);
    tet.add({2, 3, 4}, -1);
    const auto b = boundary(tet);
    CHECK(b.is_zero());

    SimplicialChain solid(4, 4);
    solid.add({1, 2, 3, 4}, 1);
    CHECK(boundary(solid) == tet * Rational(-1));
    CHECK(boundary(boundary(solid)).is_zero());
}

TEST_CASE("cardinality-one boundary is the augmentation", "[chain]")
{
    SimplicialChain points(3, 1);
    points.add({1}, 1);
    points.add({2}, -1);
    CHECK(is_cycle(points));
    points.add({3}, 1);
    CHECK_FALSE(is_cycle(points));
}

TEST_CASE("triangle circle is a cycle", "[chain]")
{
    CHECK(is_cycle(triangle()));
    CHECK(triangle().support_vertices() == std::vector<int>{1, 2, 3});
}

TEST_CASE("ghost vertices are tracked by ambient range", "[chain]")
{
    const auto c = triangle().with_ambient(5);
    CHECK(c.m() == 5);
    CHECK_FALSE(c.is_ghost(1));
    CHECK(c.is_ghost(4));
    CHECK(c.is_ghost(5));
    CHECK(c.support_vertices() == std::vector<int>{1, 2, 3});
}

TEST_CASE("link of a vertex in a cycle is a cycle", "[chain]")
{
    const auto link = link_cycle(triangle(), 2);
    CHECK(link.cardinality() == 1);
    CHECK(is_cycle(link));
    CHECK(link.weight({1}) == Rational(-1));
    CHECK(link.weight({3}) == Rational(1));
}

TEST_CASE("iterated link matches single links", "[chain]")
{
    SimplicialChain tet(4, 3);
    tet.add({1, 2, 3}, 1);
    tet.add({1, 2, 4}, -1);
    tet.add({1, 3, 4}, 1);
    tet.add({2, 3, 4}, -1);
    const auto l12 = link_cycle(tet, Simplex{1, 2});
    CHECK(l12 == link_cycle(link_cycle(tet, 1), 2));
    CHECK(is_cycle(l12));
}

TEST_CASE("join of two circles has product weights", "[chain]")
{
    const auto j = join_cycles(triangle(), zero_sphere_chain());
    CHECK(j.m() == 5);
    CHECK(j.cardinality() == 3);
    CHECK(j.weights().size() == 6);
    CHECK(j.weight({1, 2, 4}) == Rational(1));
    CHECK(j.weight({1, 2, 5}) == Rational(-1));
    CHECK(is_cycle(j));
}

TEST_CASE("suspension doubles facets and stays a cycle", "[chain]")
{
    const auto s = suspension(triangle());
    CHECK(s.m() == 5);
    CHECK(s.weights().size() == 6);
    CHECK(is_cycle(s));
    // One apex contributes with + sign, the other with -.
    CHECK(s.weight({1, 2, 4}) == -s.weight({1, 2, 5}));
}

TEST_CASE("relabel moves weights along the vertex map", "[chain]")
{
    const auto r = relabel(triangle(), {3, 1, 2}, 3);
    // {1,2} -> (3,1): one swap flips the sign; {1,3} -> (3,2) likewise.
    CHECK(r.weight({1, 3}) == Rational(-1));
    CHECK(r.weight({1, 2}) == Rational(1));
    CHECK(r.weight({2, 3}) == Rational(1));
    CHECK(is_cycle(r));
    // A cyclic rotation of an oriented circle reproduces the same chain.
    CHECK(r == triangle());
}

TEST_CASE("orientation search assigns coherent signs", "[chain]")
{
    const auto c = orient_closed_pseudomanifold(
        4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(is_cycle(c));
    for (auto& [s, w] : c.weights()) CHECK((w == Rational(1) || w == Rational(-1)));
    CHECK(c.weights().size() == 4);
}

TEST_CASE("orientation search rejects open surfaces", "[chain]")
{
    // Two triangles sharing an edge: the outer edges lie in only one facet.
    CHECK_THROWS_AS(orient_closed_pseudomanifold(4, {{1, 2, 3}, {1, 2, 4}}),
                    FanError);
}

TEST_CASE("incompatible chains are rejected", "[chain]")
{
    SimplicialChain a(3, 2), b(4, 2);
    CHECK_THROWS_AS(a + b, FanError);
}
