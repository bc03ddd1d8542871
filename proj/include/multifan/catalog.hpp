#pragma once

#include <string>
#include <vector>

#include "chain.hpp"
#include "errors.hpp"
#include "fan.hpp"
#include "rational.hpp"

namespace multifan {

/**
 * The Γ graph cycle: two squares sharing the vertex pair {5, 6}, oriented as
 * the edge circuits 1→6→2→5→1 and 3→6→4→5→3.  Vertices 5 and 6 are its two
 * four-valent (singular) vertices.
 */
inline SimplicialChain gamma_cycle()
{
    return SimplicialChain::from_terms(6, 2,
                                       {
                                           {{1, 6}, 1},
                                           {{2, 6}, -1},
                                           {{2, 5}, 1},
                                           {{1, 5}, -1},
                                           {{3, 6}, 1},
                                           {{4, 6}, -1},
                                           {{4, 5}, 1},
                                           {{3, 5}, -1},
                                       });
}

/**
 * Γ fan in the plane.  The dimension vector is (1,2,1) when the values at
 * the two four-valent vertices are collinear and (1,4,1) when independent.
 */
inline MultiFan gamma_fan(bool collinear_five_six)
{
    std::vector<RationalVector> values = {
        {1, 1}, {1, 2}, {1, 3}, {1, 4},  // vertices 1..4: generic slopes
        {0, 0}, {0, 0},                   // placeholders for 5 and 6
    };
    if (collinear_five_six) {
        values[4] = {0, 1};
        values[5] = {0, 2};
    } else {
        values[4] = {1, 0};
        values[5] = {0, 1};
    }
    return new_multifan(gamma_cycle(), CharacteristicFunction(2, std::move(values)));
}

/// Two opposite rays on the line; the volume polynomial is c1 + c2.
inline MultiFan interval_fan()
{
    SimplicialChain c(2, 1);
    c.add({1}, 1);
    c.add({2}, -1);
    return new_multifan(std::move(c), CharacteristicFunction(1, {{1}, {-1}}));
}

/// The normal fan of the unit square; volume polynomial (c1+c3)(c2+c4).
inline MultiFan square_fan()
{
    SimplicialChain c(4, 2);
    c.add({1, 2}, 1);
    c.add({2, 3}, 1);
    c.add({3, 4}, 1);
    c.add({1, 4}, -1);
    return new_multifan(
        std::move(c),
        CharacteristicFunction(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
}

/**
 * Fan of the n-dimensional cross-polytope, built as the join of n interval
 * fans; vertices 2i−1, 2i carry ±e_i.
 */
inline MultiFan cross_polytope_fan(int n)
{
    if (n < 1) raise(errc::invalid_input, "cross-polytope dimension must be >= 1");
    MultiFan fan = interval_fan();
    for (int i = 1; i < n; ++i) fan = join(fan, interval_fan());
    return fan;
}

/// The octahedron fan (3-dimensional cross-polytope).
inline MultiFan octahedron_fan() { return cross_polytope_fan(3); }

/**
 * Fan over the boundary of the n-simplex: rays e_1..e_n and −(e_1+...+e_n),
 * weights from the simplex boundary orientation.
 */
inline MultiFan simplex_boundary_fan(int n)
{
    if (n < 1) raise(errc::invalid_input, "simplex dimension must be >= 1");
    SimplicialChain full(n + 1, n + 1);
    Simplex all(n + 1);
    for (int i = 0; i <= n; ++i) all[i] = i + 1;
    full.add(all, 1);
    std::vector<RationalVector> values;
    for (int i = 1; i <= n; ++i) {
        RationalVector e(n, 0);
        e[i - 1] = 1;
        values.push_back(std::move(e));
    }
    values.push_back(RationalVector(n, -1));
    return new_multifan(boundary(full), CharacteristicFunction(n, std::move(values)));
}

/**
 * The 7-vertex torus triangulation: facets {i, i+1, i+3} and {i, i+2, i+3}
 * modulo 7, coherently oriented.  Its reduced Betti numbers are (0, 2, 1)
 * and its Betti-corrected h-vector is (1, 4, 4, 1).
 */
inline SimplicialChain minimal_torus_cycle()
{
    std::vector<Simplex> facets;
    for (int i = 0; i < 7; ++i) {
        const auto v = [i](int off) { return (i + off) % 7 + 1; };
        Simplex a = {v(0), v(1), v(3)};
        Simplex b = {v(0), v(2), v(3)};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        facets.push_back(a);
        facets.push_back(b);
    }
    return orient_closed_pseudomanifold(7, facets);
}

/// Moment-curve coloring (1, i, i^2): nondegenerate on every vertex triple.
inline CharacteristicFunction moment_curve_coloring(int m)
{
    std::vector<RationalVector> values;
    for (int i = 1; i <= m; ++i)
        values.push_back({1, Rational(i), Rational(i) * i});
    return CharacteristicFunction(3, std::move(values));
}

inline MultiFan minimal_torus_fan()
{
    return new_multifan(minimal_torus_cycle(), moment_curve_coloring(7));
}

/**
 * Connected sum of two closed-surface cycles along a pair of facets: the
 * second cycle is relabeled so facet_b lands on facet_a (other vertices get
 * fresh indices) and flipped so the shared facet cancels.
 */
inline SimplicialChain chain_connected_sum(const SimplicialChain& a,
                                           const SimplicialChain& b,
                                           const Simplex& facet_a,
                                           const Simplex& facet_b)
{
    if (a.cardinality() != b.cardinality())
        raise(errc::dimension_mismatch, "connected sum of unequal dimensions");
    if (facet_a.size() != facet_b.size() ||
        static_cast<int>(facet_a.size()) != a.cardinality())
        raise(errc::invalid_input, "glue facets must be facets of both cycles");
    const Rational wa = a.weight(facet_a);
    const Rational wb = b.weight(facet_b);
    if (wa == 0 || wb == 0)
        raise(errc::invalid_input, "glue facets must be supported");

    std::vector<int> image(b.m(), 0);
    for (std::size_t t = 0; t < facet_b.size(); ++t)
        image[facet_b[t] - 1] = facet_a[t];
    int next = a.m();
    for (int v = 1; v <= b.m(); ++v)
        if (image[v - 1] == 0) image[v - 1] = ++next;

    const SimplicialChain b_embedded = relabel(b, image, next);
    const Rational w_shared = b_embedded.weight(facet_a);
    const Rational flip = -(wa / w_shared);
    SimplicialChain total = a.with_ambient(next) + b_embedded * flip;
    if (total.weight(facet_a) != 0)
        raise(errc::invalid_input, "glue facet failed to cancel");
    if (!is_cycle(total))
        raise(errc::not_a_cycle, "connected sum is not a cycle");
    return total;
}

/**
 * Oriented genus-g surface cycle, built by repeatedly summing 7-vertex tori:
 * each new torus is glued along the lexicographically last facet of the
 * running surface, which lies in the most recently attached torus and is
 * therefore disjoint from earlier glue sites.  Vertex count: 7 + 4(g−1).
 */
inline SimplicialChain genus_surface_cycle(int g)
{
    if (g < 1) raise(errc::invalid_input, "genus must be >= 1");
    SimplicialChain surface = minimal_torus_cycle();
    for (int k = 1; k < g; ++k) {
        const Simplex glue_site = surface.weights().rbegin()->first;
        surface = chain_connected_sum(surface, minimal_torus_cycle(), glue_site,
                                      {1, 2, 4});
    }
    return surface;
}

inline MultiFan genus_surface_fan(int g)
{
    const SimplicialChain cycle = genus_surface_cycle(g);
    return new_multifan(cycle, moment_curve_coloring(cycle.m()));
}

/// Apex value presets for suspensions: both apices on the new axis, or one
/// tilted off it so the two values are linearly independent.
enum class ApexPreset { collinear, independent };

/**
 * Suspension of a fan: the base cycle is joined with the two-point sphere,
 * base values are lifted with a zero last coordinate, and the apices m+1,
 * m+2 receive preset values on (or off) the new axis.  The apex pair is
 * marked, so the result is suspension-shaped by construction.
 */
inline MultiFan suspend_fan(const MultiFan& base, ApexPreset preset)
{
    const int n = base.n();
    const int m = base.m();
    SimplicialChain cycle = suspension(base.cycle());
    std::vector<RationalVector> values;
    values.reserve(m + 2);
    for (int v = 1; v <= m; ++v) {
        RationalVector lifted = base.coloring().value(v);
        lifted.push_back(0);
        values.push_back(std::move(lifted));
    }
    RationalVector axis(n + 1, 0);
    axis[n] = 1;
    values.push_back(axis);  // apex x = m+1
    RationalVector second = axis;
    if (preset == ApexPreset::collinear) {
        second[n] = 2;  // parallel to x's value but not equal
    } else {
        second[n - 1] = 1;  // tilted: independent from x's value
    }
    values.push_back(std::move(second));  // apex y = m+2
    return new_multifan(std::move(cycle),
                        CharacteristicFunction(n + 1, std::move(values)))
        .with_apices(m + 1, m + 2);
}

/// Suspension with explicitly chosen apex values.
inline MultiFan suspend_fan(const MultiFan& base, RationalVector apex_x,
                            RationalVector apex_y)
{
    MultiFan fan = suspend_fan(base, ApexPreset::independent);
    fan = recolor(fan, base.m() + 1, std::move(apex_x));
    fan = recolor(fan, base.m() + 2, std::move(apex_y));
    return fan;
}

/// The two standard colorings of the suspended 7-vertex torus (m = 9).
inline MultiFan suspended_torus_fan(ApexPreset preset)
{
    return suspend_fan(minimal_torus_fan(), preset);
}

/// One named catalog entry.
struct CatalogEntry {
    std::string name;
    std::string summary;
    MultiFan fan;
};

/// All built-in fans by name, for the CLI and the test suite.
inline std::vector<CatalogEntry> catalog()
{
    std::vector<CatalogEntry> out;
    out.push_back({"gamma-collinear",
                   "two squares sharing two vertices, collinear values there",
                   gamma_fan(true)});
    out.push_back({"gamma-independent",
                   "two squares sharing two vertices, independent values there",
                   gamma_fan(false)});
    out.push_back({"interval", "two opposite rays on the line", interval_fan()});
    out.push_back({"square", "normal fan of the unit square", square_fan()});
    out.push_back({"octahedron", "3-dimensional cross-polytope fan", octahedron_fan()});
    out.push_back({"cross-polytope-4", "4-dimensional cross-polytope fan",
                   cross_polytope_fan(4)});
    out.push_back({"simplex-boundary-3", "fan over the boundary of the 3-simplex",
                   simplex_boundary_fan(3)});
    out.push_back({"torus-7", "7-vertex torus with moment-curve coloring",
                   minimal_torus_fan()});
    out.push_back({"genus-2-surface", "connected sum of two 7-vertex tori",
                   genus_surface_fan(2)});
    out.push_back({"sigma-torus-collinear",
                   "suspended 7-vertex torus, collinear apex values",
                   suspended_torus_fan(ApexPreset::collinear)});
    out.push_back({"sigma-torus-independent",
                   "suspended 7-vertex torus, independent apex values",
                   suspended_torus_fan(ApexPreset::independent)});
    out.push_back({"sigma-octahedron-collinear",
                   "suspended octahedron fan, collinear apex values",
                   suspend_fan(octahedron_fan(), ApexPreset::collinear)});
    out.push_back({"sigma-octahedron-independent",
                   "suspended octahedron fan, independent apex values",
                   suspend_fan(octahedron_fan(), ApexPreset::independent)});
    return out;
}

inline const MultiFan& catalog_fan(const std::vector<CatalogEntry>& entries,
                                   const std::string& name)
{
    for (const auto& e : entries)
        if (e.name == name) return e.fan;
    raise(errc::invalid_input, "unknown catalog entry: " + name);
}

}  // namespace multifan
