// Acceptance suite: end-to-end checks of the library's headline results.
// Every comparison is exact rational arithmetic (tolerance 0).  Each
// criterion prints exactly one PASS/FAIL line; the process exits nonzero
// when any criterion fails or overruns its time budget.

#include <multifan/algebra.hpp>
#include <multifan/catalog.hpp>
#include <multifan/explorer.hpp>
#include <multifan/moves.hpp>
#include <multifan/volume.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace multifan;

namespace {

struct Failure {
    std::string message;
};

void require(bool ok, const std::string& message)
{
    if (!ok) throw Failure{message};
}

DVector dv(std::initializer_list<long long> entries)
{
    DVector out;
    out.d.assign(entries);
    return out;
}

std::vector<int> all_vertices(const MultiFan& fan)
{
    std::vector<int> out;
    for (int v = 1; v <= fan.m(); ++v) out.push_back(v);
    return out;
}

/// Redraws the values at the given vertices until the coloring is
/// nondegenerate on the support; everything else stays fixed.
MultiFan randomize_vertices(const MultiFan& base, const std::vector<int>& vertices,
                            Rng& rng)
{
    long long bound = 8;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<RationalVector> values;
        values.reserve(base.m());
        for (int v = 1; v <= base.m(); ++v) values.push_back(base.coloring().value(v));
        for (int v : vertices) values[v - 1] = rng.integer_vector(base.n(), bound);
        try {
            return MultiFan(base.cycle(),
                            CharacteristicFunction(base.n(), std::move(values)),
                            base.apices());
        } catch (const FanError& e) {
            if (e.code() != errc::degenerate_coloring) throw;
        }
        if (bound < (1LL << 30)) bound *= 2;
    }
    throw Failure{"could not draw a nondegenerate random coloring"};
}

RationalVector random_generic_polarization(const MultiFan& fan, Rng& rng)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        RationalVector v = rng.integer_vector(fan.n(), 64 + attempt);
        if (is_generic_polarization(fan, v)) return v;
    }
    throw Failure{"could not draw a generic polarization"};
}

SimplicialChain negated(const SimplicialChain& c)
{
    std::vector<std::pair<Simplex, Rational>> terms;
    for (const auto& [s, w] : c.weights()) terms.emplace_back(s, -w);
    return SimplicialChain::from_terms(c.m(), c.cardinality(), terms);
}

// ---------------------------------------------------------------------------
// 1. Two-square fan dichotomy: (1,2,1) with parallel values at the shared
//    vertices, (1,4,1) with independent ones, over random outer colorings.
void criterion_1()
{
    Rng rng(1001);
    for (const bool collinear : {true, false}) {
        const MultiFan base = gamma_fan(collinear);
        const DVector expected = collinear ? dv({1, 2, 1}) : dv({1, 4, 1});
        for (int t = 0; t < 10; ++t) {
            const MultiFan fan = randomize_vertices(base, {1, 2, 3, 4}, rng);
            const DVector d = d_vector(fan);
            require(d == expected,
                    std::string(collinear ? "collinear" : "independent") +
                        " case " + std::to_string(t) + ": got " + d.str() +
                        ", expected " + expected.str());
        }
    }
}

// 2. The square fan's volume polynomial is the exact product of the two
//    opposite-side sums; at offsets (1,1,1,1) the rectangle is 2 x 2.
void criterion_2()
{
    const auto var = [](int v) { return SparsePolynomial::variable(4, v); };
    const SparsePolynomial V = volume_polynomial(square_fan());
    require(V == (var(1) + var(3)) * (var(2) + var(4)),
            "square volume polynomial is not (c1+c3)(c2+c4)");
    require(evaluate_volume(V, {1, 1, 1, 1}) == Rational(4),
            "square volume at offsets (1,1,1,1) is not 4");
}

// 3. Cross-polytope fans have binomial dimension vectors.
void criterion_3()
{
    require(d_vector(cross_polytope_fan(2)) == dv({1, 2, 1}),
            "2-cross-polytope d-vector is not (1,2,1)");
    require(d_vector(cross_polytope_fan(3)) == dv({1, 3, 3, 1}),
            "3-cross-polytope d-vector is not (1,3,3,1)");
}

// 4. Suspended 7-vertex torus: the two apex strata give the exact pair.
void criterion_4()
{
    const DVector col = d_vector(suspended_torus_fan(ApexPreset::collinear));
    require(col == dv({1, 5, 8, 5, 1}),
            "collinear apex stratum: got " + col.str() + ", expected (1, 5, 8, 5, 1)");
    const DVector ind = d_vector(suspended_torus_fan(ApexPreset::independent));
    require(ind == dv({1, 5, 12, 5, 1}),
            "independent apex stratum: got " + ind.str() +
                ", expected (1, 5, 12, 5, 1)");
}

// 5. The torus suspension formulas (1, m-4, 2m-10, m-4, 1) and
//    (1, m-4, 2m-6, m-4, 1) survive random bistellar moves on the base,
//    with m counting supported base vertices plus the two apices.
void criterion_5()
{
    for (const std::uint64_t seed : {kDefaultSeed, std::uint64_t{424242}}) {
        const RandomMovesResult moved = random_moves(minimal_torus_fan(), 5, seed);
        require(static_cast<int>(moved.applied.size()) == 5,
                "expected 5 applied moves, got " +
                    std::to_string(moved.applied.size()));
        const long long m = moved.fan.support_vertex_count() + 2;
        const DVector want_col = dv({1, m - 4, 2 * m - 10, m - 4, 1});
        const DVector want_ind = dv({1, m - 4, 2 * m - 6, m - 4, 1});
        const DVector got_col =
            d_vector(suspend_fan(moved.fan, ApexPreset::collinear));
        require(got_col == want_col,
                "seed " + std::to_string(seed) + " collinear: got " + got_col.str() +
                    ", expected " + want_col.str());
        const DVector got_ind =
            d_vector(suspend_fan(moved.fan, ApexPreset::independent));
        require(got_ind == want_ind,
                "seed " + std::to_string(seed) + " independent: got " +
                    got_ind.str() + ", expected " + want_ind.str());
    }
}

// 6. Suspended genus-2 surface, independent apex stratum: the middle
//    dimension is 2m - 10 + 8 where m counts the 11 surface vertices plus
//    the two apices.
void criterion_6()
{
    const MultiFan fan = suspend_fan(genus_surface_fan(2), ApexPreset::independent);
    const long long m = fan.support_vertex_count();
    require(m == 13, "suspended genus-2 surface should have 13 vertices");
    const DVector d = d_vector(fan);
    require(static_cast<int>(d.d.size()) == 5 && d.d[2] == 2 * m - 10 + 8,
            "middle dimension: got " + d.str() + ", expected d2 = " +
                std::to_string(2 * m - 10 + 8));
}

// 7. Suspended moves shift the dimension vector by (0,1,2,1,0) for an
//    insertion and by zero for a flip, on both torus suspension strata.
void criterion_7()
{
    for (const ApexPreset preset : {ApexPreset::collinear, ApexPreset::independent}) {
        const char* tag =
            preset == ApexPreset::collinear ? "collinear" : "independent";
        const MultiFan s0 = suspended_torus_fan(preset);
        const DVector d0 = d_vector(s0);

        MoveSpec insertion;
        insertion.kind = {0, 2};
        insertion.target = {1, 2, 4};
        insertion.new_vertex = 10;
        const MultiFan s1 = suspended_move(s0, insertion);
        DVector want1 = d0;
        want1.d[1] += 1;
        want1.d[2] += 2;
        want1.d[3] += 1;
        const DVector d1 = d_vector(s1);
        require(d1 == want1, std::string(tag) + " suspended insertion: got " +
                                 d1.str() + ", expected " + want1.str());

        MoveSpec flip;
        flip.kind = {1, 1};
        flip.target = {1, 2};
        const MultiFan s2 = suspended_move(s1, flip);
        const DVector d2 = d_vector(s2);
        require(d2 == want1, std::string(tag) + " suspended flip: got " + d2.str() +
                                 ", expected " + want1.str());
    }
}

// 8. Property suite, >= 10 randomized cases per property. --------------------

void property_symmetry()
{
    Rng rng(8101);
    const auto entries = catalog();
    for (int t = 0; t < 12; ++t) {
        const MultiFan& base =
            entries[rng.uniform(0, static_cast<long long>(entries.size()) - 1)].fan;
        const MultiFan fan = randomize_vertices(base, all_vertices(base), rng);
        const DVector d = d_vector(fan);  // raises on any symmetry violation
        require(d.d.front() == 1, "case " + std::to_string(t) + ": d0 != 1");
        const int n = fan.n();
        for (int j = 0; j <= n; ++j)
            require(d.d[j] == d.d[n - j],
                    "case " + std::to_string(t) + ": " + d.str() +
                        " is not palindromic");
    }
}

void property_polarization_independence()
{
    Rng rng(8202);
    const auto entries = catalog();
    for (int t = 0; t < 10; ++t) {
        const MultiFan& fan =
            entries[rng.uniform(0, static_cast<long long>(entries.size()) - 1)].fan;
        const SparsePolynomial V0 = volume_polynomial(fan, std::nullopt, rng.next());
        const SparsePolynomial V1 =
            volume_polynomial(fan, random_generic_polarization(fan, rng));
        const SparsePolynomial V2 =
            volume_polynomial(fan, random_generic_polarization(fan, rng));
        require(V0 == V1 && V1 == V2,
                "case " + std::to_string(t) +
                    ": volume polynomial depends on the polarization");
    }
}

void property_join_multiplicativity()
{
    Rng rng(8303);
    std::vector<MultiFan> pool = {interval_fan(),         square_fan(),
                                  cross_polytope_fan(2),  gamma_fan(true),
                                  gamma_fan(false),       octahedron_fan(),
                                  simplex_boundary_fan(3), minimal_torus_fan()};
    int done = 0;
    while (done < 10) {
        const MultiFan& a_base =
            pool[rng.uniform(0, static_cast<long long>(pool.size()) - 1)];
        const MultiFan& b_base =
            pool[rng.uniform(0, static_cast<long long>(pool.size()) - 1)];
        if (a_base.n() + b_base.n() > 4) continue;
        const MultiFan a = randomize_vertices(a_base, all_vertices(a_base), rng);
        const MultiFan b = randomize_vertices(b_base, all_vertices(b_base), rng);
        const HilbertFunction joined = hilbert(join(a, b));
        const HilbertFunction product = convolve(hilbert(a), hilbert(b));
        require(joined == product,
                "case " + std::to_string(done) + ": join gave " + joined.str() +
                    ", factors give " + product.str());
        ++done;
    }
}

void property_connected_sum_additivity()
{
    Rng rng(8404);
    // Summand pool as bare cycles; colorings are drawn per case so the two
    // pieces share exact values on the glued facet.
    const std::vector<SimplicialChain> surfaces = {
        octahedron_fan().cycle(), simplex_boundary_fan(3).cycle(),
        minimal_torus_cycle(), genus_surface_cycle(2)};
    const std::vector<SimplicialChain> curves = {square_fan().cycle(),
                                                 cross_polytope_fan(2).cycle()};
    for (int t = 0; t < 10; ++t) {
        const bool planar = t < 2;  // two 1-dimensional cases, eight surfaces
        const auto& pool = planar ? curves : surfaces;
        const SimplicialChain& cyc_a =
            pool[rng.uniform(0, static_cast<long long>(pool.size()) - 1)];
        const SimplicialChain& cyc_b =
            pool[rng.uniform(0, static_cast<long long>(pool.size()) - 1)];
        const int n = cyc_a.cardinality();

        const auto pick_facet = [&rng](const SimplicialChain& c) {
            auto it = c.weights().begin();
            std::advance(it,
                         rng.uniform(0, static_cast<long long>(c.weights().size()) - 1));
            return it->first;
        };
        const Simplex fa = pick_facet(cyc_a);
        const Simplex fb = pick_facet(cyc_b);

        // Shared values on the glued facet, independent by construction.
        std::vector<RationalVector> glue;
        do {
            glue.clear();
            for (int i = 0; i < n; ++i) glue.push_back(rng.integer_vector(n, 8));
        } while (rank(RationalMatrix::from_columns(glue)) !=
                 static_cast<std::size_t>(n));

        std::map<int, RationalVector> fixed_a, fixed_b;
        for (int i = 0; i < n; ++i) fixed_a[fa[i]] = glue[i];
        for (int i = 0; i < n; ++i) fixed_b[fb[i]] = glue[i];

        const MultiFan a = detail::sample_fan(cyc_a, n, fixed_a, rng);
        // Flip b's orientation when needed so the glued facet cancels.
        const SimplicialChain cyc_b_oriented =
            (cyc_b.weight(fb) == -cyc_a.weight(fa)) ? cyc_b : negated(cyc_b);
        const MultiFan b = detail::sample_fan(cyc_b_oriented, n, fixed_b, rng);

        std::vector<std::pair<int, int>> identify;
        for (int i = 0; i < n; ++i) identify.emplace_back(fa[i], fb[i]);
        const MultiFan sum = connected_sum(a, b, identify);

        const DVector da = d_vector(a);
        const DVector db = d_vector(b);
        const DVector ds = d_vector(sum);
        for (int j = 1; j < n; ++j)
            require(ds.d[j] == da.d[j] + db.d[j],
                    "case " + std::to_string(t) + ": sum " + ds.str() +
                        " is not additive over " + da.str() + " and " + db.str());
    }
}

void property_smooth_recoloring()
{
    Rng rng(8505);
    const std::vector<MultiFan> pool = {
        square_fan(),
        gamma_fan(false),
        octahedron_fan(),
        simplex_boundary_fan(3),
        minimal_torus_fan(),
        genus_surface_fan(2),
        cross_polytope_fan(4),
        suspended_torus_fan(ApexPreset::collinear),
        suspended_torus_fan(ApexPreset::independent)};
    std::vector<DVector> base_d;
    for (const auto& fan : pool) base_d.push_back(d_vector(fan));
    for (int t = 0; t < 12; ++t) {
        const std::size_t k =
            static_cast<std::size_t>(rng.uniform(0, static_cast<long long>(pool.size()) - 1));
        const MultiFan& fan = pool[k];
        std::vector<int> smooth;
        for (int v : fan.cycle().support_vertices())
            if (is_smooth_vertex(fan.cycle(), v)) smooth.push_back(v);
        require(!smooth.empty(), "pool fan has no smooth vertices");
        const int v = smooth[rng.uniform(0, static_cast<long long>(smooth.size()) - 1)];
        const MultiFan recolored = randomize_vertices(fan, {v}, rng);
        const DVector d = d_vector(recolored);
        require(d == base_d[k],
                "case " + std::to_string(t) + ": recoloring smooth vertex " +
                    std::to_string(v) + " changed " + base_d[k].str() + " to " +
                    d.str());
    }
}

void property_gl_invariance()
{
    Rng rng(8606);
    const auto entries = catalog();
    for (int t = 0; t < 10; ++t) {
        const MultiFan& fan =
            entries[rng.uniform(0, static_cast<long long>(entries.size()) - 1)].fan;
        const int n = fan.n();
        RationalMatrix A(n, n);
        do {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) A(i, j) = Rational(rng.uniform(-6, 6));
        } while (determinant(A) == 0);
        const DVector before = d_vector(fan);
        const DVector after = d_vector(gl_transform(fan, A));
        require(after == before,
                "case " + std::to_string(t) + ": transform changed " +
                    before.str() + " to " + after.str());
    }
}

void property_nonface_derivatives()
{
    Rng rng(8707);
    // (fan, J) with J a non-face of the support.
    std::vector<std::pair<MultiFan, Simplex>> cases;
    cases.emplace_back(square_fan(), Simplex{1, 3});
    cases.emplace_back(square_fan(), Simplex{2, 4});
    cases.emplace_back(cross_polytope_fan(2), Simplex{1, 2});
    cases.emplace_back(octahedron_fan(), Simplex{1, 2});
    cases.emplace_back(octahedron_fan(), Simplex{3, 4});
    cases.emplace_back(octahedron_fan(), Simplex{5, 6});
    cases.emplace_back(cross_polytope_fan(4), Simplex{1, 2});
    cases.emplace_back(cross_polytope_fan(4), Simplex{7, 8});
    cases.emplace_back(gamma_fan(false), Simplex{1, 2});
    cases.emplace_back(gamma_fan(false), Simplex{3, 4});
    cases.emplace_back(gamma_fan(true), Simplex{5, 6});
    cases.emplace_back(suspended_torus_fan(ApexPreset::independent), Simplex{8, 9});
    for (std::size_t t = 0; t < cases.size(); ++t) {
        const MultiFan fan =
            randomize_vertices(cases[t].first, all_vertices(cases[t].first), rng);
        const SparsePolynomial V = volume_polynomial(fan);
        require(derivative_by_set(V, cases[t].second).is_zero(),
                "case " + std::to_string(t) +
                    ": derivative along a non-face did not vanish");
    }
    // Ghost vertices are degree-one non-faces: projecting the square fan at
    // vertex 1 leaves 1 and its opposite vertex 3 outside the support.
    const MultiFan proj = project(square_fan(), {1});
    const SparsePolynomial Vp = volume_polynomial(proj);
    require(derivative_by_set(Vp, {1}).is_zero() &&
                derivative_by_set(Vp, {3}).is_zero(),
            "ghost-vertex derivatives did not vanish");
}

void property_projection_dimensions()
{
    Rng rng(8808);
    const std::vector<MultiFan> pool = {
        square_fan(),
        gamma_fan(false),
        octahedron_fan(),
        simplex_boundary_fan(3),
        minimal_torus_fan(),
        genus_surface_fan(2),
        cross_polytope_fan(4),
        suspended_torus_fan(ApexPreset::collinear),
        suspended_torus_fan(ApexPreset::independent)};
    for (int t = 0; t < 10; ++t) {
        const MultiFan& base =
            pool[rng.uniform(0, static_cast<long long>(pool.size()) - 1)];
        const MultiFan fan = randomize_vertices(base, all_vertices(base), rng);
        const auto support = fan.cycle().support_vertices();
        const int v =
            support[rng.uniform(0, static_cast<long long>(support.size()) - 1)];
        const SparsePolynomial V = volume_polynomial(fan);
        const SparsePolynomial dV = derivative_by_set(V, {v});
        require(!dV.is_zero(), "derivative along a supported vertex vanished");
        const SparsePolynomial Vp = volume_polynomial(project(fan, {v}));
        for (int s = 0; s < fan.n(); ++s)
            require(var_dimension(dV, s) == var_dimension(Vp, s),
                    "case " + std::to_string(t) + ": derivative and projection " +
                        "dimensions differ at vertex " + std::to_string(v) +
                        ", order " + std::to_string(s));
    }
}

void property_suspension_inequality()
{
    Rng rng(8909);
    const std::vector<MultiFan> pool = {square_fan(),
                                        cross_polytope_fan(2),
                                        gamma_fan(true),
                                        gamma_fan(false),
                                        octahedron_fan(),
                                        simplex_boundary_fan(3),
                                        minimal_torus_fan()};
    for (int t = 0; t < 10; ++t) {
        const MultiFan& base =
            pool[rng.uniform(0, static_cast<long long>(pool.size()) - 1)];
        const MultiFan colored = randomize_vertices(base, all_vertices(base), rng);
        const ApexPreset preset =
            rng.uniform(0, 1) == 0 ? ApexPreset::collinear : ApexPreset::independent;
        const MultiFan sus = suspend_fan(colored, preset);
        const auto [x, y] = *sus.apices();
        const DVector whole = d_vector(sus);
        const DVector at_x = d_vector(project(sus, {x}));
        const DVector at_y = d_vector(project(sus, {y}));
        for (std::size_t j = 0; j < whole.d.size(); ++j) {
            long long lower = 0;
            if (j < at_x.d.size()) lower += at_x.d[j];
            if (j >= 1 && j - 1 < at_y.d.size()) lower += at_y.d[j - 1];
            require(whole.d[j] >= lower,
                    "case " + std::to_string(t) + ": suspension " + whole.str() +
                        " drops below its apex links at degree " +
                        std::to_string(2 * j));
        }
    }
}

void property_editability_verdicts()
{
    Rng rng(9010);
    const std::vector<MultiFan> spheres = {square_fan(), cross_polytope_fan(2),
                                           octahedron_fan(),
                                           simplex_boundary_fan(3)};
    for (const ApexPreset preset : {ApexPreset::collinear, ApexPreset::independent})
        for (const MultiFan& base : spheres) {
            const MultiFan colored =
                randomize_vertices(base, all_vertices(base), rng);
            require(is_editable(suspend_fan(colored, preset)).editable,
                    "suspended sphere fan reported not editable");
        }
    const MultiFan torus = minimal_torus_fan();
    for (const ApexPreset preset : {ApexPreset::collinear, ApexPreset::independent})
        for (int t = 0; t < 2; ++t) {
            const MultiFan colored =
                randomize_vertices(torus, all_vertices(torus), rng);
            const bool editable = is_editable(suspend_fan(colored, preset)).editable;
            const bool expected = preset == ApexPreset::collinear;
            require(editable == expected,
                    std::string("suspended torus, ") +
                        (expected ? "collinear" : "independent") +
                        " apices: wrong editability verdict");
        }
}

void criterion_8()
{
    property_symmetry();
    property_polarization_independence();
    property_join_multiplicativity();
    property_connected_sum_additivity();
    property_smooth_recoloring();
    property_gl_invariance();
    property_nonface_derivatives();
    property_projection_dimensions();
    property_suspension_inequality();
    property_editability_verdicts();
}

// 9. Invariant explorer: r = 1 on spheres and suspended spheres, r = 2 on
//    the suspended torus with the exact pair from criterion 4, and the
//    stratum counts for 1-3 singular vertices.
void criterion_9()
{
    RxOptions opts;
    opts.samples_per_stratum = 3;
    opts.strict = true;

    opts.seed = 9901;
    const RxReport oct = r_invariant(octahedron_fan().cycle(), opts);
    require(oct.r == 1 && oct.distinct.size() == 1 &&
                oct.distinct.front() == dv({1, 3, 3, 1}),
            "octahedron: expected r = 1 with (1, 3, 3, 1)");

    opts.seed = 9902;
    const RxReport sus_sphere =
        r_invariant(suspension(octahedron_fan().cycle()), opts);
    require(sus_sphere.r == 1 && sus_sphere.distinct.size() == 1 &&
                sus_sphere.distinct.front() == dv({1, 4, 6, 4, 1}),
            "suspended 2-sphere: expected r = 1 with (1, 4, 6, 4, 1)");

    opts.seed = 9903;
    const RxReport sus_torus =
        r_invariant(suspension(minimal_torus_cycle()), opts);
    require(sus_torus.r == 2, "suspended torus: expected r = 2, got " +
                                  std::to_string(sus_torus.r));
    std::set<DVector> got(sus_torus.distinct.begin(), sus_torus.distinct.end());
    const std::set<DVector> expected = {dv({1, 5, 8, 5, 1}), dv({1, 5, 12, 5, 1})};
    require(got == expected,
            "suspended torus: the distinct dimension vectors are not the "
            "expected pair");

    require(enumerate_strata({9}, 4).size() == 1,
            "one singular vertex should give 1 stratum");
    require(enumerate_strata({8, 9}, 4).size() == 2,
            "two singular vertices should give 2 strata");
    require(enumerate_strata({7, 8, 9}, 4).size() == 4,
            "three singular vertices should give 4 strata");
}

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0 = no budget
    std::function<void()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "two-square fan dichotomy (1,2,1) / (1,4,1)", 1.0, criterion_1},
        {2, "square fan volume polynomial (c1+c3)(c2+c4)", 1.0, criterion_2},
        {3, "cross-polytope dimension vectors are binomial", 5.0, criterion_3},
        {4, "suspended torus strata (1,5,8,5,1) / (1,5,12,5,1)", 60.0, criterion_4},
        {5, "torus suspension formulas survive random moves", 300.0, criterion_5},
        {6, "suspended genus-2 surface middle dimension 2m-10+8", 600.0,
         criterion_6},
        {7, "suspended move deltas (0,1,2,1,0) and zero", 0.0, criterion_7},
        {8, "randomized property suite (10 properties)", 0.0, criterion_8},
        {9, "invariant explorer r-values and stratum counts", 0.0, criterion_9},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.run();
        } catch (const Failure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (failure.empty() && c.limit_seconds > 0 && seconds > c.limit_seconds) {
            failure = "exceeded the " + std::to_string(c.limit_seconds) +
                      " s budget";
        }
        if (failure.empty()) {
            std::printf("PASS criterion %d: %s [%.2f s]\n", c.number,
                        c.title.c_str(), seconds);
        } else {
            std::printf("FAIL criterion %d: %s [%.2f s] -- %s\n", c.number,
                        c.title.c_str(), seconds, failure.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
