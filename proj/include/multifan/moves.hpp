#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "fan.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace multifan {

/**
 * Bistellar move description.  The kind (i, j) with i + j = dim removes the
 * star of the target face (i + 1 facets) and glues in the complementary side
 * (j + 1 facets) of the boundary of a (dim+2)-vertex simplex.  Supported
 * kinds: (0,2), (1,1), (2,0) in dimension 2 and (0,3), (1,2), (2,1), (3,0)
 * in dimension 3.  The target has j + 1 vertices: the whole facet for an
 * insertion, the shared face for a flip, a single vertex for a deletion.
 * Insertions ((0, dim)) also name the vertex to insert.
 */
struct MoveSpec {
    std::pair<int, int> kind{0, 0};
    Simplex target;
    std::optional<int> new_vertex;

    std::string str() const
    {
        std::string out = "(" + std::to_string(kind.first) + "," +
                          std::to_string(kind.second) + ") at {";
        for (std::size_t i = 0; i < target.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(target[i]);
        }
        out += "}";
        if (new_vertex) out += " inserting " + std::to_string(*new_vertex);
        return out;
    }
};

/// Outcome of a move applied at chain level.
struct ChainMove {
    SimplicialChain result;
    std::vector<Simplex> removed_facets;
    std::vector<Simplex> added_facets;
    Simplex region;  ///< all dim + 2 vertices spanning the exchanged star
};

/**
 * One bistellar move on a weighted cycle with ±1 facet weights.  The
 * rewrite is uniform over all kinds: with S the region and ŵ the weight
 * matched to the old facets, the move subtracts the boundary of ŵ·S, which
 * cancels the old star and deposits the opposite side with coherent signs.
 */
inline ChainMove apply_move_to_chain(const SimplicialChain& chain, const MoveSpec& spec)
{
    const int card = chain.cardinality();
    if (card != 3 && card != 4)
        raise(errc::move_not_applicable,
              "bistellar moves are supported in dimensions 2 and 3 only");
    const int dim = card - 1;
    const int i = spec.kind.first;
    const int j = spec.kind.second;
    if (i < 0 || j < 0 || i + j != dim)
        raise(errc::move_not_applicable,
              "move kind (" + std::to_string(i) + "," + std::to_string(j) +
                  ") does not fit a dimension-" + std::to_string(dim) + " chain");

    Simplex target = spec.target;
    std::sort(target.begin(), target.end());
    if (static_cast<int>(target.size()) != j + 1)
        raise(errc::move_not_applicable, "move target has the wrong cardinality");
    check_simplex(target, chain.m(), j + 1);
    if (spec.new_vertex && i != 0)
        raise(errc::invalid_input, "only insertion moves take a new vertex");

    // Star of the target face among the supported facets.
    std::vector<Simplex> star;
    for (auto& [s, w] : chain.weights())
        if (std::includes(s.begin(), s.end(), target.begin(), target.end()))
            star.push_back(s);
    if (static_cast<int>(star.size()) != i + 1)
        raise(errc::move_not_applicable,
              "target star has " + std::to_string(star.size()) + " facets, expected " +
                  std::to_string(i + 1));

    // Opposite face B: the inserted vertex, or the star's other vertices.
    Simplex B;
    if (i == 0) {
        if (!spec.new_vertex)
            raise(errc::move_not_applicable, "insertion move needs a new vertex index");
        if (*spec.new_vertex < 1)
            raise(errc::invalid_input, "vertex indices are 1-based");
        B.push_back(*spec.new_vertex);
    } else {
        std::set<int> rest;
        for (const auto& f : star) rest.insert(f.begin(), f.end());
        for (int v : target) rest.erase(v);
        B.assign(rest.begin(), rest.end());
        if (static_cast<int>(B.size()) != i + 1)
            raise(errc::move_not_applicable,
                  "target star is not clustered on " + std::to_string(dim + 2) +
                      " vertices");
    }

    // The face to be created must not already exist anywhere in the support
    // (for insertions this says the new vertex is unused).
    for (auto& [s, w] : chain.weights())
        if (std::includes(s.begin(), s.end(), B.begin(), B.end()))
            raise(errc::move_not_applicable,
                  "the face the move would create is already present");

    Simplex S = target;
    S.insert(S.end(), B.begin(), B.end());
    std::sort(S.begin(), S.end());
    if (static_cast<int>(S.size()) != dim + 2)
        raise(errc::move_not_applicable, "move region does not span dim+2 vertices");

    const auto sign_at = [&S](int v) {
        const auto pos = std::lower_bound(S.begin(), S.end(), v) - S.begin();
        return pos % 2 == 0 ? 1 : -1;
    };

    // Weight of the enclosing simplex, matched against every old facet.
    std::optional<Rational> top_weight;
    for (int b : B) {
        Simplex F = S;
        F.erase(std::find(F.begin(), F.end(), b));
        const Rational w = chain.weight(F);
        if (w != 1 && w != -1)
            raise(errc::move_not_applicable,
                  "facet weights at the move site are not +/-1");
        const Rational candidate = w * sign_at(b);
        if (top_weight && *top_weight != candidate)
            raise(errc::move_not_applicable,
                  "facet orientations at the move site are incoherent");
        top_weight = candidate;
    }

    const int new_m = std::max(chain.m(), S.back());
    SimplicialChain top(new_m, card + 1);
    top.add(S, *top_weight);

    ChainMove out{chain.with_ambient(new_m) - boundary(top), {}, {}, {}};
    out.removed_facets = std::move(star);
    out.region = S;
    for (int a : target) {
        Simplex F = S;
        F.erase(std::find(F.begin(), F.end(), a));
        out.added_facets.push_back(std::move(F));
    }
    if (!is_cycle(out.result))
        raise(errc::not_a_cycle, "move broke the cycle condition");
    return out;
}

namespace detail {

/**
 * Fills values[nv-1] so that every supported facet of `chain` containing nv
 * is nondegenerate: a supplied value is checked, otherwise seeded integer
 * draws with a doubling coordinate bound are tried.
 */
inline void assign_inserted_value(const SimplicialChain& chain,
                                  std::vector<RationalVector>& values, int n,
                                  int nv, std::optional<RationalVector> new_lambda,
                                  std::uint64_t seed)
{
    std::vector<Simplex> joined;
    for (auto& [s, w] : chain.weights())
        if (std::binary_search(s.begin(), s.end(), nv)) joined.push_back(s);

    const auto admissible = [&](const RationalVector& val) {
        values[nv - 1] = val;
        const CharacteristicFunction trial(n, values);
        for (const auto& F : joined)
            if (determinant(trial.matrix(F)) == 0) return false;
        return true;
    };
    if (new_lambda) {
        if (static_cast<int>(new_lambda->size()) != n)
            raise(errc::dimension_mismatch, "new vertex value has wrong length");
        if (!admissible(*new_lambda))
            raise(errc::degenerate_coloring,
                  "supplied value is degenerate on a facet the move creates");
        return;
    }
    Rng rng(seed);
    long long bound = 8;
    for (int attempt = 0; attempt < 32; ++attempt) {
        if (admissible(rng.integer_vector(n, bound))) return;
        if (bound < (1LL << 40)) bound *= 2;
    }
    raise(errc::genericity_exhausted,
          "no generic value found for the inserted vertex");
}

}  // namespace detail

/**
 * Bistellar move on a multi-fan.  An inserted vertex receives the supplied
 * value or seeded random draws until all facets it joins are nondegenerate;
 * the move clears any apex marking, since a move may break the suspension
 * shape (suspended_move restores it).
 */
inline MultiFan apply_move(const MultiFan& fan, const MoveSpec& spec,
                           std::optional<RationalVector> new_lambda = std::nullopt,
                           std::uint64_t seed = kDefaultSeed)
{
    const ChainMove step = apply_move_to_chain(fan.cycle(), spec);
    const int n = fan.n();
    std::vector<RationalVector> values;
    values.reserve(step.result.m());
    for (int v = 1; v <= fan.m(); ++v) values.push_back(fan.coloring().value(v));
    values.resize(step.result.m(), RationalVector(n, 0));

    if (spec.new_vertex)
        detail::assign_inserted_value(step.result, values, n, *spec.new_vertex,
                                      std::move(new_lambda), seed);
    return MultiFan(step.result, CharacteristicFunction(n, std::move(values)));
}

/**
 * Suspension of a 2-dimensional move, realized as a composite of
 * 3-dimensional moves on a suspension-shaped fan with apices (x, y):
 *
 *   Σ(0,2) at facet T:  (0,3) into T∪{y}, then (1,2) across T;
 *   Σ(1,1) at edge A:   (1,2) across A∪{x}, then (2,1) around A;
 *   Σ(2,0) at vertex v: (2,1) around {v,x}, then (3,0) at v.
 *
 * The intermediate complex contains a facet spanned by base vertices only,
 * which no suspension coloring can keep nondegenerate, so the composite runs
 * on the weighted chain and the fan (with its apex marking) is rebuilt and
 * revalidated once at the end.
 */
inline MultiFan suspended_move(const MultiFan& fan, const MoveSpec& base_spec,
                               std::optional<RationalVector> new_lambda = std::nullopt,
                               std::uint64_t seed = kDefaultSeed)
{
    if (!fan.apices())
        raise(errc::not_suspension_shaped,
              "suspended moves need a suspension-shaped fan with marked apices");
    if (fan.cycle().cardinality() != 4)
        raise(errc::move_not_applicable, "suspended moves act on 3-dimensional fans");
    const auto [x, y] = *fan.apices();
    const int i = base_spec.kind.first;
    if (i < 0 || base_spec.kind.second < 0 || i + base_spec.kind.second != 2)
        raise(errc::move_not_applicable, "the base move must be 2-dimensional");
    Simplex T = base_spec.target;
    std::sort(T.begin(), T.end());
    for (int v : T)
        if (v == x || v == y)
            raise(errc::move_not_applicable, "base move target must avoid the apices");

    const auto extend = [](Simplex s, int extra) {
        s.push_back(extra);
        std::sort(s.begin(), s.end());
        return s;
    };

    SimplicialChain chain = fan.cycle();
    std::optional<int> inserted;
    if (i == 0) {
        MoveSpec insert;
        insert.kind = {0, 3};
        insert.target = extend(T, y);
        insert.new_vertex = base_spec.new_vertex ? *base_spec.new_vertex : fan.m() + 1;
        chain = apply_move_to_chain(chain, insert).result;
        chain = apply_move_to_chain(chain, MoveSpec{{1, 2}, T, std::nullopt}).result;
        inserted = *insert.new_vertex;
    } else if (i == 1) {
        chain = apply_move_to_chain(chain, MoveSpec{{1, 2}, extend(T, x), std::nullopt})
                    .result;
        chain = apply_move_to_chain(chain, MoveSpec{{2, 1}, T, std::nullopt}).result;
    } else {
        chain = apply_move_to_chain(chain, MoveSpec{{2, 1}, extend(T, x), std::nullopt})
                    .result;
        chain = apply_move_to_chain(chain, MoveSpec{{3, 0}, T, std::nullopt}).result;
    }

    const int n = fan.n();
    std::vector<RationalVector> values;
    values.reserve(chain.m());
    for (int v = 1; v <= fan.m(); ++v) values.push_back(fan.coloring().value(v));
    values.resize(chain.m(), RationalVector(n, 0));
    if (inserted)
        detail::assign_inserted_value(chain, values, n, *inserted,
                                      std::move(new_lambda), seed);
    return MultiFan(std::move(chain), CharacteristicFunction(n, std::move(values)),
                    std::make_pair(x, y));
}

/// A random move sequence together with its log.
struct RandomMovesResult {
    MultiFan fan;
    std::vector<MoveSpec> applied;
};

/**
 * Applies `count` randomly drawn applicable moves, skipping draws that are
 * inapplicable or whose region touches a non-smooth vertex (moves happen
 * outside singularities, which keeps singular links — and the invariants
 * derived from them — intact).  Inserted vertices always get the next fresh
 * index and a random generic value.
 */
inline RandomMovesResult random_moves(const MultiFan& start, int count,
                                      std::uint64_t seed = kDefaultSeed)
{
    const int card = start.cycle().cardinality();
    if (card != 3 && card != 4)
        raise(errc::move_not_applicable,
              "bistellar moves are supported in dimensions 2 and 3 only");
    if (count < 0) raise(errc::invalid_input, "negative move count");
    const int dim = card - 1;

    RandomMovesResult out{start, {}};
    Rng rng(seed);
    std::set<int> singular;
    bool singular_stale = true;
    const int max_attempts = 200 * std::max(count, 1) + 100;
    for (int attempt = 0;
         attempt < max_attempts && static_cast<int>(out.applied.size()) < count;
         ++attempt) {
        if (singular_stale) {
            singular.clear();
            for (int v : out.fan.cycle().support_vertices())
                if (!is_smooth_vertex(out.fan.cycle(), v)) singular.insert(v);
            singular_stale = false;
        }

        MoveSpec spec;
        const int i = static_cast<int>(rng.uniform(0, dim));
        spec.kind = {i, dim - i};

        const auto& weights = out.fan.cycle().weights();
        auto it = weights.begin();
        std::advance(it, rng.uniform(0, static_cast<long long>(weights.size()) - 1));
        Simplex facet = it->first;
        if (i == 0) {
            spec.target = facet;
            spec.new_vertex = out.fan.m() + 1;
        } else {
            while (static_cast<int>(facet.size()) > dim - i + 1)
                facet.erase(facet.begin() +
                            rng.uniform(0, static_cast<long long>(facet.size()) - 1));
            spec.target = facet;
        }

        try {
            const ChainMove planned = apply_move_to_chain(out.fan.cycle(), spec);
            bool touches_singular = false;
            for (int v : planned.region)
                if (singular.count(v)) {
                    touches_singular = true;
                    break;
                }
            if (touches_singular) continue;
            out.fan = apply_move(out.fan, spec, std::nullopt, rng.next());
            out.applied.push_back(spec);
            singular_stale = true;
        } catch (const FanError& e) {
            if (e.code() == errc::move_not_applicable ||
                e.code() == errc::degenerate_coloring ||
                e.code() == errc::genericity_exhausted)
                continue;
            throw;
        }
    }
    return out;
}

}  // namespace multifan
