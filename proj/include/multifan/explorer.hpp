#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "catalog.hpp"
#include "chain.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "fan.hpp"
#include "linalg.hpp"
#include "rng.hpp"

namespace multifan {

/**
 * Smooth/singular split of a cycle's supported vertices.  Pairs of singular
 * vertices sharing a simplex violate the standing isolation assumption the
 * stratum analysis relies on; they are reported, not fatal.
 */
struct SingularityReport {
    std::vector<int> smooth;
    std::vector<int> singular;
    std::vector<std::pair<int, int>> adjacent_singular_pairs;
};

inline SingularityReport singularity_report(const SimplicialChain& cycle)
{
    SingularityReport report;
    for (int v : cycle.support_vertices()) {
        if (is_smooth_vertex(cycle, v))
            report.smooth.push_back(v);
        else
            report.singular.push_back(v);
    }
    for (std::size_t i = 0; i < report.singular.size(); ++i)
        for (std::size_t j = i + 1; j < report.singular.size(); ++j) {
            const int u = report.singular[i];
            const int w = report.singular[j];
            for (auto& [s, wt] : cycle.weights())
                if (std::binary_search(s.begin(), s.end(), u) &&
                    std::binary_search(s.begin(), s.end(), w)) {
                    report.adjacent_singular_pairs.emplace_back(u, w);
                    break;
                }
        }
    return report;
}

inline std::vector<int> singular_vertices(const SimplicialChain& cycle)
{
    return singularity_report(cycle).singular;
}

inline std::vector<int> singular_vertices(const MultiFan& fan)
{
    return singular_vertices(fan.cycle());
}

/**
 * One coloring stratum at the singular vertices: a partition into
 * collinearity classes (vertices in one class share a line) together with
 * the rank of the class lines.  One class forces rank 1; c distinct classes
 * allow any rank from 2 to min(c, n).
 */
struct StratumSpec {
    std::vector<std::vector<int>> classes;
    int rank = 0;

    std::string str() const
    {
        std::string out = "classes ";
        if (classes.empty()) out += "none";
        for (std::size_t i = 0; i < classes.size(); ++i) {
            if (i) out += " | ";
            out += "{";
            for (std::size_t j = 0; j < classes[i].size(); ++j) {
                if (j) out += ",";
                out += std::to_string(classes[i][j]);
            }
            out += "}";
        }
        out += ", rank " + std::to_string(rank);
        return out;
    }
};

/**
 * All strata for up to three singular vertices, one representative per
 * partition shape (strata are taken up to permuting the singular points, as
 * in the case analysis this mirrors): 0 points → 1 empty stratum, 1 → 1,
 * 2 → 2 (collinear / independent), 3 → 4.
 */
inline std::vector<StratumSpec> enumerate_strata(const std::vector<int>& singular,
                                                 int n)
{
    const int k = static_cast<int>(singular.size());
    if (k > 3)
        raise(errc::too_many_singular_points,
              "exhaustive stratum enumeration covers at most 3 singular vertices");
    if (n < 1) raise(errc::invalid_input, "ambient dimension must be positive");
    std::vector<int> sorted = singular;
    std::sort(sorted.begin(), sorted.end());

    // Partition shapes of k elements, canonically labeled in vertex order.
    std::vector<std::vector<std::vector<int>>> partitions;
    if (k == 0) {
        partitions.push_back({});
    } else if (k == 1) {
        partitions.push_back({{sorted[0]}});
    } else if (k == 2) {
        partitions.push_back({{sorted[0], sorted[1]}});
        partitions.push_back({{sorted[0]}, {sorted[1]}});
    } else {
        partitions.push_back({{sorted[0], sorted[1], sorted[2]}});
        partitions.push_back({{sorted[0], sorted[1]}, {sorted[2]}});
        partitions.push_back({{sorted[0]}, {sorted[1]}, {sorted[2]}});
    }

    std::vector<StratumSpec> out;
    for (auto& classes : partitions) {
        const int c = static_cast<int>(classes.size());
        if (c == 0) {
            out.push_back({classes, 0});
        } else if (c == 1) {
            out.push_back({classes, 1});
        } else {
            for (int r = 2; r <= std::min(c, n); ++r) out.push_back({classes, r});
        }
    }
    return out;
}

/**
 * Small-integer representative values realizing a stratum: the first `rank`
 * classes take e_1..e_rank, later classes take e_1 + t·e_2 — pairwise
 * independent vectors confined to the first two coordinates, so the total
 * rank stays exactly as declared (verified by a rank computation).
 */
inline std::map<int, RationalVector> stratum_values(const StratumSpec& spec, int n)
{
    const int c = static_cast<int>(spec.classes.size());
    if (c == 0) return {};
    if (spec.rank < 1 || spec.rank > n || spec.rank > c ||
        (c > 1 && spec.rank < 2))
        raise(errc::invalid_input, "unrealizable stratum rank pattern");
    std::vector<RationalVector> reps;
    for (int i = 0; i < c; ++i) {
        RationalVector v(n, 0);
        if (i < spec.rank) {
            v[i] = 1;
        } else {
            v[0] = 1;
            v[1] = i - spec.rank + 1;
        }
        reps.push_back(std::move(v));
    }
    if (static_cast<int>(rank(RationalMatrix::from_columns(reps))) != spec.rank)
        raise(errc::invalid_input, "stratum representatives missed the target rank");
    std::map<int, RationalVector> out;
    for (int i = 0; i < c; ++i)
        for (int v : spec.classes[i]) out[v] = reps[i];
    return out;
}

/// Sampling results for one stratum.
struct StratumReport {
    StratumSpec spec;
    std::vector<DVector> samples;
    bool agreement = true;
};

/// Full r-invariant estimation report.
struct RxReport {
    SingularityReport singularities;
    std::vector<StratumReport> strata;
    std::vector<DVector> distinct;
    int r = 0;
    int samples_per_stratum = 0;
    std::uint64_t seed = 0;
};

struct RxOptions {
    int samples_per_stratum = 3;
    std::uint64_t seed = kDefaultSeed;
    /// When set, a stratum whose samples disagree raises instead of being
    /// flagged and excluded from the r count.
    bool strict = false;
};

namespace detail {

/// Checks that a chain is the fundamental cycle of a connected closed
/// pseudomanifold: ±1 weights, every ridge in exactly two facets, zero
/// boundary.
inline void check_fundamental_cycle(const SimplicialChain& cycle)
{
    if (cycle.is_zero() || cycle.cardinality() < 2)
        raise(errc::invalid_input, "expected a nonzero cycle of dimension >= 1");
    for (auto& [s, w] : cycle.weights())
        if (w != 1 && w != -1)
            raise(errc::invalid_input, "fundamental cycles have +/-1 weights");
    const SimplicialComplex support = support_complex(cycle);
    if (!detail::is_closed_pseudomanifold(support))
        raise(errc::invalid_input, "support is not a closed pseudomanifold");
    if (!detail::is_connected(support))
        raise(errc::invalid_input, "support is not connected");
    if (!is_cycle(cycle)) raise(errc::not_a_cycle, "chain has nonzero boundary");
}

/// Draws random values for the given vertices until the fan is valid
/// (nondegenerate on every supported simplex), with fixed values elsewhere.
inline MultiFan sample_fan(const SimplicialChain& cycle, int n,
                           const std::map<int, RationalVector>& fixed, Rng& rng)
{
    long long bound = 8;
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<RationalVector> values;
        values.reserve(cycle.m());
        for (int v = 1; v <= cycle.m(); ++v) {
            auto it = fixed.find(v);
            if (it != fixed.end())
                values.push_back(it->second);
            else
                values.push_back(rng.integer_vector(n, bound));
        }
        try {
            return new_multifan(cycle, CharacteristicFunction(n, std::move(values)));
        } catch (const FanError& e) {
            if (e.code() != errc::degenerate_coloring) throw;
        }
        if (bound < (1LL << 40)) bound *= 2;
    }
    raise(errc::genericity_exhausted,
          "no generic coloring found for the sampled stratum");
}

}  // namespace detail

/**
 * Estimates r(X) for the pseudomanifold carrying the given fundamental
 * cycle: enumerate the coloring strata at the singular vertices, sample
 * several generic colorings per stratum, and count the distinct dimension
 * vectors.  A stratum whose samples disagree is reported (or raises, in
 * strict mode) and never contributes to the count.
 */
inline RxReport r_invariant(const SimplicialChain& cycle, const RxOptions& opts = {})
{
    detail::check_fundamental_cycle(cycle);
    const int n = cycle.cardinality();

    RxReport report;
    report.samples_per_stratum = opts.samples_per_stratum;
    report.seed = opts.seed;
    report.singularities = singularity_report(cycle);
    const auto strata = enumerate_strata(report.singularities.singular, n);

    Rng rng(opts.seed);
    for (const auto& spec : strata) {
        StratumReport sr;
        sr.spec = spec;
        const auto fixed = stratum_values(spec, n);
        for (int s = 0; s < opts.samples_per_stratum; ++s) {
            const MultiFan fan = detail::sample_fan(cycle, n, fixed, rng);
            AlgebraOptions aopts;
            aopts.seed = rng.next();
            sr.samples.push_back(d_vector(fan, aopts));
        }
        for (const auto& d : sr.samples)
            if (!(d == sr.samples.front())) sr.agreement = false;
        if (!sr.agreement && opts.strict)
            raise(errc::sample_disagreement,
                  "stratum " + spec.str() + " produced different dimension vectors");
        report.strata.push_back(std::move(sr));
    }

    for (const auto& sr : report.strata) {
        if (!sr.agreement) continue;
        const DVector& d = sr.samples.front();
        bool seen = false;
        for (const auto& known : report.distinct)
            if (known == d) {
                seen = true;
                break;
            }
        if (!seen) report.distinct.push_back(d);
    }
    report.r = static_cast<int>(report.distinct.size());
    return report;
}

}  // namespace multifan
