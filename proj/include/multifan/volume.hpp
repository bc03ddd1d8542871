#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "fan.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace multifan {

/// Candidate polarization vector together with its genericity status.
struct PolarizationVector {
    RationalVector v;
    bool verified = false;
};

/**
 * One cone's data relative to a polarization v: simplex I = {i1<...<in},
 * cycle weight, det of the value matrix, and the coordinates α of v in the
 * basis (λ(i1),...,λ(in)).  Genericity of v means every α entry is nonzero.
 */
struct ConeTerm {
    Simplex simplex;
    Rational weight;
    Rational det;
    RationalVector alpha;
};

inline std::vector<ConeTerm> cone_terms(const MultiFan& fan, const RationalVector& v)
{
    if (static_cast<int>(v.size()) != fan.n())
        raise(errc::dimension_mismatch, "polarization vector has wrong length");
    std::vector<ConeTerm> terms;
    for (auto& [s, w] : fan.cycle().weights()) {
        if (s.empty()) continue;
        const RationalMatrix M = fan.coloring().matrix(s);
        ConeTerm t{s, w, determinant(M), solve(M, v)};
        for (const auto& a : t.alpha)
            if (a == 0)
                raise(errc::non_generic_polarization,
                      "polarization lies on a cone's coordinate hyperplane");
        terms.push_back(std::move(t));
    }
    return terms;
}

inline bool is_generic_polarization(const MultiFan& fan, const RationalVector& v)
{
    try {
        cone_terms(fan, v);
        return true;
    } catch (const FanError& e) {
        if (e.code() == errc::non_generic_polarization) return false;
        throw;
    }
}

/**
 * Draws integer polarization vectors until one is generic for the fan.  The
 * coordinate bound doubles on every failed draw; after 32 failures the
 * search gives up (that would indicate something badly degenerate, since
 * non-generic vectors lie on finitely many hyperplanes).
 */
inline PolarizationVector find_generic_polarization(const MultiFan& fan,
                                                    std::uint64_t seed = kDefaultSeed)
{
    Rng rng(seed);
    long long bound = 8;
    for (int attempt = 0; attempt < 32; ++attempt) {
        RationalVector v = rng.integer_vector(fan.n(), bound);
        if (is_generic_polarization(fan, v)) return {std::move(v), true};
        if (bound < (1LL << 40)) bound *= 2;
    }
    raise(errc::genericity_exhausted,
          "no generic polarization found within the retry budget");
}

/**
 * Volume polynomial: with α the coordinates of a generic v on each supported
 * simplex I,
 *
 *   V = (1/n!) Σ_I  w(I) / (det λ(I) · Π_j α_j) · (α_1 c_{i1} + ... + α_n c_{in})^n.
 *
 * The determinant enters with its sign — weights of the oriented cycle and
 * cone orientations combine so that the result does not depend on v (the
 * polarization-independence property is part of the test suite).  The
 * degenerate cases: an ambient dimension of zero gives the constant total
 * weight, the zero cycle gives the zero polynomial.
 */
inline SparsePolynomial volume_polynomial(
    const MultiFan& fan, std::optional<RationalVector> polarization = std::nullopt,
    std::uint64_t seed = kDefaultSeed)
{
    const int n = fan.n();
    const int m = fan.m();
    if (n == 0) {
        Simplex empty;
        return SparsePolynomial::constant(m, fan.cycle().weight(empty));
    }
    if (fan.cycle().is_zero()) return SparsePolynomial(m);

    RationalVector v;
    if (polarization) {
        v = std::move(*polarization);
        if (!is_generic_polarization(fan, v))
            raise(errc::non_generic_polarization,
                  "supplied polarization vector is not generic for this fan");
    } else {
        v = find_generic_polarization(fan, seed).v;
    }

    Rational factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;

    SparsePolynomial V(m);
    for (const ConeTerm& t : cone_terms(fan, v)) {
        SparsePolynomial form(m);
        Rational alpha_product = 1;
        for (std::size_t j = 0; j < t.simplex.size(); ++j) {
            form.add_term(Monomial::variable(t.simplex[j]), t.alpha[j]);
            alpha_product *= t.alpha[j];
        }
        const Rational scale = t.weight / (t.det * alpha_product * factorial);
        V = V + form.pow(n) * scale;
    }
    return V;
}

/// Evaluates a volume polynomial at concrete support numbers.
inline Rational evaluate_volume(const SparsePolynomial& V, const RationalVector& c)
{
    return V.evaluate(c);
}

/// Convenience: volume of the multi-polytope with support numbers c.
inline Rational evaluate_volume(const MultiFan& fan, const RationalVector& c,
                                std::uint64_t seed = kDefaultSeed)
{
    return volume_polynomial(fan, std::nullopt, seed).evaluate(c);
}

/**
 * Iterated partial derivative ∂_J for a multiset J of vertex indices.  When
 * J is a set that is not a face of the fan's support the derivative of the
 * volume polynomial vanishes identically.
 */
inline SparsePolynomial derivative_by_set(const SparsePolynomial& V,
                                          const std::vector<int>& J)
{
    return differentiate(V, J);
}

}  // namespace multifan
