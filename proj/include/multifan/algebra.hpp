#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "fan.hpp"
#include "linalg.hpp"
#include "polynomial.hpp"
#include "volume.hpp"

namespace multifan {

/// Options shared by the algebra computations.
struct AlgebraOptions {
    RankMethod rank_method = RankMethod::exact;
    std::uint64_t seed = kDefaultSeed;
};

namespace detail {

/// Sorted multisets of size k over {1..m}, ascending lexicographically; the
/// corresponding degree-k monomials then run in graded-lex order leading
/// term first, which fixes deterministic matrices.
inline std::vector<std::vector<int>> multisets(int m, int k)
{
    std::vector<std::vector<int>> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (m <= 0) return out;
    std::vector<int> cur(k, 1);
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == m) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[i];
    }
    return out;
}

inline std::vector<Monomial> degree_monomials(int m, int k)
{
    std::vector<Monomial> out;
    for (auto& t : multisets(m, k)) out.push_back(Monomial::from_multiset(t));
    return out;
}

}  // namespace detail

/**
 * Span of the order-j partial derivatives of p: the matrix has one row per
 * derivative multiset and one column per monomial of the complementary
 * degree, both in graded-lex order.  Its rank is the dimension d_j of the
 * degree-2j part of the quotient algebra D/Ann(p).
 */
struct DerivativeSpace {
    int order = 0;
    std::vector<std::vector<int>> multisets;
    std::vector<Monomial> column_monomials;
    RationalMatrix matrix;
    std::size_t rank = 0;
};

inline DerivativeSpace derivative_space(const SparsePolynomial& p, int j,
                                        const AlgebraOptions& opts = {})
{
    if (j < 0) raise(errc::invalid_input, "negative derivative order");
    const int m = p.nvars();
    const auto degree = p.homogeneous_degree();
    DerivativeSpace out;
    out.order = j;
    out.multisets = detail::multisets(m, j);
    const int target = degree ? *degree - j : -1;
    if (!p.is_zero() && target >= 0)
        out.column_monomials = detail::degree_monomials(m, target);
    out.matrix = RationalMatrix(out.multisets.size(), out.column_monomials.size());
    for (std::size_t r = 0; r < out.multisets.size(); ++r) {
        const SparsePolynomial d = differentiate(p, out.multisets[r]);
        for (std::size_t c = 0; c < out.column_monomials.size(); ++c)
            out.matrix(r, c) = d.coefficient(out.column_monomials[c]);
    }
    out.rank = rank(out.matrix, opts.rank_method, opts.seed);
    return out;
}

/// Dimension of the span of the order-j partials of p.
inline long long var_dimension(const SparsePolynomial& p, int j,
                               const AlgebraOptions& opts = {})
{
    if (p.is_zero()) return 0;
    const auto degree = p.homogeneous_degree();
    if (degree) {
        if (j > *degree) return 0;
        if (j == 0 || j == *degree) return 1;  // span{p} resp. the constants
    }
    return static_cast<long long>(derivative_space(p, j, opts).rank);
}

/**
 * Dimension vector (d_0, ..., d_n) of the Poincaré duality algebra attached
 * to a degree-n volume polynomial.  The vector must come out palindromic
 * with d_0 = d_n = 1; a violation signals an internal arithmetic fault, not
 * bad input, and is raised as such.
 */
struct DVector {
    IntegerVector d;

    bool operator==(const DVector& o) const { return d == o.d; }
    bool operator!=(const DVector& o) const { return d != o.d; }
    bool operator<(const DVector& o) const { return d < o.d; }

    std::string str() const
    {
        std::string out = "(";
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (i) out += ", ";
            out += std::to_string(d[i]);
        }
        return out + ")";
    }
};

inline DVector d_vector_of(const SparsePolynomial& V, int n,
                           const AlgebraOptions& opts = {})
{
    if (V.is_zero())
        raise(errc::zero_volume_polynomial,
              "the zero polynomial has no duality algebra");
    DVector out;
    out.d.resize(n + 1);
    for (int j = 0; j <= n; ++j) out.d[j] = var_dimension(V, j, opts);
    for (int j = 0; j <= n; ++j)
        if (out.d[j] != out.d[n - j] || out.d[0] != 1)
            raise(errc::symmetry_violation,
                  "dimension vector is not palindromic: " + out.str());
    return out;
}

inline DVector d_vector(const MultiFan& fan, const AlgebraOptions& opts = {})
{
    return d_vector_of(volume_polynomial(fan, std::nullopt, opts.seed), fan.n(), opts);
}

/**
 * Hilbert function of the duality algebra, a polynomial in t with the d_j
 * sitting in degree 2j (all odd components vanish).
 */
struct HilbertFunction {
    DVector d;

    bool operator==(const HilbertFunction& o) const { return d == o.d; }

    std::string str() const
    {
        if (d.d.empty()) return "0";
        std::string out;
        for (std::size_t j = 0; j < d.d.size(); ++j) {
            if (d.d[j] == 0) continue;
            std::string term;
            if (j == 0)
                term = std::to_string(d.d[j]);
            else {
                if (d.d[j] != 1) term = std::to_string(d.d[j]);
                term += "t^" + std::to_string(2 * j);
            }
            out += out.empty() ? term : " + " + term;
        }
        return out.empty() ? "0" : out;
    }
};

inline HilbertFunction hilbert(const MultiFan& fan, const AlgebraOptions& opts = {})
{
    return {d_vector(fan, opts)};
}

/// Convolution of Hilbert functions (the join multiplies them).
inline HilbertFunction convolve(const HilbertFunction& a, const HilbertFunction& b)
{
    IntegerVector out(a.d.d.size() + b.d.d.size() - 1, 0);
    for (std::size_t i = 0; i < a.d.d.size(); ++i)
        for (std::size_t j = 0; j < b.d.d.size(); ++j)
            out[i + j] += a.d.d[i] * b.d.d[j];
    return {DVector{out}};
}

/**
 * Canonical basis of the degree-j annihilator of V: all operator
 * polynomials of degree j in d1..dm killing V, one basis vector per free
 * column of the echelonized relation system.  Its size plus d_j equals the
 * number of degree-j operator monomials.
 */
inline std::vector<SparsePolynomial> annihilator_basis(const SparsePolynomial& V,
                                                       int j,
                                                       const AlgebraOptions& opts = {})
{
    const DerivativeSpace space = derivative_space(V, j, opts);
    const auto relations = kernel_basis(space.matrix.transposed());
    std::vector<SparsePolynomial> basis;
    for (const auto& u : relations) {
        SparsePolynomial op(V.nvars());
        for (std::size_t r = 0; r < space.multisets.size(); ++r)
            if (u[r] != 0)
                op.add_term(Monomial::from_multiset(space.multisets[r]), u[r]);
        basis.push_back(std::move(op));
    }
    return basis;
}

inline std::vector<SparsePolynomial> annihilator_basis(const MultiFan& fan, int j,
                                                       const AlgebraOptions& opts = {})
{
    return annihilator_basis(volume_polynomial(fan, std::nullopt, opts.seed), j, opts);
}

/// Two operators represent the same algebra element iff their difference
/// annihilates the volume polynomial.
inline bool classes_equal(const SparsePolynomial& V, const SparsePolynomial& op_a,
                          const SparsePolynomial& op_b)
{
    return apply_operator(op_a - op_b, V).is_zero();
}

inline bool classes_equal(const MultiFan& fan, const SparsePolynomial& op_a,
                          const SparsePolynomial& op_b,
                          const AlgebraOptions& opts = {})
{
    return classes_equal(volume_polynomial(fan, std::nullopt, opts.seed), op_a, op_b);
}

/**
 * Editability of a suspension-shaped fan with marked apices x, y: in each
 * degree the image of multiplication by ∂_y must fill the kernel of
 * multiplication by ∂_x.  Both dimensions come from derivative spans:
 *   dim im(·∂_y)_{2j}  = var_dimension(∂_y V, j-1)
 *   dim ker(·∂_x)_{2j} = d_j - var_dimension(∂_x V, j)   (rank-nullity).
 */
struct EditabilityDegree {
    int j = 0;
    long long dim_image = 0;
    long long dim_kernel = 0;
};

struct EditabilityReport {
    bool editable = false;
    std::vector<EditabilityDegree> degrees;
};

inline EditabilityReport is_editable(const MultiFan& fan,
                                     const AlgebraOptions& opts = {})
{
    if (!fan.apices())
        raise(errc::not_suspension_shaped,
              "editability needs a suspension-shaped fan with marked apices");
    const auto [x, y] = *fan.apices();
    const int n = fan.n();
    const SparsePolynomial V = volume_polynomial(fan, std::nullopt, opts.seed);
    const DVector d = d_vector_of(V, n, opts);
    const SparsePolynomial Vx = differentiate(V, x);
    const SparsePolynomial Vy = differentiate(V, y);
    if (!differentiate(Vx, y).is_zero())
        raise(errc::not_suspension_shaped,
              "the marked apices do not annihilate each other");

    EditabilityReport report;
    report.editable = true;
    for (int j = 0; j <= n; ++j) {
        EditabilityDegree deg;
        deg.j = j;
        deg.dim_image = (j == 0) ? 0 : var_dimension(Vy, j - 1, opts);
        deg.dim_kernel = d.d[j] - var_dimension(Vx, j, opts);
        if (deg.dim_image != deg.dim_kernel) report.editable = false;
        report.degrees.push_back(deg);
    }
    return report;
}

}  // namespace multifan
