#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "rng.hpp"

namespace multifan {

/**
 * Dense matrix over the rationals.  All eliminations used on it are exact;
 * there is no floating point anywhere in the library.
 */
class RationalMatrix {
public:
    RationalMatrix() = default;

    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols)
    {
    }

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows)
    {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.front().size() : 0;
        RationalMatrix M(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c)
                raise(errc::dimension_mismatch, "ragged rows in matrix");
            for (std::size_t j = 0; j < c; ++j) M(i, j) = rows[i][j];
        }
        return M;
    }

    static RationalMatrix from_columns(const std::vector<RationalVector>& cols)
    {
        return from_rows(cols).transposed();
    }

    static RationalMatrix identity(std::size_t n)
    {
        RationalMatrix M(n, n);
        for (std::size_t i = 0; i < n; ++i) M(i, i) = 1;
        return M;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const
    {
        return data_[i * cols_ + j];
    }

    RationalMatrix transposed() const
    {
        RationalMatrix T(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
        return T;
    }

    RationalVector row(std::size_t i) const
    {
        RationalVector v(cols_);
        for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
        return v;
    }

    bool operator==(const RationalMatrix& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> data_;
};

enum class RankMethod {
    exact,     ///< fraction-free elimination over scaled integer rows
    adaptive,  ///< two modular probes, exact fallback on disagreement
};

namespace detail {

/// Clears denominators row by row, returning an integer matrix with the same
/// row space (each row is multiplied by the lcm of its denominators).
inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& M)
{
    std::vector<std::vector<Integer>> out(M.rows(), std::vector<Integer>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < M.cols(); ++j)
            l = lcm(l, denominator(M(i, j)));
        for (std::size_t j = 0; j < M.cols(); ++j)
            out[i][j] = numerator(M(i, j)) * (l / denominator(M(i, j)));
    }
    return out;
}

/**
 * Rank by fraction-free (Bareiss) elimination.  Intermediate entries are
 * minors of the input, so every division below is exact and coefficient
 * growth stays polynomial in the bit size of the input.
 */
inline std::size_t rank_bareiss(std::vector<std::vector<Integer>> M)
{
    const std::size_t rows = M.size();
    const std::size_t cols = rows ? M.front().size() : 0;
    Integer prev = 1;
    std::size_t r = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M[p][c] == 0) ++p;
        if (p == rows) continue;
        if (p != r) std::swap(M[p], M[r]);
        const Integer pivot = M[r][c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                M[i][j] = (M[i][j] * pivot - M[i][c] * M[r][j]) / prev;
            M[i][c] = 0;
        }
        prev = pivot;
        ++r;
    }
    return r;
}

inline constexpr std::uint64_t kRankPrimes[] = {
    2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL,
    2147483563ULL, 2147483549ULL, 2147483543ULL, 2147483497ULL,
};

inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p)
{
    // Fermat: p is prime and a != 0 (mod p).
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

/// Rank over GF(p); returns false when some denominator vanishes mod p.
inline bool rank_mod_p(const RationalMatrix& A, std::uint64_t p, std::size_t& rank_out)
{
    const std::size_t rows = A.rows(), cols = A.cols();
    std::vector<std::vector<std::uint64_t>> M(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            const Integer num = numerator(A(i, j)) % Integer(p);
            const Integer den = denominator(A(i, j)) % Integer(p);
            if (den == 0) return false;
            std::uint64_t n =
                static_cast<std::uint64_t>(num >= 0 ? num : num + Integer(p));
            std::uint64_t d = static_cast<std::uint64_t>(den);
            M[i][j] = n * mod_inverse(d, p) % p;
        }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        const std::uint64_t inv = mod_inverse(M[r][c], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (M[i][c] == 0) continue;
            const std::uint64_t f = M[i][c] * inv % p;
            for (std::size_t j = c; j < cols; ++j)
                M[i][j] = (M[i][j] + (p - f) * M[r][j]) % p;
        }
        ++r;
    }
    rank_out = r;
    return true;
}

}  // namespace detail

/**
 * Exact rank.  The adaptive method probes two random word-size primes
 * (modular rank is a lower bound that is almost surely exact) and falls back
 * to the fraction-free elimination whenever the probes disagree.
 */
inline std::size_t rank(const RationalMatrix& M,
                        RankMethod method = RankMethod::exact,
                        std::uint64_t seed = kDefaultSeed)
{
    if (M.rows() == 0 || M.cols() == 0) return 0;
    if (method == RankMethod::adaptive) {
        Rng rng(seed);
        constexpr std::size_t n_primes =
            sizeof(detail::kRankPrimes) / sizeof(detail::kRankPrimes[0]);
        const std::size_t a = static_cast<std::size_t>(rng.next() % n_primes);
        std::size_t b = static_cast<std::size_t>(rng.next() % n_primes);
        if (b == a) b = (b + 1) % n_primes;
        std::size_t r1 = 0, r2 = 0;
        if (detail::rank_mod_p(M, detail::kRankPrimes[a], r1) &&
            detail::rank_mod_p(M, detail::kRankPrimes[b], r2) && r1 == r2)
            return r1;
    }
    return detail::rank_bareiss(detail::integer_rows(M));
}

/**
 * Reduced row echelon form (in place over a copy); returns the pivot columns.
 */
inline RationalMatrix rref(RationalMatrix M, std::vector<std::size_t>* pivots = nullptr)
{
    const std::size_t rows = M.rows(), cols = M.cols();
    std::size_t r = 0;
    std::vector<std::size_t> piv;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && M(p, c) == 0) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(M(p, j), M(r, j));
        const Rational inv = Rational(1) / M(r, c);
        for (std::size_t j = c; j < cols; ++j) M(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || M(i, c) == 0) continue;
            const Rational f = M(i, c);
            for (std::size_t j = c; j < cols; ++j) M(i, j) -= f * M(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    if (pivots) *pivots = std::move(piv);
    return M;
}

/**
 * Canonical basis of the right kernel {x : Mx = 0}, one vector per free
 * column of the reduced echelon form, free columns in increasing order.
 */
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& M)
{
    std::vector<std::size_t> pivots;
    const RationalMatrix R = rref(M, &pivots);
    const std::size_t cols = M.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RationalVector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        RationalVector v(cols);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -R(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Determinant of a square matrix by exact fraction-free elimination.
inline Rational determinant(const RationalMatrix& M)
{
    if (M.rows() != M.cols())
        raise(errc::dimension_mismatch, "determinant of a non-square matrix");
    const std::size_t n = M.rows();
    if (n == 0) return 1;
    Rational scale = 1;
    auto rowsI = detail::integer_rows(M);
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, denominator(M(i, j)));
        scale *= Rational(l);
    }
    // Bareiss: after full elimination the last pivot is det of the integer
    // matrix.
    Integer prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && rowsI[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(rowsI[p], rowsI[c]);
            sign = -sign;
        }
        const Integer pivot = rowsI[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                rowsI[i][j] = (rowsI[i][j] * pivot - rowsI[i][c] * rowsI[c][j]) / prev;
            rowsI[i][c] = 0;
        }
        prev = pivot;
    }
    return Rational(sign * rowsI[n - 1][n - 1]) / scale;
}

/// Solves Mx = b for square invertible M; raises SingularMatrix otherwise.
inline RationalVector solve(const RationalMatrix& M, const RationalVector& b)
{
    const std::size_t n = M.rows();
    if (M.cols() != n || b.size() != n)
        raise(errc::dimension_mismatch, "solve expects a square system");
    RationalMatrix A(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A(i, j) = M(i, j);
        A(i, n) = b[i];
    }
    std::vector<std::size_t> pivots;
    const RationalMatrix R = rref(A, &pivots);
    if (pivots.size() != n || pivots.back() == n)
        raise(errc::singular_matrix, "matrix is singular");
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = R(i, n);
    return x;
}

}  // namespace multifan
