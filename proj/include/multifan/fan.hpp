#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "chain.hpp"
#include "complex.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace multifan {

/**
 * Coloring of the vertex range 1..m by vectors in Q^n.  Every vertex carries
 * a value (ghosts included — they may become supported again after moves or
 * sums, and re-coloring constructions need values on both copies).
 */
class CharacteristicFunction {
public:
    CharacteristicFunction(int n, std::vector<RationalVector> values)
        : n_(n), values_(std::move(values))
    {
        if (n < 0) raise(errc::dimension_mismatch, "negative ambient dimension");
        for (const auto& v : values_)
            if (static_cast<int>(v.size()) != n_)
                raise(errc::dimension_mismatch, "coloring value has wrong length");
    }

    int n() const { return n_; }
    int m() const { return static_cast<int>(values_.size()); }

    const RationalVector& value(int vertex) const
    {
        if (vertex < 1 || vertex > m())
            raise(errc::invalid_input, "vertex index out of range");
        return values_[vertex - 1];
    }

    void set_value(int vertex, RationalVector v)
    {
        if (vertex < 1 || vertex > m())
            raise(errc::invalid_input, "vertex index out of range");
        if (static_cast<int>(v.size()) != n_)
            raise(errc::dimension_mismatch, "coloring value has wrong length");
        values_[vertex - 1] = std::move(v);
    }

    /// Matrix whose columns are the values of the simplex's vertices.
    RationalMatrix matrix(const Simplex& s) const
    {
        RationalMatrix M(n_, s.size());
        for (std::size_t j = 0; j < s.size(); ++j) {
            const RationalVector& col = value(s[j]);
            for (int i = 0; i < n_; ++i) M(i, j) = col[i];
        }
        return M;
    }

    bool operator==(const CharacteristicFunction& o) const
    {
        return n_ == o.n_ && values_ == o.values_;
    }

private:
    int n_;
    std::vector<RationalVector> values_;
};

/**
 * Complete simplicial multi-fan: a weighted (n-1)-cycle together with a
 * coloring that is nondegenerate on every supported simplex.  Optionally two
 * apices may be marked, which asserts a suspension shape: every supported
 * simplex contains exactly one apex and no simplex contains both.
 */
class MultiFan {
public:
    MultiFan(SimplicialChain cycle, CharacteristicFunction coloring,
             std::optional<std::pair<int, int>> apices = std::nullopt)
        : cycle_(std::move(cycle)), coloring_(std::move(coloring)), apices_(apices)
    {
        validate();
    }

    const SimplicialChain& cycle() const { return cycle_; }
    const CharacteristicFunction& coloring() const { return coloring_; }
    const std::optional<std::pair<int, int>>& apices() const { return apices_; }

    int n() const { return coloring_.n(); }
    int m() const { return cycle_.m(); }

    /// Number of vertices actually used by the support.
    int support_vertex_count() const
    {
        return static_cast<int>(cycle_.support_vertices().size());
    }

    MultiFan with_apices(int x, int y) const
    {
        return MultiFan(cycle_, coloring_, std::make_pair(x, y));
    }

    MultiFan with_cycle(SimplicialChain c) const
    {
        return MultiFan(std::move(c), coloring_, apices_);
    }

private:
    void validate() const
    {
        if (coloring_.m() != cycle_.m())
            raise(errc::dimension_mismatch,
                  "coloring covers a different vertex range than the cycle");
        if (cycle_.cardinality() != coloring_.n())
            raise(errc::dimension_mismatch,
                  "cycle cardinality does not match ambient dimension");
        if (!is_cycle(cycle_))
            raise(errc::not_a_cycle, "weighted chain has nonzero boundary");
        for (auto& [s, w] : cycle_.weights()) {
            if (s.empty()) continue;
            if (determinant(coloring_.matrix(s)) == 0)
                raise(errc::degenerate_coloring,
                      "coloring is degenerate on a supported simplex");
        }
        if (apices_) {
            const auto [x, y] = *apices_;
            if (x < 1 || x > m() || y < 1 || y > m() || x == y)
                raise(errc::invalid_input, "invalid apex pair");
            for (auto& [s, w] : cycle_.weights()) {
                const bool has_x = std::binary_search(s.begin(), s.end(), x);
                const bool has_y = std::binary_search(s.begin(), s.end(), y);
                if (has_x && has_y)
                    raise(errc::not_suspension_shaped,
                          "marked apices appear together in a simplex");
                if (!has_x && !has_y)
                    raise(errc::not_suspension_shaped,
                          "a supported simplex avoids both marked apices");
            }
        }
    }

    SimplicialChain cycle_;
    CharacteristicFunction coloring_;
    std::optional<std::pair<int, int>> apices_;
};

/// Convenience constructor used throughout tests and the CLI.
inline MultiFan new_multifan(SimplicialChain cycle, CharacteristicFunction coloring,
                             std::optional<std::pair<int, int>> apices = std::nullopt)
{
    return MultiFan(std::move(cycle), std::move(coloring), apices);
}

/**
 * Projection at a face J: the cycle becomes the (signed) link of J and every
 * coloring value is pushed to the quotient by span{λ(j) : j in J}.  The
 * quotient is realized through the lexicographically first coordinate subset
 * completing the face's values to a basis, so projected fans are canonical.
 * The ambient vertex range is kept; vertices outside the link become ghosts.
 */
inline MultiFan project(const MultiFan& fan, const Simplex& J)
{
    const int n = fan.n();
    const int k = static_cast<int>(J.size());
    if (k < 1 || k > n) raise(errc::invalid_input, "projection face size out of range");
    Simplex sorted = J;
    std::sort(sorted.begin(), sorted.end());
    bool supported = false;
    for (auto& [s, w] : fan.cycle().weights())
        if (std::includes(s.begin(), s.end(), sorted.begin(), sorted.end())) {
            supported = true;
            break;
        }
    if (!supported)
        raise(errc::invalid_input, "projection face is not in the support");

    // Columns: the |J| face values, then candidate coordinate vectors.
    std::vector<RationalVector> face_cols;
    for (int j : sorted) face_cols.push_back(fan.coloring().value(j));
    std::vector<int> complement;
    {
        std::vector<RationalVector> cols = face_cols;
        for (int c = 0; c < n && static_cast<int>(complement.size()) < n - k; ++c) {
            RationalVector e(n, 0);
            e[c] = 1;
            cols.push_back(e);
            if (rank(RationalMatrix::from_columns(cols)) ==
                cols.size()) {
                complement.push_back(c);
            } else {
                cols.pop_back();
            }
        }
        if (static_cast<int>(complement.size()) != n - k)
            raise(errc::degenerate_coloring, "face values are linearly dependent");
    }

    // Basis (λ(j1)..λ(jk), e_{c1}..e_{c_{n-k}}); the quotient coordinates of
    // a vector are its coefficients on the coordinate part.
    RationalMatrix B(n, n);
    for (int col = 0; col < k; ++col)
        for (int i = 0; i < n; ++i) B(i, col) = face_cols[col][i];
    for (int col = 0; col < n - k; ++col) B(complement[col], k + col) = 1;

    std::vector<RationalVector> new_values;
    for (int v = 1; v <= fan.m(); ++v) {
        const RationalVector coords = solve(B, fan.coloring().value(v));
        new_values.emplace_back(coords.begin() + k, coords.end());
    }

    SimplicialChain projected = link_cycle(fan.cycle(), sorted);
    return MultiFan(projected, CharacteristicFunction(n - k, std::move(new_values)));
}

/**
 * Join: vertex ranges concatenate, colorings embed block-diagonally, weights
 * multiply.  The volume polynomial of the join is the product of the two
 * volume polynomials (in disjoint variables).
 */
inline MultiFan join(const MultiFan& a, const MultiFan& b)
{
    SimplicialChain cycle = join_cycles(a.cycle(), b.cycle());
    std::vector<RationalVector> values;
    values.reserve(a.m() + b.m());
    for (int v = 1; v <= a.m(); ++v) {
        RationalVector x = a.coloring().value(v);
        x.resize(a.n() + b.n(), 0);
        values.push_back(std::move(x));
    }
    for (int v = 1; v <= b.m(); ++v) {
        RationalVector x(a.n() + b.n(), 0);
        const RationalVector& src = b.coloring().value(v);
        for (int i = 0; i < b.n(); ++i) x[a.n() + i] = src[i];
        values.push_back(std::move(x));
    }
    return MultiFan(std::move(cycle),
                    CharacteristicFunction(a.n() + b.n(), std::move(values)));
}

namespace detail {

inline void check_same_shape(const MultiFan& a, const MultiFan& b)
{
    if (a.n() != b.n())
        raise(errc::dimension_mismatch, "fans live in different ambient dimensions");
    if (a.m() != b.m())
        raise(errc::dimension_mismatch, "fans use different vertex ranges");
}

}  // namespace detail

/**
 * Sum of fans over the same vertex range.  Colorings must agree wherever
 * both fans actually use a vertex; elsewhere the first coloring wins (its
 * values are kept for ghosts too).
 */
inline MultiFan add(const MultiFan& a, const MultiFan& b)
{
    detail::check_same_shape(a, b);
    std::vector<RationalVector> values;
    for (int v = 1; v <= a.m(); ++v) {
        const bool used_a = !a.cycle().is_ghost(v);
        const bool used_b = !b.cycle().is_ghost(v);
        if (used_a && used_b && a.coloring().value(v) != b.coloring().value(v))
            raise(errc::coloring_mismatch,
                  "colorings disagree on a shared supported vertex");
        values.push_back(used_b && !used_a ? b.coloring().value(v)
                                           : a.coloring().value(v));
    }
    return MultiFan(a.cycle() + b.cycle(),
                    CharacteristicFunction(a.n(), std::move(values)));
}

inline MultiFan subtract(const MultiFan& a, const MultiFan& b)
{
    detail::check_same_shape(a, b);
    return add(a, MultiFan(-b.cycle(), b.coloring()));
}

/**
 * Connected sum: identifies selected vertices of b with vertices of a (the
 * identified values must match and be linearly independent), re-indexes the
 * remaining b-vertices after a's range, and adds the cycles.  No facets are
 * removed: coincident simplices with opposite weights cancel on their own.
 */
inline MultiFan connected_sum(const MultiFan& a, const MultiFan& b,
                              const std::vector<std::pair<int, int>>& identify)
{
    if (a.n() != b.n())
        raise(errc::dimension_mismatch, "fans live in different ambient dimensions");
    if (identify.empty())
        raise(errc::invalid_input, "connected sum needs at least one identified pair");

    std::set<int> used_a, used_b;
    std::vector<RationalVector> glue_values;
    for (auto& [va, vb] : identify) {
        if (!used_a.insert(va).second || !used_b.insert(vb).second)
            raise(errc::invalid_input, "identification pairs must be disjoint");
        if (a.coloring().value(va) != b.coloring().value(vb))
            raise(errc::coloring_mismatch,
                  "identified vertices carry different coloring values");
        glue_values.push_back(a.coloring().value(va));
    }
    if (rank(RationalMatrix::from_columns(glue_values)) != glue_values.size())
        raise(errc::dependent_glue_set,
              "identified vertex values are linearly dependent");

    // image of b's vertex range in the merged range
    std::vector<int> image(b.m(), 0);
    for (auto& [va, vb] : identify) image[vb - 1] = va;
    int next = a.m();
    for (int v = 1; v <= b.m(); ++v)
        if (image[v - 1] == 0) image[v - 1] = ++next;
    const int merged_m = next;

    SimplicialChain b_embedded =
        relabel(b.cycle(), image, merged_m);
    SimplicialChain a_embedded = a.cycle().with_ambient(merged_m);

    std::vector<RationalVector> values;
    for (int v = 1; v <= a.m(); ++v) values.push_back(a.coloring().value(v));
    values.resize(merged_m, RationalVector(a.n(), 0));
    for (int v = 1; v <= b.m(); ++v) values[image[v - 1] - 1] = b.coloring().value(v);

    SimplicialChain total = a_embedded + b_embedded;
    if (!is_cycle(total))
        raise(errc::not_a_cycle, "identification broke the cycle condition");
    return MultiFan(std::move(total),
                    CharacteristicFunction(a.n(), std::move(values)));
}

/// Applies an invertible linear map to every coloring value.
inline MultiFan gl_transform(const MultiFan& fan, const RationalMatrix& A)
{
    if (A.rows() != static_cast<std::size_t>(fan.n()) || A.rows() != A.cols())
        raise(errc::dimension_mismatch, "transform matrix has wrong shape");
    if (determinant(A) == 0)
        raise(errc::singular_matrix, "transform matrix is singular");
    std::vector<RationalVector> values;
    for (int v = 1; v <= fan.m(); ++v) {
        const RationalVector& x = fan.coloring().value(v);
        RationalVector y(fan.n(), 0);
        for (int i = 0; i < fan.n(); ++i)
            for (int j = 0; j < fan.n(); ++j) y[i] += A(i, j) * x[j];
        values.push_back(std::move(y));
    }
    return MultiFan(fan.cycle(), CharacteristicFunction(fan.n(), std::move(values)),
                    fan.apices());
}

/// Replaces the value of one vertex, revalidating nondegeneracy.
inline MultiFan recolor(const MultiFan& fan, int vertex, RationalVector value)
{
    CharacteristicFunction coloring = fan.coloring();
    coloring.set_value(vertex, std::move(value));
    return MultiFan(fan.cycle(), std::move(coloring), fan.apices());
}

}  // namespace multifan
