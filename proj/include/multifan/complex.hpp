#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chain.hpp"
#include "errors.hpp"
#include "linalg.hpp"
#include "rational.hpp"

namespace multifan {

using IntegerVector = std::vector<long long>;

/**
 * Abstract simplicial complex stored by its facets (maximal faces are not
 * required: faces of listed facets are implied).  Vertex indices live in the
 * ambient range 1..m shared with chains.
 */
class SimplicialComplex {
public:
    SimplicialComplex(int m, std::vector<Simplex> facets)
        : m_(m), facets_(std::move(facets))
    {
        for (auto& f : facets_) {
            if (f.empty()) raise(errc::invalid_input, "empty facet");
            check_simplex(f, m_, static_cast<int>(f.size()));
        }
        std::sort(facets_.begin(), facets_.end());
        facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    }

    int m() const { return m_; }
    const std::vector<Simplex>& facets() const { return facets_; }
    bool empty() const { return facets_.empty(); }

    /// Dimension = max facet cardinality - 1; -1 for the empty complex.
    int dimension() const
    {
        int d = -1;
        for (auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
        return d;
    }

    bool is_pure() const
    {
        for (auto& f : facets_)
            if (f.size() != facets_.front().size()) return false;
        return true;
    }

    /// All faces of cardinality k, sorted.
    std::vector<Simplex> faces(int k) const
    {
        std::set<Simplex> out;
        std::vector<int> idx;
        for (auto& f : facets_) {
            const int n = static_cast<int>(f.size());
            if (k > n) continue;
            // enumerate k-subsets of f
            idx.assign(k, 0);
            for (int i = 0; i < k; ++i) idx[i] = i;
            while (true) {
                Simplex s(k);
                for (int i = 0; i < k; ++i) s[i] = f[idx[i]];
                out.insert(s);
                int i = k - 1;
                while (i >= 0 && idx[i] == n - k + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
        return {out.begin(), out.end()};
    }

    bool contains(const Simplex& s) const
    {
        for (auto& f : facets_)
            if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
        return false;
    }

    /// f-vector (f_0, ..., f_dim): face counts by dimension.
    IntegerVector f_vector() const
    {
        IntegerVector f;
        for (int k = 1; k <= dimension() + 1; ++k)
            f.push_back(static_cast<long long>(faces(k).size()));
        return f;
    }

private:
    int m_;
    std::vector<Simplex> facets_;
};

/// Complex spanned by the simplices carrying nonzero weight.
inline SimplicialComplex support_complex(const SimplicialChain& c)
{
    std::vector<Simplex> facets;
    for (auto& [s, w] : c.weights())
        if (!s.empty()) facets.push_back(s);
    return SimplicialComplex(c.m(), facets);
}

/**
 * Reduced rational Betti numbers (β̃_0, ..., β̃_dim) computed from exact
 * boundary-matrix ranks; the augmentation map is included, so a single point
 * has all zeros and the empty complex is its own story (empty vector).
 */
inline IntegerVector betti_numbers(const SimplicialComplex& K)
{
    const int dim = K.dimension();
    if (dim < 0) return {};
    std::vector<std::vector<Simplex>> faces(dim + 2);
    for (int k = 0; k <= dim + 1; ++k) faces[k] = K.faces(k);

    // rank of d_j : C_j -> C_{j-1} for j = 0..dim (d_0 = augmentation)
    std::vector<std::size_t> ranks(dim + 2, 0);
    ranks[0] = faces[1].empty() ? 0 : 1;
    for (int j = 1; j <= dim; ++j) {
        const auto& dom = faces[j + 1];
        const auto& codom = faces[j];
        std::map<Simplex, std::size_t> index;
        for (std::size_t i = 0; i < codom.size(); ++i) index[codom[i]] = i;
        RationalMatrix D(codom.size(), dom.size());
        for (std::size_t cidx = 0; cidx < dom.size(); ++cidx) {
            const Simplex& s = dom[cidx];
            int sign = 1;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != drop) face.push_back(s[i]);
                D(index[face], cidx) = sign;
                sign = -sign;
            }
        }
        ranks[j] = rank(D);
    }
    ranks[dim + 1] = 0;

    IntegerVector betti(dim + 1, 0);
    for (int j = 0; j <= dim; ++j)
        betti[j] = static_cast<long long>(faces[j + 1].size()) -
                   static_cast<long long>(ranks[j]) -
                   static_cast<long long>(ranks[j + 1]);
    return betti;
}

namespace detail {

inline Integer binomial(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Integer b = 1;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

}  // namespace detail

/**
 * h-vector (h_0..h_n) of a pure (n-1)-dimensional complex, from the usual
 * transform sum_i f_{i-1} t^i (1-t)^{n-i}.
 */
inline IntegerVector h_vector(const SimplicialComplex& K)
{
    if (K.empty()) raise(errc::invalid_input, "h-vector of the empty complex");
    if (!K.is_pure()) raise(errc::invalid_input, "h-vector needs a pure complex");
    const int n = K.dimension() + 1;
    const IntegerVector f = K.f_vector();
    IntegerVector h(n + 1, 0);
    for (int j = 0; j <= n; ++j) {
        Integer acc = 0;
        for (int i = 0; i <= j; ++i) {
            const Integer fi = (i == 0) ? Integer(1) : Integer(f[i - 1]);
            const Integer term = detail::binomial(n - i, j - i) * fi;
            acc += ((j - i) % 2 == 0) ? term : -term;
        }
        h[j] = static_cast<long long>(acc);
    }
    return h;
}

namespace detail {

/// True when the complex is connected (ignoring ghost vertices).
inline bool is_connected(const SimplicialComplex& K)
{
    std::map<int, int> comp;
    std::vector<int> parent;
    auto find = [&](auto&& self, int x) -> int {
        return parent[x] == x ? x : parent[x] = self(self, parent[x]);
    };
    for (auto& f : K.facets())
        for (int v : f)
            if (!comp.count(v)) {
                comp[v] = static_cast<int>(parent.size());
                parent.push_back(comp[v]);
            }
    for (auto& f : K.facets())
        for (std::size_t i = 1; i < f.size(); ++i) {
            int a = find(find, comp[f[0]]), b = find(find, comp[f[i]]);
            if (a != b) parent[a] = b;
        }
    std::set<int> roots;
    for (auto& [v, c] : comp) roots.insert(find(find, c));
    return roots.size() <= 1;
}

/// Every ridge lies in exactly two facets.
inline bool is_closed_pseudomanifold(const SimplicialComplex& K)
{
    if (!K.is_pure() || K.empty()) return false;
    std::map<Simplex, int> ridge_count;
    for (auto& f : K.facets())
        for (std::size_t j = 0; j < f.size(); ++j) {
            Simplex r;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != j) r.push_back(f[i]);
            ++ridge_count[r];
        }
    for (auto& [r, c] : ridge_count)
        if (c != 2) return false;
    return true;
}

}  // namespace detail

/**
 * h''-vector of a connected orientable triangulated closed manifold: the
 * h-vector corrected by reduced Betti numbers,
 *
 *   h''_j = h_j - C(n,j) * sum_{s=1..j} (-1)^{j-s} β̃_{s-1}   (j < n)
 *   h''_n = h_n -          sum_{s=1..n-1} (-1)^{n-s} β̃_{s-1}.
 *
 * For a sphere this is the h-vector itself; for the minimal torus it gives
 * (1,4,4,1).  The manifold hypothesis is the caller's responsibility; for
 * dimension <= 3 inputs the cheap closedness/connectivity parts are checked.
 */
inline IntegerVector h_double_prime(const SimplicialComplex& K)
{
    const int n = K.dimension() + 1;
    if (n <= 4) {
        if (!detail::is_closed_pseudomanifold(K))
            raise(errc::invalid_input, "h''-vector needs a closed manifold");
        if (!detail::is_connected(K))
            raise(errc::invalid_input, "h''-vector needs a connected manifold");
    }
    const IntegerVector h = h_vector(K);
    const IntegerVector b = betti_numbers(K);
    IntegerVector out(n + 1, 0);
    for (int j = 0; j < n; ++j) {
        Integer corr = 0;
        for (int s = 1; s <= j; ++s) {
            const Integer term = Integer(b[s - 1]);
            corr += ((j - s) % 2 == 0) ? term : -term;
        }
        out[j] = h[j] - static_cast<long long>(detail::binomial(n, j) * corr);
    }
    Integer top = 0;
    for (int s = 1; s <= n - 1; ++s) {
        const Integer term = Integer(b[s - 1]);
        top += ((n - s) % 2 == 0) ? term : -term;
    }
    out[n] = h[n] - static_cast<long long>(top);
    return out;
}

/**
 * A vertex of a weighted cycle is smooth when its link chain has weights
 * that agree up to sign and its support is a closed orientable pseudo-
 * manifold with the rational Betti numbers of a sphere of the link's
 * dimension.  Re-coloring smooth vertices never changes dimension vectors.
 */
inline bool is_smooth_vertex(const SimplicialChain& cycle, int v)
{
    if (cycle.is_ghost(v))
        raise(errc::invalid_input, "smoothness test on a ghost vertex");
    if (cycle.cardinality() < 2)
        raise(errc::invalid_input, "smoothness needs cardinality at least 2");
    const SimplicialChain link = link_cycle(cycle, v);
    if (link.is_zero()) return false;

    Rational mag = 0;
    for (auto& [s, w] : link.weights()) {
        const Rational a = w < 0 ? Rational(-w) : w;
        if (mag == 0)
            mag = a;
        else if (mag != a)
            return false;
    }

    const SimplicialComplex L = support_complex(link);
    if (!detail::is_closed_pseudomanifold(L)) return false;
    const int d = L.dimension();
    const IntegerVector b = betti_numbers(L);
    for (int j = 0; j <= d; ++j) {
        const long long expect = (j == d) ? 1 : 0;
        if (b[j] != expect) return false;
    }
    return true;
}

}  // namespace multifan
