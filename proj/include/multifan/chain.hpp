#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace multifan {

using Simplex = std::vector<int>;  // sorted distinct 1-based vertex indices

inline void check_simplex(const Simplex& s, int m, int k)
{
    if (static_cast<int>(s.size()) != k)
        raise(errc::dimension_mismatch, "simplex has wrong cardinality");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > m)
            raise(errc::invalid_input, "vertex index out of range");
        if (i && s[i] <= s[i - 1])
            raise(errc::invalid_input, "simplex vertices must be sorted and distinct");
    }
}

/**
 * Weighted simplicial chain of fixed cardinality k on vertices 1..m.  Every
 * stored simplex is a sorted k-subset with a nonzero rational weight; the
 * zero chain is the empty map.  Vertices of 1..m that appear in no simplex
 * are ghosts: they stay part of the ambient index range.
 */
class SimplicialChain {
public:
    using WeightMap = std::map<Simplex, Rational>;

    SimplicialChain(int m, int k) : m_(m), k_(k)
    {
        if (m < 0 || k < 0) raise(errc::invalid_input, "negative chain parameters");
    }

    static SimplicialChain from_terms(
        int m, int k, const std::vector<std::pair<Simplex, Rational>>& terms)
    {
        SimplicialChain c(m, k);
        for (const auto& [s, w] : terms) c.add(s, w);
        return c;
    }

    int m() const { return m_; }
    int cardinality() const { return k_; }
    const WeightMap& weights() const { return weights_; }
    bool is_zero() const { return weights_.empty(); }

    Rational weight(const Simplex& s) const
    {
        auto it = weights_.find(s);
        return it == weights_.end() ? Rational(0) : it->second;
    }

    void add(const Simplex& s, const Rational& w)
    {
        if (w == 0) return;
        check_simplex(s, m_, k_);
        auto [it, inserted] = weights_.emplace(s, w);
        if (!inserted) {
            it->second += w;
            if (it->second == 0) weights_.erase(it);
        }
    }

    SimplicialChain operator+(const SimplicialChain& o) const
    {
        check_compatible(o);
        SimplicialChain out = *this;
        for (auto& [s, w] : o.weights_) out.add(s, w);
        return out;
    }

    SimplicialChain operator-(const SimplicialChain& o) const
    {
        check_compatible(o);
        SimplicialChain out = *this;
        for (auto& [s, w] : o.weights_) out.add(s, -w);
        return out;
    }

    SimplicialChain operator*(const Rational& s) const
    {
        SimplicialChain out(m_, k_);
        if (s == 0) return out;
        for (auto& [sim, w] : weights_) out.weights_.emplace(sim, w * s);
        return out;
    }

    SimplicialChain operator-() const { return *this * Rational(-1); }

    bool operator==(const SimplicialChain& o) const
    {
        return m_ == o.m_ && k_ == o.k_ && weights_ == o.weights_;
    }

    /// Vertices carrying at least one simplex, ascending.
    std::vector<int> support_vertices() const
    {
        std::vector<bool> seen(m_ + 1, false);
        for (auto& [s, w] : weights_)
            for (int v : s) seen[v] = true;
        std::vector<int> out;
        for (int v = 1; v <= m_; ++v)
            if (seen[v]) out.push_back(v);
        return out;
    }

    bool is_ghost(int v) const
    {
        if (v < 1 || v > m_) raise(errc::invalid_input, "vertex index out of range");
        for (auto& [s, w] : weights_)
            if (std::binary_search(s.begin(), s.end(), v)) return false;
        return true;
    }

    /// Extends the ambient vertex range without touching the support.
    SimplicialChain with_ambient(int new_m) const
    {
        if (new_m < m_) raise(errc::invalid_input, "cannot shrink ambient range");
        SimplicialChain out(new_m, k_);
        out.weights_ = weights_;
        return out;
    }

private:
    void check_compatible(const SimplicialChain& o) const
    {
        if (m_ != o.m_ || k_ != o.k_)
            raise(errc::dimension_mismatch, "chains live on different index ranges");
    }

    int m_;
    int k_;
    WeightMap weights_;
};

/**
 * Simplicial boundary with the augmentation included: a cardinality-1 chain
 * maps to the weight of the empty simplex (its coefficient sum), so "cycle"
 * means reduced cycle in every cardinality.  Signs follow the sorted vertex
 * order of each simplex.
 */
inline SimplicialChain boundary(const SimplicialChain& c)
{
    if (c.cardinality() < 1)
        raise(errc::invalid_input, "boundary needs cardinality at least 1");
    SimplicialChain out(c.m(), c.cardinality() - 1);
    for (auto& [s, w] : c.weights()) {
        Rational sign = 1;
        for (std::size_t j = 0; j < s.size(); ++j) {
            Simplex face;
            face.reserve(s.size() - 1);
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != j) face.push_back(s[i]);
            out.add(face, sign * w);
            sign = -sign;
        }
    }
    return out;
}

inline bool is_cycle(const SimplicialChain& c)
{
    if (c.cardinality() == 0) return true;
    return boundary(c).is_zero();
}

/**
 * Link of a vertex as a weighted chain: simplex S containing j contributes
 * S\{j} with weight (-1)^{pos(j in S)}·w(S).  The sign makes the link of a
 * cycle a cycle again.
 */
inline SimplicialChain link_cycle(const SimplicialChain& c, int j)
{
    if (j < 1 || j > c.m()) raise(errc::invalid_input, "link vertex out of range");
    if (c.cardinality() < 1)
        raise(errc::invalid_input, "link needs cardinality at least 1");
    SimplicialChain out(c.m(), c.cardinality() - 1);
    for (auto& [s, w] : c.weights()) {
        auto it = std::lower_bound(s.begin(), s.end(), j);
        if (it == s.end() || *it != j) continue;
        const auto pos = static_cast<int>(it - s.begin());
        Simplex rest;
        rest.reserve(s.size() - 1);
        for (int v : s)
            if (v != j) rest.push_back(v);
        out.add(rest, (pos % 2 == 0 ? w : -w));
    }
    return out;
}

/// Iterated link over a vertex set, folded in ascending vertex order.
inline SimplicialChain link_cycle(const SimplicialChain& c, const Simplex& J)
{
    Simplex sorted = J;
    std::sort(sorted.begin(), sorted.end());
    SimplicialChain out = c;
    for (int j : sorted) out = link_cycle(out, j);
    return out;
}

/**
 * Join of chains: the second factor is re-indexed after the first (vertices
 * m_a+1..m_a+m_b), weights multiply.  Since every second-factor vertex index
 * exceeds every first-factor index, no orientation signs arise.
 */
inline SimplicialChain join_cycles(const SimplicialChain& a, const SimplicialChain& b)
{
    SimplicialChain out(a.m() + b.m(), a.cardinality() + b.cardinality());
    for (auto& [sa, wa] : a.weights())
        for (auto& [sb, wb] : b.weights()) {
            Simplex s = sa;
            for (int v : sb) s.push_back(v + a.m());
            out.add(s, wa * wb);
        }
    return out;
}

/// Zero-sphere chain x - y on two fresh vertices (used for suspensions).
inline SimplicialChain zero_sphere_chain()
{
    SimplicialChain c(2, 1);
    c.add({1}, 1);
    c.add({2}, -1);
    return c;
}

/**
 * Suspension: join with the zero-sphere x - y.  The two apices become the
 * last two vertex indices m+1 (weight +1 side) and m+2 (weight -1 side).
 */
inline SimplicialChain suspension(const SimplicialChain& c)
{
    return join_cycles(c, zero_sphere_chain());
}

/**
 * Re-indexes vertices through `image` (1-based, image[v-1] is the new index
 * of v).  The map must not collapse any supported simplex; weights pick up
 * the sign of the permutation that re-sorts each image tuple.
 */
inline SimplicialChain relabel(const SimplicialChain& c,
                               const std::vector<int>& image, int new_m)
{
    if (static_cast<int>(image.size()) != c.m())
        raise(errc::dimension_mismatch, "relabel image has wrong length");
    SimplicialChain out(new_m, c.cardinality());
    for (auto& [s, w] : c.weights()) {
        std::vector<int> mapped;
        mapped.reserve(s.size());
        for (int v : s) mapped.push_back(image[v - 1]);
        // Parity of the bubble sort that re-sorts the image tuple.
        int sign = 1;
        Simplex sorted = mapped;
        for (std::size_t i = 0; i < sorted.size(); ++i)
            for (std::size_t j = i + 1; j < sorted.size(); ++j)
                if (sorted[i] > sorted[j]) {
                    std::swap(sorted[i], sorted[j]);
                    sign = -sign;
                }
        for (std::size_t i = 1; i < sorted.size(); ++i)
            if (sorted[i] == sorted[i - 1])
                raise(errc::invalid_input, "relabeling collapses a simplex");
        out.add(sorted, w * sign);
    }
    return out;
}

/**
 * Orients a closed pseudomanifold given by facets: returns the chain with
 * coherent ±1 weights (one orientation class per connected component of the
 * facet adjacency graph).  Raises when some ridge is not shared by exactly
 * two facets or when no coherent orientation exists.
 */
inline SimplicialChain orient_closed_pseudomanifold(int m,
                                                    const std::vector<Simplex>& facets)
{
    if (facets.empty()) raise(errc::invalid_input, "no facets to orient");
    const int k = static_cast<int>(facets.front().size());
    for (const auto& f : facets) check_simplex(f, m, k);

    // ridge -> incident facet indices
    std::map<Simplex, std::vector<std::size_t>> ridges;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        const auto& f = facets[fi];
        for (std::size_t j = 0; j < f.size(); ++j) {
            Simplex r;
            for (std::size_t i = 0; i < f.size(); ++i)
                if (i != j) r.push_back(f[i]);
            ridges[r].push_back(fi);
        }
    }
    for (auto& [r, inc] : ridges)
        if (inc.size() != 2)
            raise(errc::invalid_input,
                  "not a closed pseudomanifold: a ridge lies in " +
                      std::to_string(inc.size()) + " facets");

    auto ridge_sign = [](const Simplex& f, int missing) {
        int pos = 0;
        while (f[pos] != missing) ++pos;
        return pos % 2 == 0 ? 1 : -1;
    };

    std::vector<int> sign(facets.size(), 0);
    for (std::size_t seed = 0; seed < facets.size(); ++seed) {
        if (sign[seed]) continue;
        sign[seed] = 1;
        std::vector<std::size_t> stack{seed};
        while (!stack.empty()) {
            const std::size_t fi = stack.back();
            stack.pop_back();
            const auto& f = facets[fi];
            for (std::size_t j = 0; j < f.size(); ++j) {
                Simplex r;
                for (std::size_t i = 0; i < f.size(); ++i)
                    if (i != j) r.push_back(f[i]);
                const auto& inc = ridges[r];
                const std::size_t other = inc[0] == fi ? inc[1] : inc[0];
                int missing_other = 0;
                for (int v : facets[other])
                    if (!std::binary_search(r.begin(), r.end(), v)) missing_other = v;
                // Coherence: the shared ridge must cancel in the boundary.
                const int needed = -sign[fi] * ridge_sign(f, f[j]) *
                                   ridge_sign(facets[other], missing_other);
                if (sign[other] == 0) {
                    sign[other] = needed;
                    stack.push_back(other);
                } else if (sign[other] != needed) {
                    raise(errc::invalid_input, "pseudomanifold is not orientable");
                }
            }
        }
    }

    SimplicialChain out(m, k);
    for (std::size_t fi = 0; fi < facets.size(); ++fi)
        out.add(facets[fi], Rational(sign[fi]));
    if (!is_cycle(out))
        raise(errc::invalid_input, "orientation did not close up to a cycle");
    return out;
}

}  // namespace multifan
