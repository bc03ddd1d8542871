#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace multifan {

/**
 * Monomial in variables x1..xm, stored sparsely as (variable, exponent)
 * pairs sorted by variable index (1-based); zero exponents are never stored.
 */
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(int var, int exp = 1)
    {
        Monomial m;
        if (var < 1) raise(errc::invalid_input, "variable indices are 1-based");
        if (exp > 0) m.factors_.emplace_back(var, exp);
        return m;
    }

    static Monomial from_exponents(const std::vector<int>& exps)
    {
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] > 0) m.factors_.emplace_back(int(i) + 1, exps[i]);
        return m;
    }

    /// Monomial x_{v1}·x_{v2}·... for a multiset of variable indices.
    static Monomial from_multiset(const std::vector<int>& vars)
    {
        Monomial m;
        std::vector<int> sorted = vars;
        std::sort(sorted.begin(), sorted.end());
        for (int v : sorted) {
            if (!m.factors_.empty() && m.factors_.back().first == v)
                ++m.factors_.back().second;
            else
                m.factors_.emplace_back(v, 1);
        }
        return m;
    }

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }

    int degree() const
    {
        int d = 0;
        for (auto& [v, e] : factors_) d += e;
        return d;
    }

    int exponent(int var) const
    {
        for (auto& [v, e] : factors_)
            if (v == var) return e;
        return 0;
    }

    int max_variable() const
    {
        return factors_.empty() ? 0 : factors_.back().first;
    }

    Monomial operator*(const Monomial& o) const
    {
        Monomial out;
        auto a = factors_.begin();
        auto b = o.factors_.begin();
        while (a != factors_.end() || b != o.factors_.end()) {
            if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first))
                out.factors_.push_back(*a++);
            else if (a == factors_.end() || b->first < a->first)
                out.factors_.push_back(*b++);
            else {
                out.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        return out;
    }

    /// Divides by x_var once; returns the derivative cofactor pair (e, m/x)
    /// with e the old exponent, or e = 0 when the variable is absent.
    std::pair<int, Monomial> reduce(int var) const
    {
        Monomial out;
        int e = 0;
        for (auto& [v, k] : factors_) {
            if (v == var) {
                e = k;
                if (k > 1) out.factors_.emplace_back(v, k - 1);
            } else {
                out.factors_.emplace_back(v, k);
            }
        }
        return {e, out};
    }

    bool operator==(const Monomial& o) const { return factors_ == o.factors_; }

    /**
     * Graded lexicographic comparison: lower total degree first, ties broken
     * lexicographically with x1 > x2 > ...; the map below therefore iterates
     * in ascending graded-lex order and reverse iteration gives the usual
     * leading-term-first display order.
     */
    bool operator<(const Monomial& o) const
    {
        const int da = degree(), db = o.degree();
        if (da != db) return da < db;
        auto a = factors_.begin();
        auto b = o.factors_.begin();
        while (a != factors_.end() && b != o.factors_.end()) {
            if (a->first != b->first)
                // Smaller variable index present means lex-larger monomial.
                return a->first > b->first;
            if (a->second != b->second) return a->second < b->second;
            ++a, ++b;
        }
        return false;  // equal degree and one is a prefix => identical
    }

    std::string str(const std::string& prefix = "c") const
    {
        if (factors_.empty()) return "1";
        std::string out;
        for (auto& [v, e] : factors_) {
            if (!out.empty()) out += "*";
            out += prefix + std::to_string(v);
            if (e > 1) out += "^" + std::to_string(e);
        }
        return out;
    }

private:
    std::vector<std::pair<int, int>> factors_;
};

/**
 * Sparse multivariate polynomial over Q with a fixed ambient variable count.
 * Terms are kept in ascending graded-lex order and zero coefficients are
 * dropped eagerly, so equal polynomials compare equal structurally.
 */
class SparsePolynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    explicit SparsePolynomial(int nvars = 0) : nvars_(nvars)
    {
        if (nvars < 0) raise(errc::invalid_input, "negative variable count");
    }

    static SparsePolynomial constant(int nvars, const Rational& c)
    {
        SparsePolynomial p(nvars);
        p.add_term(Monomial(), c);
        return p;
    }

    static SparsePolynomial variable(int nvars, int var)
    {
        SparsePolynomial p(nvars);
        p.add_term(Monomial::variable(var), 1);
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0) return;
        if (m.max_variable() > nvars_)
            raise(errc::dimension_mismatch, "monomial variable outside ambient range");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Total degree shared by all terms, if the polynomial is homogeneous.
    std::optional<int> homogeneous_degree() const
    {
        std::optional<int> d;
        for (auto& [m, c] : terms_) {
            if (!d)
                d = m.degree();
            else if (*d != m.degree())
                return std::nullopt;
        }
        return d;
    }

    SparsePolynomial operator+(const SparsePolynomial& o) const
    {
        check_compatible(o);
        SparsePolynomial out = *this;
        for (auto& [m, c] : o.terms_) out.add_term(m, c);
        return out;
    }

    SparsePolynomial operator-(const SparsePolynomial& o) const
    {
        check_compatible(o);
        SparsePolynomial out = *this;
        for (auto& [m, c] : o.terms_) out.add_term(m, -c);
        return out;
    }

    SparsePolynomial operator*(const SparsePolynomial& o) const
    {
        check_compatible(o);
        SparsePolynomial out(nvars_);
        for (auto& [ma, ca] : terms_)
            for (auto& [mb, cb] : o.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    SparsePolynomial operator*(const Rational& s) const
    {
        SparsePolynomial out(nvars_);
        if (s == 0) return out;
        for (auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    SparsePolynomial operator-() const { return *this * Rational(-1); }

    SparsePolynomial pow(int e) const
    {
        if (e < 0) raise(errc::invalid_input, "negative power");
        SparsePolynomial out = constant(nvars_, 1);
        for (int i = 0; i < e; ++i) out = out * *this;
        return out;
    }

    bool operator==(const SparsePolynomial& o) const
    {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Rational evaluate(const RationalVector& point) const
    {
        if (static_cast<int>(point.size()) != nvars_)
            raise(errc::dimension_mismatch, "evaluation point has wrong length");
        Rational total = 0;
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (auto& [v, e] : m.factors())
                for (int i = 0; i < e; ++i) t *= point[v - 1];
            total += t;
        }
        return total;
    }

    /// Re-embeds into a ring with nvars_out variables, shifting every
    /// variable index by `offset` (used when joining fans).
    SparsePolynomial shift_variables(int offset, int nvars_out) const
    {
        SparsePolynomial out(nvars_out);
        for (auto& [m, c] : terms_) {
            Monomial shifted;
            std::vector<int> exps(nvars_out, 0);
            for (auto& [v, e] : m.factors()) {
                const int nv = v + offset;
                if (nv < 1 || nv > nvars_out)
                    raise(errc::dimension_mismatch, "variable shift out of range");
                exps[nv - 1] = e;
            }
            out.add_term(Monomial::from_exponents(exps), c);
        }
        return out;
    }

    /// Canonical text form, leading graded-lex term first.
    std::string str(const std::string& prefix = "c") const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            const bool neg = c < 0;
            const Rational mag = neg ? Rational(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            const bool unit = (mag == 1) && !m.factors().empty();
            if (!unit) out += format_rational(mag);
            if (!m.factors().empty()) {
                if (!unit) out += "*";
                out += m.str(prefix);
            }
        }
        return out;
    }

private:
    void check_compatible(const SparsePolynomial& o) const
    {
        if (nvars_ != o.nvars_)
            raise(errc::dimension_mismatch, "polynomials over different variable counts");
    }

    int nvars_;
    TermMap terms_;
};

/// Partial derivative with respect to x_var.
inline SparsePolynomial differentiate(const SparsePolynomial& p, int var)
{
    if (var < 1 || var > p.nvars())
        raise(errc::dimension_mismatch, "derivative variable out of range");
    SparsePolynomial out(p.nvars());
    for (auto& [m, c] : p.terms()) {
        auto [e, rest] = m.reduce(var);
        if (e > 0) out.add_term(rest, c * e);
    }
    return out;
}

/// Iterated derivative for a multiset of variable indices.
inline SparsePolynomial differentiate(const SparsePolynomial& p,
                                      const std::vector<int>& vars)
{
    SparsePolynomial out = p;
    for (int v : vars) out = differentiate(out, v);
    return out;
}

/**
 * Applies a constant-coefficient differential operator, itself encoded as a
 * polynomial in d1..dm, to p: each operator term q·d^a contributes q·∂^a p.
 */
inline SparsePolynomial apply_operator(const SparsePolynomial& op,
                                       const SparsePolynomial& p)
{
    if (op.nvars() != p.nvars())
        raise(errc::dimension_mismatch, "operator over different variable count");
    SparsePolynomial out(p.nvars());
    for (auto& [m, q] : op.terms()) {
        SparsePolynomial d = p;
        for (auto& [v, e] : m.factors())
            for (int i = 0; i < e && !d.is_zero(); ++i) d = differentiate(d, v);
        out = out + d * q;
    }
    return out;
}

}  // namespace multifan
