#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

#include "errors.hpp"

namespace multifan {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;

/**
 * Parses a rational from its canonical text form "p" or "p/q".  Whitespace is
 * not accepted; the denominator must be a positive integer literal (a leading
 * '-' is only allowed on the numerator).
 */
inline Rational parse_rational(const std::string& text)
{
    if (text.empty()) raise(errc::invalid_input, "empty rational literal");
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        const std::string num = text.substr(0, slash);
        const std::string den = text.substr(slash + 1);
        if (num.empty() || den.empty())
            raise(errc::invalid_input, "malformed rational literal '" + text + "'");
        Integer d(den);
        if (d <= 0)
            raise(errc::invalid_input,
                  "denominator must be positive in '" + text + "'");
        return Rational(Integer(num)) / Rational(d);
    } catch (const FanError&) {
        throw;
    } catch (const std::exception&) {
        raise(errc::invalid_input, "malformed rational literal '" + text + "'");
    }
}

/// Canonical text form: "p" when the denominator is 1, otherwise "p/q", q > 0.
inline std::string format_rational(const Rational& q)
{
    const Integer num = numerator(q);
    const Integer den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline std::string format_vector(const RationalVector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(v[i]);
    }
    out += ")";
    return out;
}

inline bool is_zero_vector(const RationalVector& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace multifan
