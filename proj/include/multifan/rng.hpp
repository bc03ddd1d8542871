#pragma once

#include <cstdint>
#include <random>

#include "rational.hpp"

namespace multifan {

/// Default seed used by every randomized routine when no seed is supplied.
inline constexpr std::uint64_t kDefaultSeed = 8675309;

/**
 * Deterministic random source.  std::uniform_int_distribution is
 * implementation-defined, so integers are derived from the raw mt19937_64
 * stream directly; the same seed yields the same draws on every platform.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    /// Uniform-ish integer in [lo, hi] (inclusive); modulo bias is irrelevant
    /// for the small ranges used here and keeps the stream reproducible.
    long long uniform(long long lo, long long hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long long>(gen_() % span);
    }

    /// Nonzero integer in [-bound, bound].
    long long nonzero(long long bound)
    {
        long long x = 0;
        while (x == 0) x = uniform(-bound, bound);
        return x;
    }

    RationalVector integer_vector(std::size_t n, long long bound)
    {
        RationalVector v(n);
        for (auto& x : v) x = Rational(uniform(-bound, bound));
        return v;
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace multifan
