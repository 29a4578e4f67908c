#pragma once

#include "ravenlab/rational.hpp"

#include <cstdint>
#include <random>

namespace ravenlab {

// Seeded generator with fully specified output. mt19937_64 is pinned by the
// standard; draws below a bound use rejection instead of
// uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
        std::uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return v % bound;
    }

    // uniform in [lo, hi] inclusive
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return lo + below(hi - lo + 1);
    }

    // strictly inside (0, 1), resolution 1/2^16
    Rat open_unit_rational() { return Rat(Int(between(1, 65535)), Int(65536)); }

private:
    std::mt19937_64 engine_;
};

// splitmix64; used to derive independent per-trial seeds from one master seed
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace ravenlab
