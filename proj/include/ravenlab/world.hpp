#pragma once

#include "ravenlab/category.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ravenlab {

// Worlds are complete description vectors packed two bits per object,
// object 1 in the lowest bits. The dense world space has 4^n points;
// n is capped so an event bit vector stays desk-sized (4^12 bits = 2 MB).
using WorldCode = std::uint64_t;

inline constexpr int max_universe_size = 12;

inline int checked_universe_size(int n) {
    if (n < 1 || n > max_universe_size)
        throw std::out_of_range("universe size must be in [1, " +
                                std::to_string(max_universe_size) + "], got " + std::to_string(n));
    return n;
}

inline std::uint64_t world_space_size(int n) {
    checked_universe_size(n);
    return std::uint64_t(1) << (2 * n);
}

inline void check_object(int object, int n) {
    if (object < 1 || object > n)
        throw std::out_of_range("object id " + std::to_string(object) +
                                " out of range for universe of size " + std::to_string(n));
}

inline Category world_category(WorldCode w, int object) {
    return category_of_code(static_cast<unsigned>((w >> (2 * (object - 1))) & 3u));
}

inline WorldCode with_category(WorldCode w, int object, Category c) {
    int shift = 2 * (object - 1);
    return (w & ~(WorldCode(3) << shift)) | (WorldCode(code_of(c)) << shift);
}

inline int count_f(WorldCode w, int n) {
    // F is the high bit of every 2-bit field
    constexpr WorldCode f_bits = 0xAAAAAAAAAAAAAAAAull;
    WorldCode mask = (n == 32) ? ~WorldCode(0) : ((WorldCode(1) << (2 * n)) - 1);
    return std::popcount(w & f_bits & mask);
}

inline std::array<int, 4> category_counts(WorldCode w, int n) {
    std::array<int, 4> c{0, 0, 0, 0};
    for (int b = 1; b <= n; ++b) ++c[code_of(world_category(w, b))];
    return c;
}

// Value form of a world, mainly for construction and display.
struct World {
    int universe_size;
    WorldCode code;

    static World from_categories(const std::vector<Category>& cats) {
        int n = checked_universe_size(static_cast<int>(cats.size()));
        WorldCode w = 0;
        for (int b = 1; b <= n; ++b) w = with_category(w, b, cats[b - 1]);
        return World{n, w};
    }

    std::vector<Category> categories() const {
        std::vector<Category> out;
        out.reserve(universe_size);
        for (int b = 1; b <= universe_size; ++b) out.push_back(world_category(code, b));
        return out;
    }
};

}  // namespace ravenlab
