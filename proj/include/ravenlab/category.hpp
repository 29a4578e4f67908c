#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ravenlab {

// The four complete descriptions of a single object over predicates F and G.
// The 2-bit code doubles as the per-object field in a world encoding:
// high bit = F, low bit = G, so f_g=11, f_not_g=10, not_f_g=01, not_f_not_g=00.
// f_not_g is the unique counterexample type to "every F is G".
enum class Category : std::uint8_t {
    not_f_not_g = 0,
    not_f_g = 1,
    f_not_g = 2,
    f_g = 3,
};

constexpr std::array<Category, 4> all_categories{Category::not_f_not_g, Category::not_f_g,
                                                 Category::f_not_g, Category::f_g};

constexpr unsigned code_of(Category c) { return static_cast<unsigned>(c); }
constexpr Category category_of_code(unsigned code) {
    return static_cast<Category>(code & 3u);
}
constexpr bool has_f(Category c) { return (code_of(c) & 2u) != 0; }
constexpr bool has_g(Category c) { return (code_of(c) & 1u) != 0; }

// Predicate-role swap used by the contrapositive column of the raven table:
// F' := not-G, G' := not-F. On categories this swaps f_g with not_f_not_g and
// fixes the other two (the counterexample type maps to itself).
constexpr Category role_swapped(Category c) {
    switch (c) {
        case Category::f_g: return Category::not_f_not_g;
        case Category::not_f_not_g: return Category::f_g;
        default: return c;
    }
}

inline std::string category_name(Category c) {
    switch (c) {
        case Category::f_g: return "FG";
        case Category::f_not_g: return "FnG";
        case Category::not_f_g: return "nFG";
        case Category::not_f_not_g: return "nFnG";
    }
    throw std::logic_error("bad category");
}

// A set of categories as a 4-bit mask; bit v covers the category with code v.
// These are the per-object constraints a proposition can put on one object.
class CatSet {
public:
    constexpr CatSet() = default;
    constexpr explicit CatSet(unsigned mask) : mask_(mask & 0xFu) {}
    static constexpr CatSet of(Category c) { return CatSet(1u << code_of(c)); }

    constexpr unsigned mask() const { return mask_; }
    constexpr bool contains(Category c) const { return (mask_ >> code_of(c)) & 1u; }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool full() const { return mask_ == 0xFu; }
    constexpr int count() const {
        return ((mask_ >> 0) & 1) + ((mask_ >> 1) & 1) + ((mask_ >> 2) & 1) + ((mask_ >> 3) & 1);
    }
    constexpr bool is_singleton() const { return count() == 1; }
    Category single() const {
        if (!is_singleton()) throw std::logic_error("CatSet::single on non-singleton");
        for (Category c : all_categories)
            if (contains(c)) return c;
        throw std::logic_error("unreachable");
    }

    constexpr CatSet operator&(CatSet o) const { return CatSet(mask_ & o.mask_); }
    constexpr CatSet operator|(CatSet o) const { return CatSet(mask_ | o.mask_); }
    constexpr CatSet complement() const { return CatSet(~mask_); }
    constexpr bool operator==(const CatSet&) const = default;

    CatSet role_swapped() const {
        unsigned m = 0;
        for (Category c : all_categories)
            if (contains(c)) m |= 1u << code_of(ravenlab::role_swapped(c));
        return CatSet(m);
    }

private:
    unsigned mask_ = 0;
};

inline constexpr CatSet cat_fg = CatSet::of(Category::f_g);
inline constexpr CatSet cat_f_not_g = CatSet::of(Category::f_not_g);
inline constexpr CatSet cat_not_f_g = CatSet::of(Category::not_f_g);
inline constexpr CatSet cat_not_f_not_g = CatSet::of(Category::not_f_not_g);
inline constexpr CatSet cat_f = CatSet(0b1100);           // {FG, FnG}
inline constexpr CatSet cat_not_f = CatSet(0b0011);       // {nFG, nFnG}
inline constexpr CatSet cat_g = CatSet(0b1010);           // {FG, nFG}
inline constexpr CatSet cat_not_g = CatSet(0b0101);       // {FnG, nFnG}
inline constexpr CatSet cat_f_implies_g = CatSet(0b1011); // everything but FnG
inline constexpr CatSet cat_any = CatSet(0b1111);

// The twelve per-object predicates expressible in a factored background:
// the four complete descriptions, F/G and their negations, and the negated
// complete descriptions. The two "diagonal" subsets {FG, nFnG} and
// {FnG, nFG} are not in this list and are rejected by the classifier.
inline const std::array<CatSet, 12>& delta_constraints() {
    static const std::array<CatSet, 12> k = {
        cat_fg, cat_f_not_g, cat_not_f_g, cat_not_f_not_g,
        cat_f, cat_not_f, cat_g, cat_not_g,
        cat_f_implies_g,                     // = ~FnG
        CatSet(0b0111),                      // ~FG
        CatSet(0b1101),                      // ~nFG
        CatSet(0b1110),                      // ~nFnG
    };
    return k;
}

// Complete descriptions compatible with the generalization: every singleton
// except the counterexample type.
inline const std::array<CatSet, 3>& small_delta_constraints() {
    static const std::array<CatSet, 3> k = {cat_fg, cat_not_f_g, cat_not_f_not_g};
    return k;
}

inline bool delta_expressible(CatSet s) {
    for (CatSet c : delta_constraints())
        if (c == s) return true;
    return false;
}

// Surface names used by the proposition grammar. Only nine masks have a
// direct name; the printer falls back to "~NAME" or a disjunction for the rest.
inline std::optional<CatSet> catset_from_pred_name(std::string_view name) {
    if (name == "F") return cat_f;
    if (name == "G") return cat_g;
    if (name == "FG") return cat_fg;
    if (name == "FnG") return cat_f_not_g;
    if (name == "nFG") return cat_not_f_g;
    if (name == "nFnG") return cat_not_f_not_g;
    if (name == "F>G") return cat_f_implies_g;
    if (name == "nF") return cat_not_f;
    if (name == "nG") return cat_not_g;
    return std::nullopt;
}

inline std::optional<std::string> pred_name_of_catset(CatSet s) {
    if (s == cat_f) return "F";
    if (s == cat_g) return "G";
    if (s == cat_fg) return "FG";
    if (s == cat_f_not_g) return "FnG";
    if (s == cat_not_f_g) return "nFG";
    if (s == cat_not_f_not_g) return "nFnG";
    if (s == cat_f_implies_g) return "F>G";
    if (s == cat_not_f) return "nF";
    if (s == cat_not_g) return "nG";
    return std::nullopt;
}

}  // namespace ravenlab
