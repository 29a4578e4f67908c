#pragma once

#include "ravenlab/proposition.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ravenlab {

// Classification of a proposition against the factored background families:
// in_delta       - equivalent to an independent conjunction of per-object
//                  constraints, each one of the twelve expressible predicates
// in_small_delta - additionally every constraint is a complete description
//                  other than the counterexample type (these backgrounds
//                  cannot falsify the generalization)
// The tautology belongs to both families (no object mentioned).
enum class BackgroundFamily { not_in_delta, in_delta, in_small_delta };

struct DeltaClass {
    BackgroundFamily family = BackgroundFamily::not_in_delta;
    std::map<int, CatSet> constraints;  // mentioned objects only
    std::string note;                   // diagnostic when not_in_delta

    bool in_delta() const { return family != BackgroundFamily::not_in_delta; }
    bool in_small_delta() const { return family == BackgroundFamily::in_small_delta; }

    std::vector<int> mentioned() const {
        std::vector<int> out;
        out.reserve(constraints.size());
        for (const auto& [b, _] : constraints) out.push_back(b);
        return out;
    }
};

// Semantic test: project the event onto each object and require the event to
// factor exactly into the product of its projections, every projection being
// one of the twelve expressible constraints. Logically equal propositions
// classify identically.
inline DeltaClass classify_background(const Prop& prop, int n) {
    DeltaClass out;
    Event e = prop.event(n);
    if (e.empty()) {
        out.note = "unsatisfiable proposition";
        return out;
    }

    std::vector<unsigned> projection(n + 1, 0);
    e.for_each([&](WorldCode w) {
        for (int b = 1; b <= n; ++b) projection[b] |= 1u << code_of(world_category(w, b));
    });

    Event product = Event::all(n);
    for (int b = 1; b <= n; ++b) product &= Event::of_categories(n, b, CatSet(projection[b]));
    if (!(product == e)) {
        out.note = "does not factor into independent per-object constraints";
        return out;
    }

    bool all_small = true;
    for (int b = 1; b <= n; ++b) {
        CatSet s(projection[b]);
        if (s.full()) continue;  // unmentioned
        if (!delta_expressible(s)) {
            out.note = "constraint on object " + std::to_string(b) +
                       " is not one of the twelve expressible predicates";
            out.constraints.clear();
            return out;
        }
        out.constraints[b] = s;
        if (!(s.is_singleton() && s != cat_f_not_g)) all_small = false;
    }
    out.family = all_small ? BackgroundFamily::in_small_delta : BackgroundFamily::in_delta;
    return out;
}

enum class EnumerationFamily { delta, small_delta };

struct BackgroundEnumeration {
    std::vector<Prop> members;
    bool truncated = false;
};

// Canonical members of the requested family whose mentioned objects avoid
// `excluded`: each free object gets one of the family's constraints or stays
// unmentioned. Members are semantically distinct by construction and emitted
// in a fixed mixed-radix order (ascending objects, later objects vary faster).
inline BackgroundEnumeration enumerate_backgrounds(int n, const std::vector<int>& excluded,
                                                   EnumerationFamily family,
                                                   std::size_t max_count = SIZE_MAX) {
    checked_universe_size(n);
    std::vector<bool> skip(n + 1, false);
    for (int b : excluded) {
        check_object(b, n);
        skip[b] = true;
    }
    std::vector<int> free_objects;
    for (int b = 1; b <= n; ++b)
        if (!skip[b]) free_objects.push_back(b);

    std::vector<CatSet> options;  // index 0 = unmentioned
    options.push_back(cat_any);
    if (family == EnumerationFamily::delta)
        for (CatSet c : delta_constraints()) options.push_back(c);
    else
        for (CatSet c : small_delta_constraints()) options.push_back(c);

    BackgroundEnumeration out;
    std::vector<std::size_t> pick(free_objects.size(), 0);
    while (true) {
        if (out.members.size() >= max_count) {
            out.truncated = true;
            return out;
        }
        std::vector<Prop> atoms;
        for (std::size_t i = 0; i < free_objects.size(); ++i)
            if (pick[i] != 0) atoms.push_back(Prop::atom(free_objects[i], options[pick[i]]));
        out.members.push_back(Prop::conjunction(std::move(atoms)));

        std::size_t i = pick.size();
        while (i > 0) {
            --i;
            if (++pick[i] < options.size()) break;
            pick[i] = 0;
            if (i == 0) return out;
        }
        if (pick.empty()) return out;
    }
}

// All size-k subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k) {
    if (k < 0 || k > n) throw std::out_of_range("combination size out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    if (k == 0) out.assign(1, {});
    return out;
}

// Worlds where exactly the objects in c satisfy F.
inline Event z_event(const std::vector<int>& c, int n) {
    std::vector<bool> in(n + 1, false);
    for (int b : c) {
        check_object(b, n);
        in[b] = true;
    }
    Event e = Event::all(n);
    for (int b = 1; b <= n; ++b) e &= Event::of_categories(n, b, in[b] ? cat_f : cat_not_f);
    return e;
}

// Evidence counts in the predictive-rule sense: how many objects a factored
// background describes completely, per category.
struct CategoryCounts {
    int mentioned = 0;
    std::array<int, 4> per_category{0, 0, 0, 0};

    int of(Category c) const { return per_category[code_of(c)]; }
    int n_f() const { return of(Category::f_g) + of(Category::f_not_g); }
    int n_not_g() const { return of(Category::f_not_g) + of(Category::not_f_not_g); }
    int n_f_not_g() const { return of(Category::f_not_g); }
};

inline CategoryCounts counts_of(const DeltaClass& dc) {
    CategoryCounts out;
    for (const auto& [b, s] : dc.constraints) {
        if (!s.is_singleton())
            throw std::invalid_argument("counts require complete descriptions; object " +
                                        std::to_string(b) + " is only partially constrained");
        ++out.mentioned;
        ++out.per_category[code_of(s.single())];
    }
    return out;
}

}  // namespace ravenlab
