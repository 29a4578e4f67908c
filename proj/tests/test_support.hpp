#pragma once

#include "ravenlab/measure.hpp"
#include "ravenlab/proposition.hpp"

#include <vector>

namespace ravenlab::testing {

// Independent truth evaluation: walks the AST against an explicit category
// vector, bypassing the event algebra entirely.
inline bool satisfies(const Prop& p, const std::vector<Category>& w) {
    switch (p.kind()) {
        case Prop::Kind::atom:
            return p.cats().contains(w.at(p.object() - 1));
        case Prop::Kind::h_all:
            for (Category c : w)
                if (c == Category::f_not_g) return false;
            return true;
        case Prop::Kind::exact_count: {
            int k = 0;
            for (Category c : w)
                if (has_f(c)) ++k;
            return k == p.count();
        }
        case Prop::Kind::negation:
            return !satisfies(p.children()[0], w);
        case Prop::Kind::conjunction:
            for (const Prop& q : p.children())
                if (!satisfies(q, w)) return false;
            return true;
        case Prop::Kind::disjunction:
            for (const Prop& q : p.children())
                if (satisfies(q, w)) return true;
            return false;
        case Prop::Kind::implication:
            return !satisfies(p.children()[0], w) || satisfies(p.children()[1], w);
    }
    return false;
}

inline std::vector<Category> decode(WorldCode code, int n) {
    return World{n, code}.categories();
}

// Slow reference probability: rational sum of per-world weights over the
// worlds the oracle evaluator accepts.
inline Rat brute_probability(const Measure& m, const Prop& p) {
    Rat total = 0;
    for (WorldCode w = 0; w < world_space_size(m.universe_size()); ++w)
        if (satisfies(p, decode(w, m.universe_size()))) total += m.weight(w);
    return total;
}

inline Rat brute_conditional(const Measure& m, const Prop& a, const Prop& given) {
    Rat num = 0, den = 0;
    for (WorldCode w = 0; w < world_space_size(m.universe_size()); ++w) {
        auto cats = decode(w, m.universe_size());
        if (!satisfies(given, cats)) continue;
        den += m.weight(w);
        if (satisfies(a, cats)) num += m.weight(w);
    }
    return num / den;
}

}  // namespace ravenlab::testing
