#pragma once

#include "ravenlab/measure.hpp"
#include "ravenlab/proposition.hpp"
#include "ravenlab/rng.hpp"

namespace ravenlab {

// Seeded generators shared by the property harness and the fuzz suites.

inline CatSet random_catset(Rng& rng) {
    return CatSet(static_cast<unsigned>(rng.between(1, 15)));
}

inline Prop random_proposition(Rng& rng, int n, int depth = 3) {
    if (depth <= 0 || rng.below(3) == 0) {
        switch (rng.below(4)) {
            case 0: return Prop::h();
            case 1: return Prop::exact(static_cast<int>(rng.below(n + 1)));
            default:
                return Prop::atom(static_cast<int>(rng.between(1, n)), random_catset(rng));
        }
    }
    switch (rng.below(5)) {
        case 0: return Prop::negation(random_proposition(rng, n, depth - 1));
        case 1: {
            std::vector<Prop> kids;
            std::size_t count = rng.between(0, 3);
            for (std::size_t i = 0; i < count; ++i)
                kids.push_back(random_proposition(rng, n, depth - 1));
            return Prop::conjunction(std::move(kids));
        }
        case 2: {
            std::vector<Prop> kids;
            std::size_t count = rng.between(0, 3);
            for (std::size_t i = 0; i < count; ++i)
                kids.push_back(random_proposition(rng, n, depth - 1));
            return Prop::disjunction(std::move(kids));
        }
        case 3:
            return Prop::implication(random_proposition(rng, n, depth - 1),
                                     random_proposition(rng, n, depth - 1));
        default: {
            // runs of equal atoms, so the printer's range compression gets exercised
            int from = static_cast<int>(rng.between(1, n));
            int to = static_cast<int>(rng.between(from, n));
            return Prop::atom_range(random_catset(rng), from, to);
        }
    }
}

inline CategoryPrior random_prior(Rng& rng) {
    std::array<Int, 4> draws;
    Int total = 0;
    for (auto& d : draws) {
        d = Int(rng.between(1, 16));
        total += d;
    }
    std::array<Rat, 4> p;
    for (int i = 0; i < 4; ++i) p[i] = make_rat(draws[i], total);
    return CategoryPrior(p);
}

// Rotates through the measure families so theorem guards see both
// premise-satisfying and premise-violating inputs.
inline Measure random_trial_measure(int n, std::uint64_t seed, int kind) {
    Rng rng(seed);
    switch (kind % 6) {
        case 0: return random_exchangeable_measure(n, seed);
        case 1: return random_measure(n, seed);
        case 2: {
            Rat lambda = make_rat(Int(rng.between(1, 6)), Int(rng.between(1, 2)));
            return carnap_measure(n, lambda, random_prior(rng));
        }
        case 3: return iid_product_measure(n, random_prior(rng));
        case 4: {
            Rat lambda(static_cast<long>(rng.between(1, 4)));
            return maher_measure(n, lambda, rng.open_unit_rational(), rng.open_unit_rational(),
                                 rng.open_unit_rational());
        }
        default: return uniform_measure(n);
    }
}

}  // namespace ravenlab
