#pragma once

#include "ravenlab/world.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ravenlab {

// A bijection of the universe {1..n}. Propositions are permuted by renaming
// objects; worlds are permuted by moving each object's category to its image.
class Permutation {
public:
    explicit Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
        int n = static_cast<int>(map_.size());
        std::vector<bool> seen(n, false);
        for (int v : map_) {
            if (v < 1 || v > n || seen[v - 1])
                throw std::invalid_argument("permutation mapping is not a bijection of {1..n}");
            seen[v - 1] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> m(n);
        std::iota(m.begin(), m.end(), 1);
        return Permutation(std::move(m));
    }

    // swaps i and j, fixes everything else
    static Permutation transposition(int n, int i, int j) {
        Permutation p = identity(n);
        check_object(i, n);
        check_object(j, n);
        std::swap(p.map_[i - 1], p.map_[j - 1]);
        return p;
    }

    int size() const { return static_cast<int>(map_.size()); }
    int operator()(int object) const {
        check_object(object, size());
        return map_[object - 1];
    }

    Permutation inverse() const {
        std::vector<int> m(map_.size());
        for (int b = 1; b <= size(); ++b) m[map_[b - 1] - 1] = b;
        return Permutation(std::move(m));
    }

    // image world: object pi(b) gets the category object b had
    WorldCode apply_world(WorldCode w) const {
        WorldCode out = 0;
        for (int b = 1; b <= size(); ++b)
            out = with_category(out, map_[b - 1], world_category(w, b));
        return out;
    }

    const std::vector<int>& mapping() const { return map_; }

    // All n! permutations in lexicographic order; test-scale n only.
    static void for_each(int n, const std::function<void(const Permutation&)>& fn) {
        std::vector<int> m(n);
        std::iota(m.begin(), m.end(), 1);
        do {
            fn(Permutation(m));
        } while (std::next_permutation(m.begin(), m.end()));
    }

private:
    std::vector<int> map_;
};

}  // namespace ravenlab
