#pragma once

#include "ravenlab/category.hpp"
#include "ravenlab/permutation.hpp"
#include "ravenlab/world.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ravenlab {

// A set of worlds over a fixed universe size, stored as a bit vector of
// length 4^n (bit w = world w). All set algebra stays within one n.
class Event {
public:
    static Event none(int n) { return Event(n); }

    static Event all(int n) {
        Event e(n);
        for (auto& w : e.words_) w = ~std::uint64_t(0);
        e.mask_tail();
        return e;
    }

    // {w : category of `object` in w lies in `cats`}; filled in runs since
    // the object's code cycles with period 4^object.
    static Event of_categories(int n, int object, CatSet cats) {
        checked_universe_size(n);
        check_object(object, n);
        Event e(n);
        if (cats.empty()) return e;
        if (cats.full()) return all(n);
        std::uint64_t block = std::uint64_t(1) << (2 * (object - 1));  // worlds per code value
        std::uint64_t period = block * 4;
        for (unsigned v = 0; v < 4; ++v) {
            if (!cats.contains(category_of_code(v))) continue;
            for (std::uint64_t start = v * block; start < e.size_; start += period)
                e.set_range(start, block);
        }
        return e;
    }

    int universe_size() const { return n_; }
    std::uint64_t world_space() const { return size_; }

    bool test(WorldCode w) const { return (words_[w >> 6] >> (w & 63)) & 1u; }
    void set(WorldCode w) { words_[w >> 6] |= std::uint64_t(1) << (w & 63); }
    void reset(WorldCode w) { words_[w >> 6] &= ~(std::uint64_t(1) << (w & 63)); }

    std::uint64_t count() const {
        std::uint64_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool is_all() const { return count() == size_; }

    Event operator&(const Event& o) const {
        Event e = aligned(o);
        for (std::size_t i = 0; i < words_.size(); ++i) e.words_[i] = words_[i] & o.words_[i];
        return e;
    }
    Event operator|(const Event& o) const {
        Event e = aligned(o);
        for (std::size_t i = 0; i < words_.size(); ++i) e.words_[i] = words_[i] | o.words_[i];
        return e;
    }
    Event& operator&=(const Event& o) { return *this = *this & o; }
    Event& operator|=(const Event& o) { return *this = *this | o; }
    Event complement() const {
        Event e(n_);
        for (std::size_t i = 0; i < words_.size(); ++i) e.words_[i] = ~words_[i];
        e.mask_tail();
        return e;
    }
    bool operator==(const Event& o) const { return n_ == o.n_ && words_ == o.words_; }

    bool intersects(const Event& o) const {
        aligned(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                unsigned bit = std::countr_zero(w);
                fn(static_cast<WorldCode>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    Event permuted(const Permutation& pi) const {
        if (pi.size() != n_) throw std::invalid_argument("permutation size mismatch");
        Event e(n_);
        for_each([&](WorldCode w) { e.set(pi.apply_world(w)); });
        return e;
    }

    // Serialized form: "evt:N=<n>:" followed by the bit vector in lowercase
    // hex, least-significant world first (first digit covers worlds 0..3).
    std::string dump_hex() const {
        std::string out = "evt:N=" + std::to_string(n_) + ":";
        static const char digits[] = "0123456789abcdef";
        for (std::uint64_t nib = 0; nib < size_ / 4; ++nib) {
            unsigned v = static_cast<unsigned>((words_[(nib * 4) >> 6] >> ((nib * 4) & 63)) & 0xFu);
            out += digits[v];
        }
        return out;
    }

private:
    explicit Event(int n)
        : n_(checked_universe_size(n)),
          size_(world_space_size(n)),
          words_((size_ + 63) / 64, 0) {}

    Event aligned(const Event& o) const {
        if (o.n_ != n_) throw std::invalid_argument("event universe size mismatch");
        return Event(n_);
    }

    void set_range(std::uint64_t start, std::uint64_t len) {
        std::uint64_t end = start + len;
        while (start < end && (start & 63)) set(start++);
        while (start + 64 <= end) {
            words_[start >> 6] = ~std::uint64_t(0);
            start += 64;
        }
        while (start < end) set(start++);
    }

    void mask_tail() {
        std::uint64_t used = size_ & 63;
        if (used) words_.back() &= (std::uint64_t(1) << used) - 1;
    }

    int n_;
    std::uint64_t size_;
    std::vector<std::uint64_t> words_;
};

}  // namespace ravenlab
