#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace bcp {

// Fixed-universe bitset. Adjacency rows and vertex sets are stored in this
// form so that the clique recursions reduce to word-wide intersections.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    int universe() const { return n_; }

    bool test(int i) const {
        assert(i >= 0 && i < n_);
        return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < n_);
        w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool empty() const { return !any(); }

    Bitset& operator&=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    // set difference: *this = *this \ o
    Bitset& subtract(const Bitset& o) {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset&) const = default;

    bool is_subset_of(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const Bitset& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    // Lowest set bit with index >= i, or -1 when exhausted.
    int next(int i) const {
        if (i < 0) i = 0;
        if (i >= n_) return -1;
        size_t word = static_cast<size_t>(i) >> 6;
        uint64_t cur = w_[word] & (~uint64_t{0} << (i & 63));
        while (true) {
            if (cur) return static_cast<int>(word * 64 + std::countr_zero(cur));
            if (++word >= w_.size()) return -1;
            cur = w_[word];
        }
    }
    int first() const { return next(0); }

    // Clears every bit with index <= i.
    void clear_up_to(int i) {
        if (i < 0) return;
        size_t word = static_cast<size_t>(i) >> 6;
        for (size_t k = 0; k < word && k < w_.size(); ++k) w_[k] = 0;
        if (word < w_.size()) {
            int b = i & 63;
            w_[word] &= (b == 63) ? 0 : (~uint64_t{0} << (b + 1));
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = first(); v >= 0; v = next(v + 1)) out.push_back(v);
        return out;
    }

    template <class F>
    void for_each(F&& f) const {
        for (int v = first(); v >= 0; v = next(v + 1)) f(v);
    }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace bcp
