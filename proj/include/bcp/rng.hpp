#pragma once

#include <cstdint>
#include <random>

namespace bcp {

// Seeded generator with hand-rolled derived draws. std::mt19937_64 output is
// fixed by the standard; the distribution helpers are implemented here rather
// than with <random> distributions so that identical seeds give identical
// streams on every platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    // Unbiased uniform draw from [0, k).
    uint64_t below(uint64_t k) {
        if (k <= 1) return 0;
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % k);
        while (true) {
            uint64_t v = eng_();
            if (v < limit) return v % k;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    // Inclusive integer range.
    int int_in(int lo, int hi) {
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace bcp
