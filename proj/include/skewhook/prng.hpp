#pragma once

#include "skewhook/rational.hpp"

#include <cstdint>

namespace skewhook {

// splitmix64; fixed sequence per seed so every sampled run is reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (s_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0,n) without modulo bias
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::domain_error("SplitMix64::below: empty range");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % n;
    }

    long int_in(long lo, long hi) {  // inclusive
        if (hi < lo) throw std::domain_error("SplitMix64::int_in: empty range");
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() { return (next() & 1) != 0; }

    // exact dyadic uniform on [0,1): (next() >> 11) / 2^53
    Rat dyadic53() {
        std::uint64_t v = next() >> 11;
        Rat r(Int(static_cast<unsigned long>(v)), pow_int(Int(2), 53));
        r.canonicalize();
        return r;
    }

    // random rational with numerator and denominator bounded by `bound`
    Rat rat_in(long bound) {
        long num = int_in(-bound, bound);
        long den = int_in(1, bound);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t s_;
};

}  // namespace skewhook
