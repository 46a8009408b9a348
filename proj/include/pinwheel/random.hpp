#pragma once

// Counter-based, splittable generator: output i of stream s under key k is a
// pure function of (k, s, i), so results never depend on evaluation order.

#include <cstdint>

namespace pinwheel {

inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
public:
    explicit Rng(std::uint64_t key, std::uint64_t stream = 0) : key_(key), stream_(stream) {}

    std::uint64_t next() { return mix64(mix64(key_ ^ mix64(stream_)) + counter_++); }

    // Uniform in [0, bound); rejection keeps it exact.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        for (;;) {
            std::uint64_t x = next();
            if (x < limit) return x % bound;
        }
    }

    // Independent child stream.
    Rng split(std::uint64_t tag) const { return Rng(mix64(key_ ^ mix64(stream_ + 0x5851f42d4c957f2dULL)), tag); }

    // Uniform double in [0, 1); only for choices that are rationalized afterwards.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t key_, stream_;
    std::uint64_t counter_ = 0;
};

}  // namespace pinwheel
