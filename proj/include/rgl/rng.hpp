// Counter-based deterministic randomness.
//
// All sampling in this library is driven by a stateless splitmix64-style
// mixing function applied to (seed, counter) pairs.  Because each draw is a
// pure function of its indices, generation is order-independent: the same
// (n, alpha, seed) triple yields the same graph no matter how work is split
// across threads.
#pragma once

#include <cstdint>

namespace rgl {

// splitmix64 finalizer (Steele/Lea/Flood; constants due to Vigna).
inline std::uint64_t splitmix64_finalize(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

// Mix a seed with a counter into a uniform 64-bit word.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t counter) {
    // Advance the splitmix64 state by `counter+1` golden-gamma steps in one
    // multiply, then finalize.  Adding 1 avoids the weak (seed, 0) fixed line.
    return splitmix64_finalize(seed + (counter + 1) * 0x9e3779b97f4a7c15ULL);
}

// Uniform double in [0,1) from the top 53 bits of a mixed word.
inline double unit_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * 0x1.0p-53;
}

// Tiny convenience generator for places that want a stream rather than
// indexed draws (test data, tie-free shuffles).  Still deterministic.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64_finalize(state_);
    }

    // Uniform value in [0, bound).
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    double next_unit() { return unit_double(next()); }

private:
    std::uint64_t state_;
};

} // namespace rgl
