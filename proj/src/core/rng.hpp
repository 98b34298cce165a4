#pragma once

#include <cstdint>

namespace qsrep {

// Counter-based 64-bit generator (splitmix64). Output i is a pure function of
// (seed, i), so independent trial streams can be derived from (seed, trial)
// without shared state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    return SplitMix64(SplitMix64::mix(seed ^ SplitMix64::mix(trial)));
}

} // namespace qsrep
