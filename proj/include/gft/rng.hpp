#pragma once

#include <cstdint>

namespace gft {

// SplitMix64; fixed algorithm so streams are identical across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // in [0, 1)
    double uniform01() { return double(next() >> 11) * 0x1.0p-53; }
};

// Standard normals via Box-Muller on SplitMix64 output.
struct GaussStream {
    SplitMix64 sm;
    bool have_spare = false;
    double spare = 0.0;

    explicit GaussStream(std::uint64_t seed) : sm(seed) {}

    double next();
};

// Per-trial stream derived from (master seed, trial index); trials are
// independent of execution order, so parallel runs reproduce serial ones.
std::uint64_t trial_seed(std::uint64_t master, int index);

} // namespace gft
