#include "gft/rng.hpp"

#include <cmath>

namespace gft {

double GaussStream::next() {
    if (have_spare) {
        have_spare = false;
        return spare;
    }
    double u1 = 1.0 - sm.uniform01(); // (0, 1]
    double u2 = sm.uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare = r * std::sin(a);
    have_spare = true;
    return r * std::cos(a);
}

std::uint64_t trial_seed(std::uint64_t master, int index) {
    SplitMix64 mix(master ^ (0x9e3779b97f4a7c15ull * std::uint64_t(index + 1)));
    return mix.next();
}

} // namespace gft
