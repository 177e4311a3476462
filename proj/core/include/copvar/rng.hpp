#pragma once

#include <cstdint>
#include <random>

#include "copvar/numeric.hpp"

namespace copvar {

// SplitMix64 finaliser.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-index seed derived from a master seed, so that samples are independent
// of how work is split across threads.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master) ^ (index + 1));
}

// mt19937_64 with bit-exact uniform helpers. std::uniform_real_distribution
// is implementation defined; these are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double angle() { return uniform(0.0, 2.0 * kPi); }

    // area-uniform point in the closed disc of the given radius
    Complex unit_disc(double max_radius) {
        const double r = max_radius * std::sqrt(uniform());
        return std::polar(r, angle());
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace copvar
