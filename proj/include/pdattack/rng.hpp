#ifndef PDATTACK_RNG_HPP
#define PDATTACK_RNG_HPP

#include <cstdint>
#include <random>

namespace pdattack {

/// splitmix64 step; used to derive independent sub-seeds so that concurrent
/// workers (restarts, per-example attacks) get decorrelated streams that do
/// not depend on scheduling order.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the high 53 bits; identical on every
/// platform, unlike std::uniform_real_distribution.
inline double next_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform double in [-scale, scale].
inline double next_symmetric(Rng& rng, double scale) {
    return scale * (2.0 * next_unit(rng) - 1.0);
}

}  // namespace pdattack

#endif  // PDATTACK_RNG_HPP
