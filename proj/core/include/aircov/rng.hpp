#ifndef AIRCOV_RNG_HPP
#define AIRCOV_RNG_HPP

#include <cstdint>

#include "aircov/math.hpp"

namespace aircov {

// Counter-based generator: every random word is a pure function of
// (seed, counter), so sample i can be produced by any thread, in any order,
// and the stream is identical on every platform. The word function is the
// SplitMix64 output stage applied to seed + (counter+1) * golden gamma.
namespace rng {

inline constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t word(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * golden_gamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Uniform in the open interval (0, 1): top 53 bits, offset by half an ulp
// so 0 and 1 are unreachable and normal_inv never sees an endpoint.
inline double uniform(std::uint64_t seed, std::uint64_t counter) {
    return (static_cast<double>(word(seed, counter) >> 11) + 0.5) * 0x1.0p-53;
}

inline double normal(std::uint64_t seed, std::uint64_t counter) {
    return normal_inv(uniform(seed, counter));
}

// Each sample index owns a fixed stride of counters, one per variate role.
// Unused lanes cost nothing; the layout is part of the determinism contract.
inline constexpr std::uint64_t lanes_per_sample = 8;

enum class lane : std::uint64_t {
    bernoulli = 0,  // LoS/NLoS state draw
    x_l = 1,        // LoS location variability
    x_n = 2,        // NLoS location variability
    x_s = 3,        // shadowing excess loss
    px = 4,         // ground point x (area sampling)
    py = 5,         // ground point y (area sampling)
};

inline std::uint64_t counter_for(std::uint64_t index, lane l) {
    return index * lanes_per_sample + static_cast<std::uint64_t>(l);
}

inline double uniform_lane(std::uint64_t seed, std::uint64_t index, lane l) {
    return uniform(seed, counter_for(index, l));
}

inline double normal_lane(std::uint64_t seed, std::uint64_t index, lane l) {
    return normal_inv(uniform_lane(seed, index, l));
}

} // namespace rng
} // namespace aircov

#endif
