#pragma once

#include <cstdint>
#include <random>

namespace levrecon {

/// Seedable generator used by every randomized component.
///
/// Stream-split rule: the generator for (seed, stream) is an mt19937_64 seeded
/// with splitmix64(seed) ^ splitmix64(stream + golden).  Simulations derive one
/// stream per trial index, so results do not depend on how trials are spread
/// over workers.
class Rng {
public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static Rng for_stream(std::uint64_t seed, std::uint64_t stream);

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Unbiased integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Double in [0, 1) with 53 random bits.
    double uniform01();

private:
    std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

inline constexpr std::uint64_t kDefaultSeed = 20240917;

}  // namespace levrecon
