#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <random>

namespace ris {

/// Counter-keyed random stream.
///
/// Every (seed, stream) pair maps to an independent xoshiro256** state, so a
/// Monte Carlo trial draws exactly the same numbers no matter which worker
/// runs it.  Satisfies UniformRandomBitGenerator.
class Rng {
public:
    using result_type = std::uint64_t;

    Rng(std::uint64_t seed, std::uint64_t stream);
    Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal N(0, 1).
    double normal();

private:
    std::array<std::uint64_t, 4> s_{};
    std::normal_distribution<double> normal_;
};

std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace ris
