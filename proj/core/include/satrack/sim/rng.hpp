#pragma once

#include <cstdint>

namespace satrack::sim {

/// Deterministic random source with hand-rolled samplers. The standard
/// library distributions are implementation-defined, so byte-identical
/// output across toolchains requires owning the whole sampling path:
/// splitmix64 core, Box-Muller normals, inversion-by-search Poisson.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    /// Decorrelated stream for substream `index` of a master seed.
    static std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal (Box-Muller; one spare value cached).
    double normal();

    /// Poisson by CDF inversion. mean must be in [0, 700] (the unscaled
    /// inversion underflows beyond that; far above any plausible scan rate).
    int poisson(double mean);

private:
    std::uint64_t state_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace satrack::sim
