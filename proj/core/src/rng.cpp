#include "satrack/sim/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace satrack::sim {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t Rng::derive_seed(std::uint64_t master, std::uint64_t index) {
    // Two mixing rounds so adjacent indices land far apart.
    std::uint64_t s = master ^ (0x632be59bd9b4e019ULL * (index + 1));
    std::uint64_t a = splitmix64(s);
    return splitmix64(a);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // Box-Muller on (0,1] x [0,1): log argument never zero.
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

int Rng::poisson(double mean) {
    if (mean < 0.0) throw std::invalid_argument("Rng::poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean > 700.0)
        throw std::invalid_argument("Rng::poisson: mean above inversion range");
    const double u = uniform();
    double p = std::exp(-mean);
    double cdf = p;
    int k = 0;
    while (u >= cdf && k < 100000) {
        ++k;
        p *= mean / k;
        cdf += p;
    }
    return k;
}

} // namespace satrack::sim
