#include "zetalab/rng.hpp"

#include <cmath>

namespace zetalab::rng {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(SeedValue seed, std::uint64_t chunk)
    : engine_(splitmix64(splitmix64(seed) + chunk)) {}

double Rng::uniform() {
    // 53 uniform mantissa bits centred in their cell: never exactly 0 or 1
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u = uniform();
    const double v = uniform();
    const double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(kTwoPi * v);
    has_spare_ = true;
    return r * std::cos(kTwoPi * v);
}

}  // namespace zetalab::rng
