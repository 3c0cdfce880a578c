#pragma once

#include <cstdint>
#include <random>

#include "zetalab/common.hpp"

namespace zetalab::rng {

// Deterministic stream: (seed, chunk) -> independent mt19937_64 engine.
// Monte Carlo drivers draw in fixed-size chunks indexed from 0 and reduce in
// chunk order, so a serial run and any parallel schedule produce identical
// results bit for bit.
class Rng {
public:
    explicit Rng(SeedValue seed, std::uint64_t chunk = 0);

    // uniform on the open interval (0,1): (x >> 11 + 0.5) * 2^-53
    double uniform();
    // standard normal via Box-Muller; the second deviate is cached
    double normal();
    std::uint64_t bits() { return engine_(); }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

constexpr std::uint64_t kChunkSize = 4096;

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace zetalab::rng
