#pragma once

#include <optional>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/stats.hpp"

namespace zetalab::levy {

// One-sided 1/2-stable law with scale set by y0 > 0:
// density y0 exp(-y0^2/(2x)) / (sqrt(2 pi) x^{3/2}) on x > 0.
double density(double x, double y0);

// P(L <= x) = erfc(y0 / sqrt(2x)).
double cdf(double x, double y0);

// i.i.d. draws via the exact representation L = y0^2 / Z^2, Z standard
// normal; deterministic per seed under the chunk-seeding contract.
std::vector<double> sample(double y0, long n, SeedValue seed);

// E L^u = y0^{2u} 2^{-u} Gamma(1/2 - u) / sqrt(pi) for u in (0, 1/2);
// nullopt marks divergence (u >= 1/2). Divergence is an outcome, not a fault.
std::optional<double> fractional_moment(double u, double y0);

// Sample mean of L^u over the first n draws of the stream. The divergence
// diagnostic continues the same stream to 2n, 4n and 8n draws and flags
// monotone growth that clears the noise of the longest run.
stats::MomentEstimate moment_mc(double u, double y0, long n, SeedValue seed);

}  // namespace zetalab::levy
