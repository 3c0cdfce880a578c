#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zetalab/common.hpp"
#include "zetalab/stats.hpp"

namespace zetalab::stoch {

using stats::MomentEstimate;

// the peak function: 1 - t on [0, 1], zero beyond
double peak(double t);

struct PathGrid {
    std::vector<double> times;  // strictly increasing, times[0] = 0
    double resolution = 0.0;    // max step
};

// times 0, h, 2h, ..., t_end with h chosen so h <= resolution exactly divides
PathGrid uniform_grid(double t_end, double resolution);

struct BrownianPath {
    PathGrid grid;
    std::vector<double> values;  // values[0] = 0
    SeedValue seed = 0;
};

// one standard Brownian path via independent Gaussian increments;
// deterministic per (grid, seed, path_index) under the chunk contract
BrownianPath sample_path(const PathGrid& grid, SeedValue seed,
                         std::uint64_t path_index = 0);

// linear interpolation on the grid; constant extension outside it
double path_value(const BrownianPath& p, double t);

// log Radon-Nikodym density of the peak-shifted segment measure:
// 0 for n >= 2; -1/2 + (c(1) - c(0)) on the first segment
double girsanov_log_density(const BrownianPath& path, int n);

// x-axis segment [n-1, n) containing t, capped at the truncation index
int segment_of(double t);

// Monte Carlo moment of the weighted segment-law series at time t:
// draw a segment with weight 2^{-n} (residual mass on n = 30), simulate the
// path, evaluate G(t)(B_sqrt(t) + p(t)) when the drawn segment contains t
// and zero otherwise.
MomentEstimate wr_moment(double t, long n_paths, SeedValue seed);

// MC estimate of int_0^{x_max} x^{u-1} E|c(x)| dx with the same generative
// draw; cells use the exact weight (x_{i+1}^u - x_i^u)/u against |c| at the
// cell midpoint. The divergence diagnostic runs the fixed ladder
// x_max = 10, 10^2, 10^3, 10^4 at path counts n, 2n, 4n, 8n on one stream.
MomentEstimate b_s_estimate(double u, long n_paths, double x_max, SeedValue seed);

// deterministic quadrature of the same weighted integral through the
// folded-normal closed form E|N(p(x), sqrt(x))|
double b_s_quadrature(double u);

// analytic envelope: E L^u * (2 max x^2 G + 2 max x G), finite for u < 1/2
double b_s_analytic_bound(double u);

// CSV dump, header "t,value", one row per grid point
void dump_path_csv(const BrownianPath& path, std::ostream& os);

}  // namespace zetalab::stoch
