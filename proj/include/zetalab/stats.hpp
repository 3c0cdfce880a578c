#pragma once

#include <functional>
#include <vector>

#include "zetalab/common.hpp"

namespace zetalab::stats {

// Monte Carlo estimate with the doubling divergence diagnostic attached.
struct MomentEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    long n_samples = 0;
    bool divergence_flag = false;
};

// Sup-distance between the empirical CDF of the samples and a model CDF.
// The sample vector is sorted internally.
double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf);

// Asymptotic Kolmogorov critical value at alpha = 0.01, scaled to sample size.
double ks_critical_001(long n);

double normal_cdf(double z);

// Doubling diagnostic: four estimates of the same quantity at sample sizes
// n, 2n, 4n, 8n. Divergence is declared when the sequence rises three times
// in a row and the total climb clears twice the final standard error.
bool doubling_flag(const double est[4], double se_final);

}  // namespace zetalab::stats
