#include "zetalab/stats.hpp"

#include <algorithm>
#include <cmath>

namespace zetalab::stats {

double ks_statistic(std::vector<double> samples,
                    const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("KS statistic: empty sample");
    std::sort(samples.begin(), samples.end());
    const double n = double(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max(d, std::max(f - double(i) / n, double(i + 1) / n - f));
    }
    return d;
}

double ks_critical_001(long n) {
    if (n <= 0) throw DomainError("KS critical value: sample size must be positive");
    // K(x) = 0.99 at x = 1.62762; valid asymptotically (n here is >= 1e4)
    return 1.62762 / std::sqrt(double(n));
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

bool doubling_flag(const double est[4], double se_final) {
    const bool monotone = est[1] > est[0] && est[2] > est[1] && est[3] > est[2];
    return monotone && (est[3] - est[0]) > 2.0 * se_final;
}

}  // namespace zetalab::stats
