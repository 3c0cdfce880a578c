#include "zetalab/levy.hpp"

#include <cmath>

#include "zetalab/rng.hpp"
#include "zetalab/series.hpp"

namespace zetalab::levy {
namespace {

void require_params(double x, double y0) {
    if (!(x > 0.0)) throw DomainError("half-stable law: x must be positive");
    if (!(y0 > 0.0)) throw DomainError("half-stable law: y0 must be positive");
}

}  // namespace

double density(double x, double y0) {
    require_params(x, y0);
    return y0 * std::exp(-y0 * y0 / (2.0 * x)) /
           (std::sqrt(kTwoPi) * x * std::sqrt(x));
}

double cdf(double x, double y0) {
    require_params(x, y0);
    return std::erfc(y0 / std::sqrt(2.0 * x));
}

std::vector<double> sample(double y0, long n, SeedValue seed) {
    require_params(1.0, y0);
    if (n < 0) throw DomainError("half-stable sampler: negative sample count");
    std::vector<double> out;
    out.reserve(std::size_t(n));
    const double scale = y0 * y0;
    for (long done = 0; done < n;) {
        rng::Rng gen(seed, std::uint64_t(done / long(rng::kChunkSize)));
        const long take = std::min(n - done, long(rng::kChunkSize));
        for (long i = 0; i < take; ++i) {
            const double z = gen.normal();
            out.push_back(scale / (z * z));
        }
        done += take;
    }
    return out;
}

std::optional<double> fractional_moment(double u, double y0) {
    if (!(u > 0.0)) throw DomainError("fractional moment: u must be positive");
    require_params(1.0, y0);
    if (u >= 0.5) return std::nullopt;
    return std::pow(y0, 2.0 * u) * std::pow(2.0, -u) * std::tgamma(0.5 - u) /
           std::sqrt(kPi);
}

stats::MomentEstimate moment_mc(double u, double y0, long n, SeedValue seed) {
    if (!(u > 0.0)) throw DomainError("fractional moment: u must be positive");
    require_params(1.0, y0);
    if (n < 2) throw DomainError("moment estimate: need at least two samples");

    const double scale = y0 * y0;
    series::NeumaierSum<double> sum, sumsq;
    double est[4] = {0, 0, 0, 0};
    double se_at[4] = {0, 0, 0, 0};
    stats::MomentEstimate me;
    me.n_samples = n;

    // one canonical stream: draw i is the (i mod chunk)-th deviate of chunk
    // i / chunk, so every prefix is reproducible regardless of stop point
    const long chunk = long(rng::kChunkSize);
    rng::Rng gen(seed, 0);
    long next_cp = n;
    int stage = 0;
    for (long i = 0; i < 8 * n; ++i) {
        if (i % chunk == 0) gen = rng::Rng(seed, std::uint64_t(i / chunk));
        const double z = gen.normal();
        const double v = std::pow(scale / (z * z), u);
        sum.add(v);
        sumsq.add(v * v);
        if (i + 1 == next_cp) {
            const double m = double(i + 1);
            const double mean = sum.value() / m;
            const double var = std::max(0.0, sumsq.value() / m - mean * mean);
            est[stage] = mean;
            se_at[stage] = std::sqrt(var / (m - 1.0));
            ++stage;
            next_cp *= 2;
        }
    }
    me.mean = est[0];
    me.std_error = se_at[0];
    me.divergence_flag = stats::doubling_flag(est, se_at[3]);
    return me;
}

}  // namespace zetalab::levy
