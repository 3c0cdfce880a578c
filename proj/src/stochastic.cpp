#include "zetalab/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "zetalab/levy.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/rng.hpp"
#include "zetalab/series.hpp"

namespace zetalab::stoch {
namespace {

constexpr int kSegmentCap = 30;  // residual weight mass reassigned here
constexpr double kResolution = 1e-3;

double gauss(double x) { return std::exp(-kPi * x * x); }

// P(n) = 2^{-n} for n < 30, residual 2^{-29} on n = 30
int draw_segment(rng::Rng& gen) {
    const double u = gen.uniform();
    const int n = int(std::ceil(-std::log2(u)));
    return std::clamp(n, 1, kSegmentCap);
}

// E|N(mu, sigma^2)| by the folded-normal closed form
double folded_mean(double mu, double sigma) {
    if (sigma == 0.0) return std::abs(mu);
    return sigma * std::sqrt(2.0 / kPi) * std::exp(-mu * mu / (2.0 * sigma * sigma)) +
           mu * std::erf(mu / (std::sqrt(2.0) * sigma));
}

}  // namespace

double peak(double t) {
    if (t < 0.0) throw DomainError("peak function: negative time");
    return t >= 1.0 ? 0.0 : 1.0 - t;
}

PathGrid uniform_grid(double t_end, double resolution) {
    if (!(t_end > 0.0)) throw DomainError("path grid: end time must be positive");
    if (!(resolution > 0.0)) throw DomainError("path grid: resolution must be positive");
    const long m = long(std::ceil(t_end / resolution - 1e-12));
    PathGrid g;
    g.times.reserve(std::size_t(m + 1));
    for (long i = 0; i <= m; ++i) g.times.push_back(t_end * double(i) / double(m));
    g.resolution = t_end / double(m);
    return g;
}

BrownianPath sample_path(const PathGrid& grid, SeedValue seed,
                         std::uint64_t path_index) {
    if (grid.times.empty() || grid.times.front() != 0.0)
        throw DomainError("path grid: times must start at 0");
    BrownianPath p;
    p.grid = grid;
    p.seed = seed;
    p.values.reserve(grid.times.size());
    p.values.push_back(0.0);
    rng::Rng gen(seed, path_index);
    for (std::size_t i = 1; i < grid.times.size(); ++i) {
        const double dt = grid.times[i] - grid.times[i - 1];
        if (!(dt > 0.0)) throw DomainError("path grid: times must increase strictly");
        p.values.push_back(p.values.back() + gen.normal() * std::sqrt(dt));
    }
    return p;
}

double path_value(const BrownianPath& p, double t) {
    const auto& ts = p.grid.times;
    if (t <= ts.front()) return p.values.front();
    if (t >= ts.back()) return p.values.back();
    const auto it = std::upper_bound(ts.begin(), ts.end(), t);
    const std::size_t i = std::size_t(it - ts.begin());
    const double w = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
    return p.values[i - 1] + w * (p.values[i] - p.values[i - 1]);
}

double girsanov_log_density(const BrownianPath& path, int n) {
    if (n < 1) throw DomainError("segment index must be >= 1");
    const double hi = std::sqrt(double(n));
    if (path.grid.times.back() < hi - 1e-9)
        throw DomainError("path grid does not cover the segment");
    if (n >= 2) return 0.0;
    return -0.5 + (path_value(path, 1.0) - path_value(path, 0.0));
}

int segment_of(double t) {
    if (t < 0.0) throw DomainError("segment index: negative time");
    return std::min(kSegmentCap, int(std::floor(t)) + 1);
}

MomentEstimate wr_moment(double t, long n_paths, SeedValue seed) {
    if (t < 0.0) throw DomainError("moment time must be nonnegative");
    if (n_paths < 2) throw DomainError("moment estimate: need at least two paths");

    const int m = segment_of(t);
    const bool live = t < double(m);  // t in [m-1, m); false only past the cap
    const double gt = gauss(t), pt = peak(t);
    const double tq = std::sqrt(t);

    series::NeumaierSum<double> sum, sumsq;
    for (long i = 0; i < n_paths; ++i) {
        rng::Rng gen(seed, std::uint64_t(i));
        const int n = draw_segment(gen);
        double val = 0.0;
        if (n == m && live && gt > 0.0) {
            // walk the segment grid far enough to straddle sqrt(t)
            double tprev = 0.0, vprev = 0.0, b = 0.0;
            if (tq <= 0.0) {
                b = 0.0;
            } else {
                const long steps = long(std::ceil(std::sqrt(double(n)) / kResolution - 1e-12));
                const double h = std::sqrt(double(n)) / double(steps);
                double v = 0.0;
                for (long k = 1; k <= steps; ++k) {
                    tprev = h * double(k - 1);
                    vprev = v;
                    v += gen.normal() * std::sqrt(h);
                    if (h * double(k) >= tq) {
                        b = vprev + (v - vprev) * (tq - tprev) / h;
                        break;
                    }
                }
            }
            val = gt * (b + pt);
        }
        sum.add(val);
        sumsq.add(val * val);
    }
    MomentEstimate me;
    me.n_samples = n_paths;
    me.mean = sum.value() / double(n_paths);
    const double var = std::max(0.0, sumsq.value() / double(n_paths) - me.mean * me.mean);
    me.std_error = std::sqrt(var / double(n_paths - 1));
    return me;
}

MomentEstimate b_s_estimate(double u, long n_paths, double x_max, SeedValue seed) {
    if (!(u > 0.0)) throw DomainError("weighted moment: u must be positive");
    if (!(x_max >= 1.0)) throw DomainError("weighted moment: x_max must be >= 1");
    if (n_paths < 2) throw DomainError("moment estimate: need at least two paths");

    series::NeumaierSum<double> sum_main, sumsq_main, sum_10, sum_full, sumsq_full;
    double est[4] = {0, 0, 0, 0};
    double se_final = 0.0;
    std::vector<double> tbuf, vbuf;

    for (long i = 0; i < 8 * n_paths; ++i) {
        rng::Rng gen(seed, std::uint64_t(i));
        const int n = draw_segment(gen);
        double s_main = 0.0, s_10 = 0.0, s_full = 0.0;
        if (n - 1 < 16) {  // beyond x = 16 the Gaussian damping is below 1e-300
            const double lo = std::sqrt(double(n - 1)), hi = std::sqrt(double(n));
            const long steps = long(std::ceil(hi / kResolution - 1e-12));
            const double h = hi / double(steps);
            tbuf.clear();
            vbuf.clear();
            double v = 0.0;
            for (long k = 1; k <= steps; ++k) {
                const double t0 = h * double(k - 1), t1 = h * double(k);
                const double vp = v;
                v += gen.normal() * std::sqrt(h);
                if (t1 >= lo) {
                    if (tbuf.empty()) {
                        tbuf.push_back(t0);
                        vbuf.push_back(vp);
                    }
                    tbuf.push_back(t1);
                    vbuf.push_back(v);
                }
            }
            // cells of the x-axis section [n-1, n]
            for (std::size_t k = 0; k + 1 < tbuf.size(); ++k) {
                const double x_lo = std::max(tbuf[k] * tbuf[k], double(n - 1));
                const double x_hi = tbuf[k + 1] * tbuf[k + 1];
                if (x_hi <= x_lo) continue;
                const auto cell = [&](double cap, double& acc) {
                    const double xh = std::min(x_hi, cap);
                    if (xh <= x_lo) return;
                    const double w = (std::pow(xh, u) - std::pow(x_lo, u)) / u;
                    const double xm = 0.5 * (x_lo + xh);
                    const double tm = std::sqrt(xm);
                    const double bm =
                        vbuf[k] + (vbuf[k + 1] - vbuf[k]) * (tm - tbuf[k]) /
                                      (tbuf[k + 1] - tbuf[k]);
                    acc += w * gauss(xm) * std::abs(bm + peak(xm));
                };
                cell(x_max, s_main);
                cell(10.0, s_10);
                cell(10000.0, s_full);
            }
        }
        if (i < n_paths) {
            sum_main.add(s_main);
            sumsq_main.add(s_main * s_main);
        }
        sum_10.add(s_10);
        sum_full.add(s_full);
        sumsq_full.add(s_full * s_full);
        const long done = i + 1;
        if (done == n_paths) est[0] = sum_10.value() / double(done);
        if (done == 2 * n_paths) est[1] = sum_full.value() / double(done);
        if (done == 4 * n_paths) est[2] = sum_full.value() / double(done);
        if (done == 8 * n_paths) {
            est[3] = sum_full.value() / double(done);
            const double mv = est[3];
            const double var =
                std::max(0.0, sumsq_full.value() / double(done) - mv * mv);
            se_final = std::sqrt(var / double(done - 1));
        }
    }

    MomentEstimate me;
    me.n_samples = n_paths;
    me.mean = sum_main.value() / double(n_paths);
    const double var =
        std::max(0.0, sumsq_main.value() / double(n_paths) - me.mean * me.mean);
    me.std_error = std::sqrt(var / double(n_paths - 1));
    me.divergence_flag = stats::doubling_flag(est, se_final);
    return me;
}

double b_s_quadrature(double u) {
    if (!(u > 0.0)) throw DomainError("weighted moment: u must be positive");
    series::NeumaierSum<double> total;
    const auto g = [&](double x) -> Complex {
        return std::pow(x, u - 1.0) * gauss(x) *
               folded_mean(peak(x), std::pow(x, 0.25));
    };
    for (int n = 1; n <= kSegmentCap; ++n) {
        if (n - 1 >= 16) break;  // Gaussian damping below 1e-300 past x = 16
        const double w = std::pow(2.0, -double(std::min(n, kSegmentCap - 1)));
        const double seg =
            (n == 1 && u < 1.0)
                ? quad::integrate_singular_lower(g, 0.0, 1.0, u - 1.0, {1e-13, 8000})
                      .value.real()
                : quad::integrate(g, double(n - 1), double(n), {1e-13, 8000})
                      .value.real();
        total.add(w * seg);
    }
    return total.value();
}

double b_s_analytic_bound(double u) {
    auto m = levy::fractional_moment(u, 1.0);
    if (!m) return std::numeric_limits<double>::infinity();
    return *m * (2.0 / (kPi * std::exp(1.0)) + 2.0 / std::sqrt(kTwoPi * std::exp(1.0)));
}

void dump_path_csv(const BrownianPath& path, std::ostream& os) {
    os << "t,value\n";
    for (std::size_t i = 0; i < path.grid.times.size(); ++i) {
        char line[64];
        std::snprintf(line, sizeof line, "%.17g,%.17g\n", path.grid.times[i],
                      path.values[i]);
        os << line;
    }
}

}  // namespace zetalab::stoch
