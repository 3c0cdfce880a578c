#include <cmath>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "zetalab/common.hpp"
#include "zetalab/levy.hpp"
#include "zetalab/stats.hpp"
#include "zetalab/stochastic.hpp"

using namespace zetalab;
using stoch::BrownianPath;

TEST_CASE("peak function and segment index") {
    CHECK(stoch::peak(0.0) == 1.0);
    CHECK(stoch::peak(0.5) == 0.5);
    CHECK(stoch::peak(1.0) == 0.0);
    CHECK(stoch::peak(7.0) == 0.0);
    CHECK_THROWS_AS(stoch::peak(-0.1), DomainError);

    CHECK(stoch::segment_of(0.0) == 1);
    CHECK(stoch::segment_of(0.999) == 1);
    CHECK(stoch::segment_of(1.0) == 2);
    CHECK(stoch::segment_of(2.5) == 3);
    CHECK(stoch::segment_of(29.5) == 30);
    CHECK(stoch::segment_of(80.0) == 30);  // truncation cap
    CHECK_THROWS_AS(stoch::segment_of(-1.0), DomainError);
}

TEST_CASE("uniform grid invariants") {
    auto g = stoch::uniform_grid(1.0, 1e-3);
    CHECK(g.times.size() == 1001);
    CHECK(g.times.front() == 0.0);
    CHECK(g.times.back() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(g.resolution == doctest::Approx(1e-3).epsilon(1e-12));

    // irrational end point: step shrinks to divide exactly
    auto g2 = stoch::uniform_grid(std::sqrt(2.0), 1e-3);
    CHECK(g2.resolution <= 1e-3 + 1e-15);
    CHECK(g2.times.back() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    for (std::size_t i = 1; i < 50; ++i)
        CHECK(g2.times[i] - g2.times[i - 1] ==
              doctest::Approx(g2.resolution).epsilon(1e-12));

    CHECK_THROWS_AS(stoch::uniform_grid(0.0, 1e-3), DomainError);
    CHECK_THROWS_AS(stoch::uniform_grid(1.0, 0.0), DomainError);
}

TEST_CASE("brownian paths: determinism and interpolation") {
    auto grid = stoch::uniform_grid(1.0, 0.01);
    auto p = stoch::sample_path(grid, 7, 3);
    CHECK(p.values.size() == grid.times.size());
    CHECK(p.values[0] == 0.0);

    auto q = stoch::sample_path(grid, 7, 3);
    CHECK(p.values == q.values);  // bitwise reproducible
    auto r = stoch::sample_path(grid, 7, 4);
    CHECK(p.values != r.values);

    // linear interpolation between nodes, constant extension outside
    const double tm = 0.5 * (grid.times[10] + grid.times[11]);
    CHECK(stoch::path_value(p, tm) ==
          doctest::Approx(0.5 * (p.values[10] + p.values[11])).epsilon(1e-14));
    CHECK(stoch::path_value(p, grid.times[37]) == p.values[37]);
    CHECK(stoch::path_value(p, -5.0) == 0.0);
    CHECK(stoch::path_value(p, 99.0) == p.values.back());
}

TEST_CASE("brownian marginals: KS at the terminal time, covariance across times") {
    const long n = 100000;
    auto grid = stoch::uniform_grid(1.0, 0.01);
    std::vector<double> b1;
    b1.reserve(std::size_t(n));
    for (long i = 0; i < n; ++i)
        b1.push_back(stoch::sample_path(grid, 0, std::uint64_t(i)).values.back());

    const double d = stats::ks_statistic(b1, [](double x) { return stats::normal_cdf(x); });
    CHECK(d < stats::ks_critical_001(n));

    // cov(B_s, B_t) = min(s, t)
    const long m = 30000;
    auto grid2 = stoch::uniform_grid(1.5, 0.01);
    double sp = 0.0, spsq = 0.0;
    for (long i = 0; i < m; ++i) {
        auto p = stoch::sample_path(grid2, 1, std::uint64_t(i));
        const double prod = stoch::path_value(p, 0.5) * stoch::path_value(p, 1.5);
        sp += prod;
        spsq += prod * prod;
    }
    const double mean = sp / double(m);
    const double se = std::sqrt((spsq / double(m) - mean * mean) / double(m - 1));
    CHECK(std::abs(mean - 0.5) < 3.0 * se);
}

TEST_CASE("shift log-density: exact values and coverage checks") {
    // synthetic path with prescribed endpoint increment
    BrownianPath p;
    p.grid = stoch::uniform_grid(1.0, 0.5);
    p.values = {0.0, 0.1, 0.3};
    CHECK(stoch::girsanov_log_density(p, 1) == doctest::Approx(-0.2).epsilon(1e-15));

    auto grid = stoch::uniform_grid(1.5, 0.01);
    auto q = stoch::sample_path(grid, 5, 0);
    CHECK(stoch::girsanov_log_density(q, 2) == 0.0);  // peak vanishes past x = 1

    auto short_grid = stoch::uniform_grid(1.0, 0.01);
    auto s = stoch::sample_path(short_grid, 5, 0);
    CHECK_THROWS_AS(stoch::girsanov_log_density(s, 2), DomainError);  // sqrt(2) uncovered
    CHECK_THROWS_AS(stoch::girsanov_log_density(s, 0), DomainError);
}

TEST_CASE("reweighting by the shift density against direct translation") {
    // E f(B + peak) vs E f(B) exp(logdens) with f = evaluation at a fixed time.
    // At t = 0.5 the two sides coincide exactly (cov(B_t, B_1) = peak(t) there);
    // at t = 0.3 they must NOT agree -- the peak fails the h(0) = 0 requirement
    // of an admissible shift, and the gap 0.7 vs 0.3 exhibits that.
    const long n = 30000;
    auto grid = stoch::uniform_grid(1.0, 0.01);
    double d05 = 0.0, d05sq = 0.0;       // paired difference at t = 0.5
    double sh03 = 0.0, sh03sq = 0.0;     // translated value at t = 0.3
    double rw03 = 0.0, rw03sq = 0.0;     // reweighted value at t = 0.3
    double cm03 = 0.0, cm03sq = 0.0;     // admissible-shift pair h(t) = -t
    for (long i = 0; i < n; ++i) {
        auto p = stoch::sample_path(grid, 2, std::uint64_t(i));
        const double b03 = stoch::path_value(p, 0.3);
        const double b05 = stoch::path_value(p, 0.5);
        const double w = std::exp(stoch::girsanov_log_density(p, 1));
        const double d = (b05 + stoch::peak(0.5)) - b05 * w;
        d05 += d;
        d05sq += d * d;
        const double sh = b03 + stoch::peak(0.3);
        sh03 += sh;
        sh03sq += sh * sh;
        const double rw = b03 * w;
        rw03 += rw;
        rw03sq += rw * rw;
        // h(t) = -t has h(0) = 0 and unit-speed drift: weight exp(-B_1 - 1/2)
        const double cm = (b03 - 0.3) - b03 * std::exp(-p.values.back() - 0.5);
        cm03 += cm;
        cm03sq += cm * cm;
    }
    const auto mean_se = [n](double s, double ssq) {
        const double m = s / double(n);
        return std::pair{m, std::sqrt((ssq / double(n) - m * m) / double(n - 1))};
    };
    const auto [md, sed] = mean_se(d05, d05sq);
    CHECK(std::abs(md) < 3.0 * sed);
    const auto [msh, sesh] = mean_se(sh03, sh03sq);
    CHECK(std::abs(msh - 0.7) < 3.0 * sesh);
    const auto [mrw, serw] = mean_se(rw03, rw03sq);
    CHECK(std::abs(mrw - 0.3) < 3.0 * serw);
    CHECK(msh - mrw > 0.3);  // the inadmissible shift is visibly not reweightable
    const auto [mcm, secm] = mean_se(cm03, cm03sq);
    CHECK(std::abs(mcm) < 3.0 * secm);
}

TEST_CASE("segment-series moment estimator") {
    // closed form of the surviving term: 2^{-n} G(t) (0 + peak(t)) on segment n
    auto e0 = stoch::wr_moment(0.0, 20000, 0);
    CHECK(std::abs(e0.mean - 0.5) < 3.0 * e0.std_error);
    CHECK(e0.mean > 0.4);  // decisively below 1: the first-segment weight is 1/2

    auto e05 = stoch::wr_moment(0.5, 20000, 0);
    const double closed05 = 0.5 * std::exp(-kPi * 0.25) * 0.5;
    CHECK(closed05 == doctest::Approx(0.113984531941).epsilon(1e-9));
    CHECK(std::abs(e05.mean - closed05) < 3.0 * e05.std_error);

    auto e2 = stoch::wr_moment(2.0, 20000, 0);
    CHECK(std::abs(e2.mean) < 3.0 * e2.std_error + 1e-12);

    auto again = stoch::wr_moment(0.5, 20000, 0);
    CHECK(again.mean == e05.mean);
    CHECK(again.std_error == e05.std_error);

    CHECK_THROWS_AS(stoch::wr_moment(-1.0, 100, 0), DomainError);
    CHECK_THROWS_AS(stoch::wr_moment(0.5, 1, 0), DomainError);
}

TEST_CASE("weighted absolute moment: quadrature reference values") {
    CHECK(stoch::b_s_quadrature(0.25) ==
          doctest::Approx(1.5370856490411176826).epsilon(1e-9));
    CHECK(stoch::b_s_quadrature(0.4) ==
          doctest::Approx(0.836676679879825120349).epsilon(1e-9));
    CHECK(stoch::b_s_quadrature(0.5) ==
          doctest::Approx(0.614466455661668615355).epsilon(1e-9));
    CHECK(stoch::b_s_quadrature(0.7) ==
          doctest::Approx(0.374902958289253472817).epsilon(1e-9));
    CHECK_THROWS_AS(stoch::b_s_quadrature(0.0), DomainError);
}

TEST_CASE("weighted absolute moment: MC estimate against quadrature") {
    auto e = stoch::b_s_estimate(0.25, 2000, 1e4, 0);
    CHECK(std::abs(e.mean - stoch::b_s_quadrature(0.25)) < 4.0 * e.std_error);
    CHECK_FALSE(e.divergence_flag);

    auto e5 = stoch::b_s_estimate(0.5, 2000, 1e4, 0);
    CHECK(std::abs(e5.mean - stoch::b_s_quadrature(0.5)) < 4.0 * e5.std_error);
    CHECK_FALSE(e5.divergence_flag);  // the weighted moment is genuinely finite

    // truncation cap is monotone on a fixed stream
    auto c1 = stoch::b_s_estimate(0.25, 500, 1.0, 3);
    auto c10 = stoch::b_s_estimate(0.25, 500, 10.0, 3);
    CHECK(c1.mean <= c10.mean);

    // analytic envelope dominates the estimate at u = 0.4
    const double bound = stoch::b_s_analytic_bound(0.4);
    CHECK(bound == doctest::Approx(2.92121367802).epsilon(1e-9));
    auto e4 = stoch::b_s_estimate(0.4, 1000, 1e4, 0);
    CHECK(e4.mean <= bound);
    CHECK(std::isinf(stoch::b_s_analytic_bound(0.5)));

    CHECK_THROWS_AS(stoch::b_s_estimate(0.0, 100, 10.0, 0), DomainError);
    CHECK_THROWS_AS(stoch::b_s_estimate(0.25, 100, 0.5, 0), DomainError);
    CHECK_THROWS_AS(stoch::b_s_estimate(0.25, 1, 10.0, 0), DomainError);
}

TEST_CASE("csv path dump") {
    auto grid = stoch::uniform_grid(0.01, 0.005);
    auto p = stoch::sample_path(grid, 9, 0);
    std::ostringstream os;
    stoch::dump_path_csv(p, os);
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,value");
    std::getline(is, line);
    CHECK(line.substr(0, 2) == "0,");
    long rows = 1;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == long(grid.times.size()));
}
