#include "zetalab/levy.hpp"

#include <cmath>

#include "doctest.h"
#include "zetalab/quadrature.hpp"
#include "zetalab/stats.hpp"

using namespace zetalab;

namespace {

// int_x0^inf x^u d_{y0}(x) dx via w = 1/x: the transformed integrand
// y0 e^{-y0^2 w / 2} w^{-u - 1/2} / sqrt(2 pi) has an integrable endpoint
// singularity instead of a heavy tail.
double moment_tail_quad(double u, double y0, double x0, double tol) {
    auto g = [&](double w) -> Complex {
        return y0 * std::exp(-y0 * y0 * w / 2.0) * std::pow(w, -u - 0.5) /
               std::sqrt(kTwoPi);
    };
    return quad::integrate_singular_lower(g, 0.0, 1.0 / x0, -u - 0.5, {tol, 8000})
        .value.real();
}

double moment_quad(double u, double y0) {
    auto f = [&](double x) -> Complex {
        return std::pow(x, u) * levy::density(x, y0);
    };
    return quad::integrate(f, 0.0, 1.0, {1e-13, 8000}).value.real() +
           moment_tail_quad(u, y0, 1.0, 1e-13);
}

}  // namespace

TEST_CASE("density: frozen value, normalization, mode") {
    // d_1(1) = e^{-1/2}/sqrt(2 pi)
    CHECK(levy::density(1.0, 1.0) == doctest::Approx(0.241970724519143349798).epsilon(1e-14));

    // total mass via the same split quadrature (heavy tail folded to w = 1/x)
    const double mass = moment_quad(0.0, 1.0);
    CHECK(std::abs(mass - 1.0) < 1e-10);

    for (double y0 : {1.0, 2.0}) {
        const double star = y0 * y0 / 3.0;
        CHECK(levy::density(star, y0) > levy::density(star * 1.01, y0));
        CHECK(levy::density(star, y0) > levy::density(star * 0.99, y0));
    }

    CHECK_THROWS_AS(levy::density(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(levy::density(1.0, -1.0), DomainError);
}

TEST_CASE("cdf: closed value, monotonicity, quadrature consistency") {
    CHECK(levy::cdf(1.0, 1.0) == doctest::Approx(0.31731050786291410283).epsilon(1e-14));
    CHECK(levy::cdf(4.0, 2.0) == doctest::Approx(0.31731050786291410283).epsilon(1e-14));
    CHECK(levy::cdf(1e12, 1.0) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(levy::cdf(1e-3, 1.0) < 1e-100);

    double prev = 0.0;
    for (double x : {0.01, 0.1, 0.5, 1.0, 3.0, 10.0, 100.0}) {
        const double f = levy::cdf(x, 1.0);
        CHECK(f > prev);
        prev = f;
    }

    for (double x : {0.1, 1.0, 10.0}) {
        auto f = [&](double t) -> Complex { return levy::density(t, 1.0); };
        const double q = quad::integrate(f, 0.0, x, {1e-12, 8000}).value.real();
        CHECK(std::abs(q - levy::cdf(x, 1.0)) < 1e-9);
    }
}

TEST_CASE("sampler: support, determinism, KS, scaling") {
    auto s = levy::sample(1.0, 20000, 7);
    for (double v : s) CHECK(v > 0.0);

    auto s2 = levy::sample(1.0, 20000, 7);
    CHECK(s == s2);

    // prefix consistency under the chunk contract
    auto s3 = levy::sample(1.0, 5000, 7);
    bool prefix_ok = true;
    for (int i = 0; i < 5000; ++i) prefix_ok = prefix_ok && s3[i] == s[i];
    CHECK(prefix_ok);

    auto big = levy::sample(1.0, 100000, 0);
    const double d =
        stats::ks_statistic(big, [](double x) { return levy::cdf(x, 1.0); });
    CHECK(d < stats::ks_critical_001(100000));

    // scaling: L(y0 = 2) = 4 L(y0 = 1) exactly on the same stream
    auto a = levy::sample(2.0, 1000, 3);
    auto b = levy::sample(1.0, 1000, 3);
    bool scaled = true;
    for (int i = 0; i < 1000; ++i) scaled = scaled && a[i] == 4.0 * b[i];
    CHECK(scaled);

    // and distributionally across independent streams
    auto c = levy::sample(2.0, 100000, 11);
    for (double& v : c) v /= 4.0;
    const double d2 =
        stats::ks_statistic(c, [](double x) { return levy::cdf(x, 1.0); });
    CHECK(d2 < stats::ks_critical_001(100000));
}

TEST_CASE("fractional moments: closed form, dichotomy, quadrature oracle") {
    auto m = levy::fractional_moment(0.25, 1.0);
    REQUIRE(m.has_value());
    CHECK(*m == doctest::Approx(1.72007997464903907075).epsilon(1e-14));

    CHECK(*levy::fractional_moment(1e-12, 1.0) == doctest::Approx(1.0).epsilon(1e-9));

    CHECK_FALSE(levy::fractional_moment(0.5, 1.0).has_value());
    CHECK_FALSE(levy::fractional_moment(0.6, 1.0).has_value());
    CHECK(levy::fractional_moment(0.499, 1.0).has_value());

    CHECK_THROWS_AS(levy::fractional_moment(-0.1, 1.0), DomainError);
    CHECK_THROWS_AS(levy::fractional_moment(0.25, 0.0), DomainError);

    for (double u : {0.1, 0.2, 0.3, 0.4}) {
        for (double y0 : {0.5, 1.0, 2.0}) {
            const double cf = *levy::fractional_moment(u, y0);
            const double q = moment_quad(u, y0);
            CHECK(std::abs(cf - q) / cf < 1e-8);
        }
    }

    // scaling identity is exact in the closed form
    for (double u : {0.1, 0.3, 0.45}) {
        const double lhs = *levy::fractional_moment(u, 2.0);
        const double rhs = std::pow(2.0, 2.0 * u) * *levy::fractional_moment(u, 1.0);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
    }
}

TEST_CASE("MC moments: agreement, determinism, divergence flags") {
    auto f = levy::moment_mc(0.25, 1.0, 100000, 0);
    CHECK(std::abs(f.mean - 1.72007997464903907075) < 3.0 * f.std_error);
    CHECK(f.n_samples == 100000);
    CHECK_FALSE(f.divergence_flag);

    auto g = levy::moment_mc(0.25, 1.0, 100000, 0);
    CHECK(f.mean == g.mean);
    CHECK(f.std_error == g.std_error);

    // the diagnostic at the configuration the command-line contract pins
    auto h = levy::moment_mc(0.6, 1.0, 1000000, 42);
    CHECK(h.divergence_flag);
    auto k = levy::moment_mc(0.25, 1.0, 100000, 42);
    CHECK_FALSE(k.divergence_flag);

    CHECK_THROWS_AS(levy::moment_mc(0.25, 1.0, 1, 0), DomainError);
}
