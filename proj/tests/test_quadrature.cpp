#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "zetalab/quadrature.hpp"

using namespace zetalab;
using namespace zetalab::quad;

TEST_CASE("polynomial on a finite interval") {
    auto r = integrate([](double x) -> Complex { return x * x; }, 0.0, 1.0);
    CHECK(std::abs(r.value.real() - 1.0 / 3.0) <= r.err_bound + 1e-14);
    CHECK(r.err_bound <= 1e-10);
    CHECK(r.value.imag() == 0.0);
}

TEST_CASE("gaussian over the half line via decay certificate") {
    auto f = [](double x) -> Complex { return std::exp(-kPi * x * x); };
    auto r = integrate_half_line(f, 0.0, GaussianDecay{1.0, kPi, 1.0});
    CHECK(std::abs(r.value.real() - 0.5) <= r.err_bound + 1e-14);
}

TEST_CASE("power-law tail via certificate") {
    auto f = [](double x) -> Complex { return 1.0 / (x * x); };
    auto r = integrate_half_line(f, 1.0, PowerLaw{1.0, 2.0, 1.0});
    CHECK(std::abs(r.value.real() - 1.0) <= r.err_bound + 1e-13);
}

TEST_CASE("non-integrable power-law certificate is rejected") {
    CHECK_THROWS_AS(certificate_tail(PowerLaw{1.0, 1.0, 1.0}, 5.0), DomainError);
}

TEST_CASE("lower-endpoint singularity x^(-1/2)") {
    // int_0^1 x^(-1/2) dx = 2
    auto f = [](double x) -> Complex { return 1.0 / std::sqrt(x); };
    auto r = integrate_singular_lower(f, 0.0, 1.0, -0.5);
    CHECK(std::abs(r.value.real() - 2.0) <= r.err_bound + 1e-12);
}

TEST_CASE("oscillatory integrand converges with bounded budget") {
    // int_0^1 cos(40 pi x) dx = 0
    auto f = [](double x) -> Complex { return std::cos(40.0 * kPi * x); };
    auto r = integrate(f, 0.0, 1.0);
    CHECK(std::abs(r.value.real()) <= r.err_bound + 1e-13);
    CHECK(r.evaluations < 20000);
}

TEST_CASE("linearity on random smooth integrands") {
    std::mt19937_64 gen(12345);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 8; ++trial) {
        const double al = coef(gen), be = coef(gen);
        const double w1 = 1.0 + std::abs(coef(gen)), w2 = 1.0 + std::abs(coef(gen));
        auto f = [w1](double x) -> Complex { return std::sin(w1 * x) + x; };
        auto g = [w2](double x) -> Complex { return std::cos(w2 * x) * std::exp(-x); };
        auto lhs = integrate([&](double x) { return al * f(x) + be * g(x); }, 0.0, 3.0);
        auto rf = integrate(f, 0.0, 3.0);
        auto rg = integrate(g, 0.0, 3.0);
        const double combined =
            lhs.err_bound + std::abs(al) * rf.err_bound + std::abs(be) * rg.err_bound;
        CHECK(std::abs(lhs.value - (al * rf.value + be * rg.value)) <= combined + 1e-13);
    }
}

TEST_CASE("determinism: identical calls give identical results") {
    auto f = [](double x) -> Complex { return std::exp(-x) * std::sin(3.0 * x); };
    auto r1 = integrate(f, 0.0, 10.0);
    auto r2 = integrate(f, 0.0, 10.0);
    CHECK(r1.value.real() == r2.value.real());
    CHECK(r1.err_bound == r2.err_bound);
    CHECK(r1.evaluations == r2.evaluations);
}

TEST_CASE("err_bound soundness over a closed-form corpus") {
    // every entry: integral over [0,1] (or substituted equivalent) with truth
    struct Case {
        std::function<Complex(double)> f;
        double truth;
    };
    std::vector<Case> corpus;
    for (int k = 1; k <= 40; ++k) {
        const double a = 0.2 * k;
        corpus.push_back({[a](double x) -> Complex { return std::exp(a * x); },
                          (std::exp(a) - 1.0) / a});
        corpus.push_back({[a](double x) -> Complex { return std::cos(a * x); },
                          std::sin(a) / a});
        corpus.push_back({[k](double x) -> Complex { return std::pow(x, k); },
                          1.0 / (k + 1.0)});
    }
    int sound = 0;
    for (const auto& c : corpus) {
        auto r = integrate(c.f, 0.0, 1.0);
        // tiny slack for the final rounding of the truth values themselves
        if (std::abs(r.value.real() - c.truth) <=
            r.err_bound + 1e-13 * (1.0 + std::abs(c.truth)))
            ++sound;
    }
    CHECK(sound >= static_cast<int>(corpus.size() * 99) / 100);
}

TEST_CASE("budget exhaustion raises with the achieved bound attached") {
    // x^(-0.999) is integrable but brutal for a plain adaptive rule near 0
    auto f = [](double x) -> Complex { return std::pow(x, -0.999); };
    Options opt;
    opt.tol = 1e-12;
    opt.max_segments = 40;
    try {
        integrate(f, 0.0, 1.0, opt);
        FAIL("expected ToleranceNotMet");
    } catch (const ToleranceNotMet& e) {
        CHECK(e.achieved_bound > 1e-12);
    }
}
