#include "zetalab/transforms.hpp"

#include <cmath>

#include "doctest.h"
#include "zetalab/gamma_zeta.hpp"

using namespace zetalab;
using fn::TestFunction;

namespace {
double gauss(double x) { return std::exp(-kPi * x * x); }
double fejer(double x) {
    if (std::abs(x) < 1e-12) return 1.0;
    const double s = std::sin(kPi * x) / (kPi * x);
    return s * s;
}
}

TEST_CASE("fourier transform from the definition matches closed images") {
    auto G = TestFunction::gaussian();
    for (double x : {0.0, 0.3, 1.0, 2.0}) {
        auto r = tx::fourier_cosine(G, x);
        CHECK(std::abs(r.value - gauss(x)) < r.err_bound + 1e-11);
    }
    auto T = TestFunction::triangle();
    for (double x : {0.5, 1.0, 1.7}) {
        auto r = tx::fourier_cosine(T, x);
        CHECK(std::abs(r.value - fejer(x)) < r.err_bound + 1e-11);
    }
    auto E = TestFunction::exp_decay();
    auto r = tx::fourier_cosine(E, 1.0);
    CHECK(std::abs(r.value - 2.0 / (1.0 + 4.0 * kPi * kPi)) < r.err_bound + 1e-11);
}

TEST_CASE("fourier involution returns to the original function") {
    // the stored image is never consulted for its parent's closed form here:
    // fourier_cosine integrates the image honestly
    for (auto f : {TestFunction::triangle(), TestFunction::exp_decay()}) {
        auto fi = TestFunction::fourier_image(f);
        for (double x : {0.3, 1.0, 2.0}) {
            auto r = tx::fourier_cosine(fi, x);
            CHECK(std::abs(r.value - f(x)) < r.err_bound + 1e-7);
        }
    }
    // sinc decays like 1/x: slow but integrable oscillation
    auto Ii = TestFunction::fourier_image(TestFunction::indicator01());
    auto r03 = tx::fourier_cosine(Ii, 0.3);
    CHECK(std::abs(r03.value - 1.0) < r03.err_bound + 1e-6);
    auto r2 = tx::fourier_cosine(Ii, 2.0);
    CHECK(std::abs(r2.value) < r2.err_bound + 1e-6);
    // modeled tail: peak-times-Gaussian
    auto Pi = TestFunction::fourier_image(TestFunction::peak_times_gaussian());
    auto rp = tx::fourier_cosine(Pi, 0.5);
    CHECK(std::abs(rp.value - 0.5 * std::exp(-kPi / 4)) < rp.err_bound + 1e-7);
}

TEST_CASE("theta on closed forms") {
    auto G = TestFunction::gaussian();
    auto t1 = tx::theta_transform(G, 1.0, 1e-14);
    CHECK(std::abs(t1.value - 0.0432174056066540072877) < 1e-13);
    auto t2 = tx::theta_transform(G, 2.0, 1e-14);
    CHECK(std::abs(t2.value - 3.48734235620899563968e-6) < 1e-16);

    // compactly supported: finite sum, exact
    auto T = TestFunction::triangle();
    CHECK(std::abs(tx::theta_transform(T, 0.25).value - 1.5) < 1e-14);

    // geometric series: theta(e^-y)(x) = 1/(e^x - 1)
    auto E = TestFunction::exp_decay();
    auto te = tx::theta_transform(E, 0.7, 1e-14);
    CHECK(std::abs(te.value - 1.0 / std::expm1(0.7)) < 1e-13);

    // Lorentzian: sum 2/(1+(2 pi n x / (2 pi))^2)... at x=0.5 equals coth(1)-1
    auto Ei = TestFunction::fourier_image(E);
    auto tl = tx::theta_transform(Ei, 0.5);
    CHECK(std::abs(tl.value - (1.0 / std::tanh(1.0) - 1.0)) < 1e-12);

    // sinc: sum_n sin(2 pi n x)/(pi n x) = (1/2 - x)/x for 0<x<1 (sawtooth closed sum)
    auto Ii = TestFunction::fourier_image(TestFunction::indicator01());
    auto ts = tx::theta_transform(Ii, 0.3);
    CHECK(std::abs(ts.value - (0.5 - 0.3) / 0.3) < 1e-11);
}

TEST_CASE("theta through the asymptotic model matches frozen element values") {
    auto c = tx::make_poisson_element(TestFunction::peak_times_gaussian());
    auto a = tx::theta_transform(c, 0.7);
    CHECK(std::abs(a.value - 0.259622667723265845992) < 5e-10);
    auto b = tx::theta_transform(c, 1.3);
    CHECK(std::abs(b.value - 0.0419726983888357946851) < 5e-10);
    CHECK(a.err_bound < 1e-8);
}

TEST_CASE("oscillatory tail integrals match the frozen recursion table") {
    struct Row { double mu, A, ec, es; };
    const Row rows[] = {
        {-2.3, 7.0, 0.0000940590996761623865827, 0.00180470814272024234861},
        {-3.5, 12.0, 0.00000122889242380801398394, 0.000026514802169799209529},
        {-4.25, 24.0, 6.09950641010688431843e-9, 2.16519419598393019831e-7},
    };
    for (const auto& r : rows) {
        auto c = tx::osc_tail_cos(r.mu, r.A, 1.0);
        auto s = tx::osc_tail_sin(r.mu, r.A, 1.0);
        CHECK(std::abs(c.value.real() - r.ec) <= c.bound + 1e-18);
        CHECK(std::abs(s.value.real() - r.es) <= s.bound + 1e-18);
        CHECK(std::abs(c.value.imag()) < 1e-18);
        // the certified bound is small at these depths
        CHECK(c.bound < 1e-9);
    }
    CHECK_THROWS_AS(tx::osc_tail(0.5, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(tx::osc_tail(11.5, 10.0, 1.0), DomainError);
}

TEST_CASE("zeta tail sums match the independent zeta evaluator") {
    for (int m : {2, 3, 5}) {
        long double head = 0.0L;
        for (long n = 100; n >= 1; --n) head += std::pow((long double)n, -m);
        const double want = ref::zeta(Complex{(double)m, 0.0}).real() - (double)head;
        CHECK(std::abs(tx::zeta_tail(m, 100) - want) < 1e-13);
    }
    CHECK(tx::zeta_tail(12, 48) < 1e-19);
    CHECK(tx::zeta_tail(12, 48) > 0.0);
}

TEST_CASE("mellin closed values") {
    auto G = TestFunction::gaussian();
    // M(G)(s) = (1/2) pi^{-s/2} Gamma(s/2)
    auto m = tx::mellin(G, 1.5);
    const double want = 0.5 * std::pow(kPi, -0.75) * ref::gamma(0.75).real();
    CHECK(std::abs(m.value.real() - want) < m.err_bound + 1e-12);

    Complex s{0.5, 3.0};
    auto mc = tx::mellin(G, s);
    Complex wc = 0.5 * std::exp(-(s / 2.0) * std::log(kPi)) * ref::gamma(s / 2.0);
    CHECK(std::abs(mc.value - wc) < mc.err_bound + 1e-12);

    // M(e^-y)(s) = Gamma(s): decay-aware strip admits s past 2
    auto me = tx::mellin(TestFunction::exp_decay(), 3.0);
    CHECK(std::abs(me.value.real() - 2.0) < me.err_bound + 1e-11);
    auto me1 = tx::mellin(TestFunction::exp_decay(), Complex{1.0, 0.0});
    CHECK(std::abs(me1.value - Complex{1.0, 0.0}) < me1.err_bound + 1e-12);

    // M(triangle)(2) = integral_0^1 y (1-y) dy = 1/6
    auto mt = tx::mellin(TestFunction::triangle(), 2.0);
    CHECK(std::abs(mt.value.real() - 1.0 / 6.0) < 1e-12);

    // M(1_{[0,1]})(s) = 1/s
    auto mi = tx::mellin(TestFunction::indicator01(), 0.7);
    CHECK(std::abs(mi.value.real() - 1.0 / 0.7) < 1e-11);

    // frozen element value
    auto c = tx::make_poisson_element(TestFunction::peak_times_gaussian());
    auto mcel = tx::mellin(c, 1.2);
    CHECK(std::abs(mcel.value.real() - 0.391459865682276831894) < 1e-9);
}

TEST_CASE("mellin respects the decay-aware strip") {
    CHECK_THROWS_AS(tx::mellin(TestFunction::gaussian(), Complex{-0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(tx::mellin(TestFunction::gaussian(), Complex{0.0, 2.0}), DomainError);
    // Fejer decays like x^-2: the strip stops at 2
    auto Ti = TestFunction::fourier_image(TestFunction::triangle());
    CHECK_THROWS_AS(tx::mellin(Ti, Complex{2.5, 0.0}), DomainError);
    CHECK_NOTHROW(tx::mellin(Ti, Complex{1.9, 0.0}));
    // sinc decays like x^-1: no strip at all past 1
    auto Ii = TestFunction::fourier_image(TestFunction::indicator01());
    CHECK_THROWS_AS(tx::mellin(Ii, Complex{1.5, 0.0}), DomainError);
}

TEST_CASE("mellin transformation rules") {
    auto G = TestFunction::gaussian();
    Complex s{1.3, 2.0};
    auto base = tx::mellin(G, s);
    // dilation: M(f(b x))(s) = b^-s M(f)(s)
    for (double b : {2.0, 3.0}) {
        auto d = tx::mellin(TestFunction::dilated(b, G), s);
        Complex want = std::exp(-s * std::log(b)) * base.value;
        CHECK(std::abs(d.value - want) < d.err_bound + base.err_bound + 1e-12);
    }
    // linearity
    auto T = TestFunction::triangle();
    auto f = TestFunction::sum(TestFunction::scaled(2.0, G), TestFunction::scaled(3.0, T));
    auto mf = tx::mellin(f, 1.2);
    auto mg = tx::mellin(G, 1.2);
    auto mt = tx::mellin(T, 1.2);
    CHECK(std::abs(mf.value - (2.0 * mg.value + 3.0 * mt.value)) < 1e-11);
}

TEST_CASE("weighted sup norm") {
    auto G = TestFunction::gaussian();
    CHECK(std::abs(tx::s2_norm(G) - 1.0 / (kPi * std::exp(1.0))) <
          1e-9 / (kPi * std::exp(1.0)));
    CHECK(std::abs(tx::s2_norm(TestFunction::triangle()) - 4.0 / 27.0) < 1e-9);
    CHECK(std::abs(tx::s2_norm(TestFunction::scaled(2.0, G)) - 2.0 / (kPi * std::exp(1.0))) <
          1e-8);
    // sinc is not O(1/x^2)
    CHECK(std::isinf(tx::s2_norm(TestFunction::fourier_image(TestFunction::indicator01()))));
}

TEST_CASE("poisson elements: normalization and the summation identity") {
    // the Gaussian is self-dual, so its element is the Gaussian itself
    auto cg = tx::make_poisson_element(TestFunction::gaussian());
    CHECK(cg(0.0) == doctest::Approx(1.0).epsilon(1e-14));
    for (double x : {0.3, 1.0, 2.0}) {
        CHECK(tx::psf_residual(cg, x) < 1e-10);
    }

    // peak-times-Gaussian element: frozen normalization and values
    auto raw = tx::make_poisson_element(TestFunction::peak_times_gaussian(), false);
    CHECK(std::abs(raw(0.0) - 1.68325664903550341938) < 1e-10);
    auto c = tx::make_poisson_element(TestFunction::peak_times_gaussian());
    CHECK(std::abs(c(0.0) - 1.0) < 1e-12);
    CHECK(std::abs(c(0.3) - 0.660376915804631352826) < 1e-10);
    CHECK(tx::psf_residual(c, 0.5, 1e-9) < 1e-9);

    // a non-self-dual function fails the identity by a visible margin
    CHECK(tx::psf_residual(TestFunction::triangle(), 0.7) > 1e-3);

    // degenerate normalizer
    auto odd = TestFunction::sum(TestFunction::triangle(),
                                 TestFunction::scaled(-1.0, TestFunction::triangle()));
    CHECK_THROWS_AS(tx::make_poisson_element(odd), DomainError);
}

TEST_CASE("resolvent of the cosine-kernel equation matches frozen samples") {
    auto T = TestFunction::triangle();
    {
        auto phi = tx::fox_solve(T, 0.3);
        CHECK(std::abs(phi(0.1) - 1.120420859109432) < 1e-9);
        CHECK(std::abs(phi(1.0) - 0.1209183602586228) < 1e-9);
        CHECK(std::abs(phi(3.0) - 0.05816059667219941) < 1e-9);
    }
    {
        // lambda = -sqrt(pi/2): the resolvent prefactor 1/(1-lambda^2) is large
        auto phi = tx::fox_solve(T, -std::sqrt(kPi / 2.0));
        CHECK(std::abs(phi(0.1) - (-0.7015050886030976)) < 1e-9);
        CHECK(std::abs(phi(1.0) - 0.8053620399295995) < 1e-9);
        CHECK(std::abs(phi(3.0) - 0.3873715842595124) < 1e-9);
    }
    // plug back: phi - lambda A phi = f, with A f = (1/sqrt(2 pi)) fhat(x / (2 pi))
    {
        const double lam = 0.3, x = 1.0;
        auto phi = tx::fox_solve(T, lam);
        auto im = tx::fourier_cosine(phi, x / kTwoPi);
        const Complex aphi = std::sqrt(1.0 / kTwoPi) * im.value;
        CHECK(std::abs(phi(x) - lam * aphi.real() - T(x)) < im.err_bound + 1e-7);
    }
    CHECK_THROWS_AS(tx::fox_solve(T, 1.0), DomainError);
    CHECK_THROWS_AS(tx::fox_solve(T, -1.0), DomainError);
}
