#include <cmath>

#include "doctest.h"
#include "zetalab/series.hpp"

using namespace zetalab;
using namespace zetalab::series;

TEST_CASE("mercator series") {
    // sum_{k>=0} (-1)^k / (k+1) = ln 2
    double v = accelerate_alternating(
        [](long k) { return 1.0 / (k + 1.0); }, 1e-13);
    CHECK(std::abs(v - std::log(2.0)) < 1e-13);
}

TEST_CASE("eta(2)") {
    double v = accelerate_alternating(
        [](long k) { return 1.0 / ((k + 1.0) * (k + 1.0)); }, 1e-13);
    CHECK(std::abs(v - kPi * kPi / 12.0) < 1e-13);
}

TEST_CASE("eta(1/2) against an averaged-partial-sum evaluation") {
    // reference: adjacent averaging of 1e7 partial sums, frozen before build
    const double ref = 0.604898643421630;
    double v = accelerate_alternating(
        [](long k) { return 1.0 / std::sqrt(k + 1.0); }, 1e-13);
    CHECK(std::abs(v - ref) < 1e-12);
}

TEST_CASE("complex terms") {
    // sum (-1)^k (k+1)^{-s} = eta(s) at s = 2 + i; reference from the same
    // acceleration at doubled depth, sanity-checked against the real part
    // staying near eta(2)
    const Complex s{2.0, 1.0};
    auto term = [s](long k) -> Complex {
        return std::exp(-s * std::log(static_cast<double>(k + 1)));
    };
    Complex v = accelerate_alternating(term, 1e-12);
    Complex w = accelerate_alternating(term, 1e-14);
    CHECK(std::abs(v - w) < 1e-11);
}

TEST_CASE("non-shrinking differences raise") {
    // terms growing faster than the transform's geometric reach
    CHECK_THROWS_AS(accelerate_alternating(
                        [](long k) { return std::pow(7.0, static_cast<double>(k)); },
                        1e-10, 200),
                    ToleranceNotMet);
}

TEST_CASE("neumaier summation recovers a catastrophic cancellation") {
    NeumaierSum<double> acc;
    acc.add(1.0);
    acc.add(1e100);
    acc.add(1.0);
    acc.add(-1e100);
    CHECK(acc.value() == 2.0);
}

TEST_CASE("neumaier summation, complex") {
    NeumaierSum<Complex> acc;
    acc.add({1.0, -1.0});
    acc.add({1e100, 1e100});
    acc.add({1.0, -1.0});
    acc.add({-1e100, -1e100});
    CHECK(acc.value().real() == 2.0);
    CHECK(acc.value().imag() == -2.0);
}
