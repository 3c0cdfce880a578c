#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "zetalab/common.hpp"

namespace zetalab::quad {

using Integrand = std::function<Complex(double)>;

struct Result {
    Complex value;
    double err_bound = 0.0;   // nonnegative; includes analytic tail bounds
    long evaluations = 0;
};

// Certified decay envelopes for half-line integrals: |f(x)| <= envelope(x)
// for all x >= x0.
struct PowerLaw {   // C * x^(-p), requires p > 1 for an integrable tail
    double C, p, x0;
};
struct Exponential {  // C * exp(-a x)
    double C, a, x0;
};
struct GaussianDecay {  // C * exp(-a x^2)
    double C, a, x0;
};
using DecayCertificate = std::variant<PowerLaw, Exponential, GaussianDecay>;

// Tail mass of the certified envelope beyond X (X >= x0).
double certificate_tail(const DecayCertificate& cert, double X);
double certificate_x0(const DecayCertificate& cert);

struct Options {
    double tol = 1e-10;        // absolute target for err_bound
    int max_segments = 8000;   // splitting budget of the adaptive pass
};

// Adaptive Gauss-Kronrod (G7/K15) on a finite interval. Splits the segment
// with the largest error estimate first; throws ToleranceNotMet if the
// splitting budget runs out above tol.
Result integrate(const Integrand& f, double a, double b, const Options& opt = {});

// Half-line integral: a certified cutoff X is chosen so the envelope tail is
// below tol/2, the finite part is integrated adaptively, and the tail bound
// is added to err_bound.
Result integrate_half_line(const Integrand& f, double a, const DecayCertificate& cert,
                           const Options& opt = {});

// Finite interval whose integrand behaves like (x-a)^alpha near the lower
// endpoint, alpha in (-1, 0]: substitutes x = a + u^m with
// m = ceil(2/(1+alpha)) so the transformed integrand is bounded.
Result integrate_singular_lower(const Integrand& f, double a, double b, double alpha,
                                const Options& opt = {});

}  // namespace zetalab::quad
