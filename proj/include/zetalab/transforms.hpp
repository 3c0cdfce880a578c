#pragma once

#include "zetalab/quadrature.hpp"
#include "zetalab/testfunction.hpp"

namespace zetalab::tx {

// ---------------------------------------------------------------------------
// Oscillatory tail integrals with certified bounds. These are the work-horse
// behind every transform tail: repeated integration by parts in closed form,
// stopping with an explicit remainder estimate.
// ---------------------------------------------------------------------------

struct OscTail {
    Complex value;
    double bound = 0.0;
};

// int_A^inf t^mu e^(2 pi i nu t) dt for Re(mu) < 1, nu != 0, A > 0
OscTail osc_tail(Complex mu, double A, double nu);
// cosine / sine flavors (even / odd combination of +-nu)
OscTail osc_tail_cos(Complex mu, double A, double nu);
OscTail osc_tail_sin(Complex mu, double A, double nu);

// sum_{n>N} n^(-m) for m >= 2, N >= 1 (Euler-Maclaurin; no cancellation)
double zeta_tail(int m, long N);

// int_A^inf y^(s-1) model(y) dy for A >= model.cutoff; `bound` collects the
// integration-by-parts remainders plus the model's own remainder envelope.
// Requires Re(s) < m for every DC term and Re(s) < rem_power.
OscTail mellin_model_tail(const fn::AsymptoticTail& t, Complex s, double A);

// ---------------------------------------------------------------------------
// Transforms on test functions
// ---------------------------------------------------------------------------

// sup_x |x^2 f(x)|: dense scan plus local refinement, capped against the
// analytic envelope beyond the scan window. Returns +inf when the function
// is certifiably not O(1/x^2) (e.g. the image of the indicator).
double s2_norm(const fn::TestFunction& f);

// fhat(x) = 2 int_0^inf cos(2 pi x y) f(y) dy, computed honestly from the
// definition (never by evaluating a stored closed-form image): adaptive
// quadrature up to a certified cutoff, then model/envelope tails.
quad::Result fourier_cosine(const fn::TestFunction& f, double x, double tol = 1e-10);

// theta(f)(x) = sum_{n>=1} f(n x) for x > 0, with a certified tail: finite
// for compact support, envelope-bounded for fast decay, and closed trigono-
// metric (Bernoulli-polynomial) sums against the asymptotic model for images.
quad::Result theta_transform(const fn::TestFunction& f, double x, double tol = 1e-10);

// M(f)(s) = int_0^inf x^(s-1) f(x) dx. The admissible strip is decay-aware:
// Re(s) > 0 always required; an upper limit applies only when f decays no
// faster than a power law (images: Re(s) < min DC power). Outside the strip
// throws DomainError.
quad::Result mellin(const fn::TestFunction& f, Complex s, double tol = 1e-10);

// |(1/x) theta(c)(1/x) + 1/(2x) - 1/2 - theta(c)(x)|: the Poisson summation
// defect of c at x. Zero (to tolerance) iff c sums like a self-dual function.
double psf_residual(const fn::TestFunction& c, double x, double tol = 1e-10);

// c = (f + fhat) / (f(0) + fhat(0)), the normalized self-dual element built
// from f; with normalize = false the division is skipped. Throws DomainError
// when the normalizer is too close to zero.
fn::TestFunction make_poisson_element(const fn::TestFunction& f, bool normalize = true);

// Solve phi - lambda A phi = f for the unitary cosine kernel A (A^2 = 1):
//   phi = f / (1 - lambda^2) + lambda (A f) / (1 - lambda^2).
// Throws DomainError at lambda = +-1 (the kernel's eigenvalues).
fn::TestFunction fox_solve(const fn::TestFunction& f, double lambda);

}  // namespace zetalab::tx
