#pragma once

#include <vector>

#include "zetalab/common.hpp"

namespace zetalab::ref {

// Gamma via a fixed-coefficient rational approximation (Lanczos, g=7, 9
// terms) on Re(s) >= 1/2, extended by the reflection formula. Good to
// ~13 significant digits for |s| <= 100. Throws PolePoint at non-positive
// integers. The coefficient regeneration recipe is described in the README.
Complex gamma(Complex s);

// zeta on Re(s) > 0 via the accelerated alternating (eta) series divided by
// 1 - 2^(1-s). Near the representation's spurious zeros s = 1 + 2 pi i k/ln 2
// (k != 0) it switches to Euler-Maclaurin summation. Throws PolePoint within
// 1e-3 of s = 1 and DomainError for Re(s) <= 0.
Complex zeta(Complex s);

// Independent zeta evaluator: truncated Dirichlet sum plus Euler-Maclaurin
// tail correction. Shares no code path with zeta() past complex arithmetic;
// used as the cross-check oracle.
Complex zeta_em(Complex s);

// zstar(s) = pi^(-s/2) Gamma(s/2) zeta(s); for Re(s) <= 0 evaluated through
// the reflection s -> 1-s that defines its continuation there. Throws
// PolePoint at s = 0 and s = 1.
Complex completed_zeta(Complex s);

// Ordinates t in (t_lo, t_hi) where zstar(1/2 + it) changes sign (zstar is
// real on the critical line). Grid scan at `step` plus bisection to 1e-6.
std::vector<double> critical_zero_scan(double t_lo, double t_hi, double step);

}  // namespace zetalab::ref
