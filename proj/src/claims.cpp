#include "zetalab/claims.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdint>

#include "zetalab/bigfloat.hpp"
#include "zetalab/continuation.hpp"
#include "zetalab/gamma_zeta.hpp"
#include "zetalab/levy.hpp"
#include "zetalab/quadrature.hpp"
#include "zetalab/stochastic.hpp"
#include "zetalab/testfunction.hpp"
#include "zetalab/transforms.hpp"

namespace zetalab::claims {
namespace {

const std::vector<ClaimInfo>& registry() {
    static const std::vector<ClaimInfo> r = {
        {ClaimId::PsfGaussian, "psf-gaussian",
         "Poisson summation identity on the self-dual cylinder"},
        {ClaimId::MuntzIdentity, "muntz-identity",
         "Mellin pole-plus-tail product identity"},
        {ClaimId::ContinuationQuotient, "continuation-quotient",
         "zeta recovered from the Gaussian theta quotient"},
        {ClaimId::ImDecomposition, "im-decomposition",
         "imaginary-part split of M(c) zeta"},
        {ClaimId::WrAveragedFe, "wr-averaged-fe",
         "measure-averaged functional equation"},
        {ClaimId::PGeneralFe, "p-general-fe",
         "general functional equation via M(pG)"},
        {ClaimId::RefinementSeries, "refinement-series",
         "refinement Riemann hypothesis"},
        {ClaimId::EtaRepresentation, "eta-representation",
         "alternating-series representation of zeta"},
        {ClaimId::ImzetaStarSeries, "imzeta-star-series",
         "double series for the imaginary part of completed zeta"},
        {ClaimId::MaslankaFormula, "maslanka-formula",
         "proposed a new formula"},
        {ClaimId::RwrfeHyperbola, "rwrfe-hyperbola",
         "real-part functional equation and its hyperbola"},
        {ClaimId::MahZeroContainment, "mah-zero-containment",
         "trivial factor vanishing at scanned zeros"},
        {ClaimId::LevyMomentDichotomy, "levy-moment-dichotomy",
         "fractional-moment dichotomy of the hitting law"},
        {ClaimId::WrMoments, "wr-moments",
         "segment-series moments of the path measure"},
    };
    return r;
}

double scaled_budget(const Config& cfg, double base) {
    if (!(cfg.tol > 0.0)) throw DomainError("claims: tolerance must be positive");
    return base * (cfg.tol / 1e-6);
}

double rel_of(double abs_err, const Complex& lhs, const Complex& rhs) {
    const double m = std::max(std::abs(lhs), std::abs(rhs));
    return m > 0.0 ? abs_err / m : 0.0;
}

PointReport make_point(const Complex& s, const Complex& lhs, const Complex& rhs,
                       double budget) {
    PointReport p;
    p.s = s;
    p.lhs = lhs;
    p.rhs = rhs;
    p.abs_err = std::abs(lhs - rhs);
    p.rel_err = rel_of(p.abs_err, lhs, rhs);
    p.err_budget = budget;
    return p;
}

std::string fmt10(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

// variant verdicts reuse the decade rule on the worst point
std::string verdict_from_max(double max_err, double budget) {
    if (max_err > 10.0 * budget) return "refuted";
    return max_err <= budget ? "supported" : "inconclusive";
}

std::string fmt_s(const Complex& s) {
    char buf[96];
    if (s.imag() == 0.0)
        std::snprintf(buf, sizeof buf, "%g", s.real());
    else
        std::snprintf(buf, sizeof buf, "%g%+gi", s.real(), s.imag());
    return buf;
}

void require_region(bool ok, const char* what) {
    if (!ok) throw DomainError(std::string("point out of region: ") + what);
}

// ---------------------------------------------------------------------------
// Termwise series shared by several claims: the Mellin transform of the
// peak-times-Gaussian on its principal strip,
//   M(pG)(s) = sum_{n>=0} (-pi)^n / n! * 1 / ((s+2n)(s+2n+1)),
// absolutely convergent for every s away from the poles.
// ---------------------------------------------------------------------------
Complex mellin_pg_series(const Complex& s) {
    Complex tot = 0.0;
    double c = 1.0;
    for (int n = 0; n <= 120; ++n) {
        const Complex den = (s + 2.0 * n) * (s + 2.0 * n + 1.0);
        tot += c / den;
        c *= -kPi / (n + 1);
    }
    return tot;
}

Complex refinement_series_sum(const Complex& s) {
    Complex tot = 0.0;
    double c = 1.0;
    for (int n = 0; n <= 120; ++n) {
        tot += c * s * (s - 1.0) / (2.0 * (s + 2.0 * n) * (s + 2.0 * n + 1.0));
        c *= -kPi / (n + 1);
    }
    return tot;
}

// ---------------------------------------------------------------------------
// Per-claim evaluators
// ---------------------------------------------------------------------------

ClaimReport eval_psf(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-8);
    const auto c = tx::make_poisson_element(fn::TestFunction::gaussian());
    for (const auto& s : pts) {
        require_region(s.imag() == 0.0 && s.real() > 0.0, "psf needs real x > 0");
        const double x = s.real();
        const double qtol = b / 8.0;
        const double th = tx::theta_transform(c, x, qtol).value.real();
        const double th_inv = tx::theta_transform(c, 1.0 / x, qtol).value.real();
        const Complex lhs = th_inv / x + 0.5 / x;
        const Complex rhs = 0.5 + th;
        r.points.push_back(make_point(s, lhs, rhs, b));
    }
    r.verdict = verdict_of(r.points);
    return r;
}

ClaimReport eval_muntz(const std::vector<Complex>& pts, const Config& cfg,
                       bool default_suite) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-6);
    const auto cG = tx::make_poisson_element(fn::TestFunction::gaussian());
    const auto cPG = tx::make_poisson_element(fn::TestFunction::peak_times_gaussian());
    double corrected_max = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Complex s = pts[i];
        require_region(s.real() > 0.0 && s.real() < 2.0 && std::abs(s - 1.0) >= 1e-3,
                       "product identity needs Re(s) in (0,2) away from s=1");
        // the default suite's last point exercises the non-Gaussian element
        const auto& c = (default_suite && i + 1 == pts.size()) ? cPG : cG;
        const Complex z = ref::zeta(s);
        const auto m = tx::mellin(c, s, b / (3.0 * (std::abs(z) + 1.0)));
        const auto ti = cont::tail_integral(c, s, b / 3.0);
        const Complex lhs = m.value * z;
        const Complex printed = cont::pole_term(s, cont::PoleTerm::AsStated) + ti.value;
        const Complex corrected = cont::pole_term(s, cont::PoleTerm::Corrected) + ti.value;
        r.points.push_back(make_point(s, lhs, printed, b));
        corrected_max = std::max(corrected_max, std::abs(lhs - corrected));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"corrected pole term 1/(2s(s-1))",
                          verdict_from_max(corrected_max, b), corrected_max});
    if (default_suite)
        r.notes.push_back(
            "last default point evaluates the normalized peak-times-Gaussian "
            "element; the others the Gaussian");
    else
        r.notes.push_back("user-supplied points evaluate the Gaussian element");
    r.notes.push_back(
        "the printed pole term 1/(s(s-1)) is off by exactly the factor 2 the "
        "split Mellin integral produces");
    return r;
}

ClaimReport eval_continuation(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-6);
    double corrected_max = 0.0;
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && std::abs(s - 1.0) >= 1e-3 &&
                           std::abs(s) >= 1e-3,
                       "quotient needs Re(s) > 0 away from s=0,1");
        const Complex z = ref::zeta(s);
        const Complex printed =
            cont::zeta_via_theta_quotient(s, cont::PoleTerm::AsStated, b / 2.0).value;
        const Complex corrected =
            cont::zeta_via_theta_quotient(s, cont::PoleTerm::Corrected, b / 2.0).value;
        r.points.push_back(make_point(s, printed, z, b));
        corrected_max = std::max(corrected_max, std::abs(corrected - z));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"corrected pole term 1/(2s(s-1))",
                          verdict_from_max(corrected_max, b), corrected_max});
    r.notes.push_back(
        "Gaussian Mellin factor adjudicated by quadrature: (1/2) pi^(-s/2) "
        "Gamma(s/2) matches; the closed form the quotient is usually written "
        "with does not");
    return r;
}

ClaimReport eval_imdecomp(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-7);
    const auto cG = tx::make_poisson_element(fn::TestFunction::gaussian());
    double derived_max = 0.0, mixed1_max = 0.0, mixed2_max = 0.0;
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && s.real() < 2.0 && std::abs(s - 1.0) >= 1e-3,
                       "decomposition needs Re(s) in (0,2) away from s=1");
        const auto d = cont::im_decomposition(cG, s, b);
        const Complex lhs = d.direct;
        const Complex printed = d.trivial_term_stated + d.oscillatory_stated;
        r.points.push_back(make_point(s, lhs, printed, b));
        derived_max = std::max(
            derived_max, std::abs(d.direct - (d.trivial_term_derived +
                                              d.oscillatory_derived)));
        mixed1_max = std::max(
            mixed1_max, std::abs(d.direct - (d.trivial_term_stated +
                                             d.oscillatory_derived)));
        mixed2_max = std::max(
            mixed2_max, std::abs(d.direct - (d.trivial_term_derived +
                                             d.oscillatory_stated)));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"derived sign/half and logarithmic phase",
                          verdict_from_max(derived_max, b), derived_max});
    r.variants.push_back({"stated trivial term with derived phase",
                          verdict_from_max(mixed1_max, b), mixed1_max});
    r.variants.push_back({"derived trivial term with stated phase",
                          verdict_from_max(mixed2_max, b), mixed2_max});
    return r;
}

ClaimReport eval_wravg(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-6);
    double x2_max = 0.0;
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && std::abs(s - 1.0) >= 1e-3 &&
                           std::abs(s) >= 1e-3,
                       "averaged identity needs Re(s) > 0 away from s=0,1");
        const Complex mz = mellin_pg_series(s) * ref::zeta(s);
        const Complex lhs = 0.5 * mz.imag();
        const Complex den = s * (s - 1.0);
        const Complex rhs = cont::zeta_t(s) / std::norm(den);
        r.points.push_back(make_point(s, lhs, rhs, b));
        x2_max = std::max(x2_max, std::abs(Complex(mz.imag()) - rhs));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"x2-renormalized measure (weights sum to 2)",
                          verdict_from_max(x2_max, b), x2_max});
    r.notes.push_back(
        "the averaging step assumes the sampled paths obey the pole identity, "
        "but the measure's samples are not cosine-transform fixed points");
    return r;
}

ClaimReport eval_pgen(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-6);
    double x2_max = 0.0;
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && std::abs(s - 1.0) >= 1e-3 &&
                           std::abs(s) >= 1e-3,
                       "functional equation needs Re(s) > 0 away from s=0,1");
        const Complex lhs = ref::zeta(s);
        const Complex rhs = 2.0 / (s * (s - 1.0) * mellin_pg_series(s));
        r.points.push_back(make_point(s, lhs, rhs, b));
        x2_max = std::max(x2_max, std::abs(lhs - 2.0 * rhs));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back(
        {"x2-renormalized measure", verdict_from_max(x2_max, b), x2_max});
    return r;
}

ClaimReport eval_refinement(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-6);
    double alg_max = 0.0;
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && std::abs(s - 1.0) >= 1e-3 &&
                           std::abs(s) >= 1e-3,
                       "series needs Re(s) > 0 away from s=0,1");
        const Complex ser = refinement_series_sum(s);
        const Complex lhs = ser;
        const Complex rhs = 1.0 / ref::zeta(s);
        r.points.push_back(make_point(s, lhs, rhs, b));
        const Complex alg = s * (s - 1.0) / 2.0 * mellin_pg_series(s);
        alg_max = std::max(alg_max, std::abs(ser - alg));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"series equals s(s-1)/2 M(pG) termwise",
                          verdict_from_max(alg_max, b), alg_max});
    r.notes.push_back(
        "the series converges rapidly, but to the entire function "
        "s(s-1)/2 M(pG)(s), not to 1/zeta");
    return r;
}

ClaimReport eval_eta(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-8);
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && std::abs(s - 1.0) >= 1e-3,
                       "representation needs Re(s) > 0 away from s=1");
        const Complex lhs = ref::zeta(s);     // accelerated alternating route
        const Complex rhs = ref::zeta_em(s);  // independent Euler-Maclaurin route
        r.points.push_back(make_point(s, lhs, rhs, b));
    }
    r.verdict = verdict_of(r.points);
    return r;
}

ClaimReport eval_imzeta(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-6);
    double movement = 0.0;
    for (const auto& s : pts) {
        const double sig = s.real(), tau = s.imag();
        require_region(sig > 0.0 && sig < 1.0, "double series needs Re(s) in (0,1)");
        const double lhs = ref::completed_zeta(s).imag();
        std::array<double, 7> partial{};
        double run = 0.0;
        for (int n = 0; n <= 6; ++n) {
            const long prec = std::max<long>(
                cfg.precision_bits,
                long(std::ceil(1.45 * kPi * double(n) * double(n))) + 64);
            big::Real acc(prec);
            if (n == 0) {
                const double den = (sig * sig + tau * tau) *
                                   ((1 - sig) * (1 - sig) + tau * tau);
                acc = big::Real(1.0 / den, prec);
            } else {
                const big::Real sigp(sig, prec), taup(tau, prec);
                big::Real xb = big::Real::pi(prec);
                xb.mul_ui(static_cast<unsigned long>(n) * n);
                big::Real tj(1.0, prec);
                const long jmax = 3 * long(std::ceil(kPi * n * n)) + 60;
                for (long j = 0; j <= jmax; ++j) {
                    big::Real a = big::Real(2.0 * double(j), prec) + sigp;
                    big::Real bb = big::Real(2.0 * double(j) + 1.0, prec) - sigp;
                    big::Real den = (a * a + taup * taup) * (bb * bb + taup * taup);
                    big::Real term = tj;
                    term.mul_ui(static_cast<unsigned long>(4 * j + 1));
                    term /= den;
                    acc += term;
                    tj *= xb;
                    tj.mul_si(-1);
                    tj.div_ui(static_cast<unsigned long>(j + 1));
                }
            }
            run += acc.to_double();
            partial[std::size_t(n)] = tau * (1.0 - 2.0 * sig) * run;
        }
        r.points.push_back(make_point(s, lhs, partial[6], b));
        movement = std::max(movement, std::abs(partial[6] - partial[4]));
        r.notes.push_back("s = " + fmt_s(s) + ": partial sums n<=2/4/6 = " +
                          fmt10(partial[2]) + ", " + fmt10(partial[4]) + ", " +
                          fmt10(partial[6]) + " vs Im zstar = " + fmt10(lhs));
    }
    r.verdict = verdict_of(r.points);
    // a budget too loose to resolve the truncation movement cannot certify
    if (r.verdict == "supported" && movement > b) r.verdict = "inconclusive";
    r.notes.push_back(
        "per-n terms decay only like n^(-2 min(Re s, 1-Re s)) with an "
        "oscillating factor; the n-sum does not converge and no tail "
        "bound comparable to exp(-pi n^2) exists");
    return r;
}

ClaimReport eval_maslanka(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-6);
    const long prec = std::max<long>(cfg.precision_bits, 384);
    constexpr int kmax = 60;

    // binomial rows fit in 64 bits up to binom(60,30) ~ 1.18e17
    std::array<std::uint64_t, kmax + 1> row{};
    std::vector<big::Real> zc;
    zc.reserve(kmax + 1);
    for (int j = 0; j <= kmax; ++j)
        zc.push_back(big::Real::zeta_int(2UL * j + 2UL, prec));
    std::vector<big::Real> a_printed, a_alt;
    a_printed.reserve(kmax + 1);
    a_alt.reserve(kmax + 1);
    row[0] = 1;
    for (int k = 0; k <= kmax; ++k) {
        if (k > 0) {
            for (int j = k; j >= 1; --j) row[std::size_t(j)] += row[std::size_t(j - 1)];
        }
        big::Real ap(prec), aa(prec);
        for (int j = 0; j <= k; ++j) {
            big::Real t = zc[std::size_t(j)];
            t.mul_ui(row[std::size_t(j)]);
            t.mul_si(2L * j - 1L);
            ap += t;
            if (j % 2 == 1) t.mul_si(-1);
            aa += t;
        }
        a_printed.push_back(std::move(ap));
        a_alt.push_back(std::move(aa));
    }

    double alt_max = 0.0;
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && std::abs(s - 1.0) >= 1e-3,
                       "formula needs Re(s) > 0 away from s=1");
        const Complex z = ref::zeta(s);
        big::BigComplex pref = big::BigComplex(1.0 - s, prec).reciprocal();
        big::BigComplex tot_p{big::Real(prec), big::Real(prec)};
        big::BigComplex tot_a{big::Real(prec), big::Real(prec)};
        double t30 = 0.0, t59 = 0.0;
        bool growing = true;
        double prev_mag = 0.0;
        for (int k = 0; k <= kmax; ++k) {
            big::BigComplex term_p = pref;
            term_p.scale(a_printed[std::size_t(k)]);
            big::BigComplex term_a = pref;
            term_a.scale(a_alt[std::size_t(k)]);
            tot_p += term_p;
            tot_a += term_a;
            const double mag = term_p.abs().to_double();
            if (k == 30) t30 = mag;
            if (k == 59) t59 = mag;
            if (k >= 41 && k <= 59 && mag <= prev_mag) growing = false;
            prev_mag = mag;
            // pochhammer step: multiply by (1 - s/2 + k), divide by k+1
            big::BigComplex f(Complex(1.0 - 0.5 * s.real() + k, -0.5 * s.imag()),
                              prec);
            pref *= f;
            pref.div_ui(static_cast<unsigned long>(k + 1));
        }
        const Complex printed = tot_p.to_complex();
        const Complex alt = tot_a.to_complex();
        r.points.push_back(make_point(s, printed, z, b));
        alt_max = std::max(alt_max, std::abs(alt - z));
        r.notes.push_back("s = " + fmt_s(s) + ": |printed term| " + fmt10(t30) +
                          " at k=30, " + fmt10(t59) + " at k=59" +
                          (growing ? " (growing)" : "") +
                          "; alternating-sign sum = " + fmt10(alt.real()) +
                          (alt.imag() != 0.0 ? std::string(" + ") + fmt10(alt.imag()) + "i"
                                             : std::string()) +
                          " vs zeta = " + fmt10(z.real()));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"alternating (-1)^j inside the coefficients",
                          verdict_from_max(alt_max, b), alt_max});
    r.notes.push_back(
        "printed coefficients grow like (k-1) 2^k so the printed series "
        "diverges; the alternating variant converges but not to zeta");
    return r;
}

ClaimReport eval_rwrfe(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-8);
    double alg_max = 0.0;
    for (const auto& s : pts) {
        require_region(s.real() > 0.0 && std::abs(s - 1.0) >= 1e-3 &&
                           std::abs(s) >= 1e-3,
                       "identity needs Re(s) > 0 away from s=0,1");
        const Complex mz = mellin_pg_series(s) * ref::zeta(s);
        const Complex lhs = 0.5 * mz.real();
        const Complex inv = 1.0 / (s * (s - 1.0));
        const Complex rhs = inv.real();
        r.points.push_back(make_point(s, lhs, rhs, b));
        const double R = s.real() * s.real() - s.real() - s.imag() * s.imag();
        alg_max = std::max(alg_max, std::abs(R - std::norm(s * (s - 1.0)) * inv.real()));
    }
    // hyperbola algebra holds on the line too; spot values recorded
    for (const double t : {2.0, 14.0}) {
        const Complex s{0.5, t};
        const Complex inv = 1.0 / (s * (s - 1.0));
        const double R = 0.25 - 0.5 - t * t;
        alg_max = std::max(alg_max, std::abs(R - std::norm(s * (s - 1.0)) * inv.real()));
        r.notes.push_back("R(0.5" + std::string(t == 2.0 ? "+2i" : "+14i") +
                          ") = " + fmt10(R) + " (negative along the critical line)");
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"R(s) = Re^2 - Re - Im^2 algebra",
                          verdict_from_max(alg_max, b), alg_max});
    return r;
}

ClaimReport eval_mah(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double b = scaled_budget(cfg, 1e-12);
    std::vector<double> ordinates;
    if (pts.empty()) {
        ordinates = ref::critical_zero_scan(0.0, 30.0, 0.25);
    } else {
        for (const auto& s : pts) {
            require_region(s.real() == 0.5 && s.imag() >= 0.0 && s.imag() <= 50.0,
                           "containment checks critical-line ordinates");
            ordinates.push_back(s.imag());
        }
    }
    for (const double t : ordinates) {
        const Complex s{0.5, t};
        r.points.push_back(make_point(s, cont::zeta_t(s), 0.0, b));
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"degenerate by construction", "supported", 0.0});
    r.notes.push_back(
        "every scanned zero lies on Re(s) = 1/2 where the factor 2 Re(s) - 1 "
        "vanishes identically; the scan cannot produce a counterexample");
    // off-line behavior, reported separately: min |zstar| over a strip grid
    double best = 1e300, bs = 0.0, bt = 0.0;
    for (const double sig : {0.3, 0.4, 0.6, 0.7}) {
        for (double t = 10.0; t <= 30.0 + 1e-9; t += 0.25) {
            const double v = std::abs(ref::completed_zeta({sig, t}));
            if (v < best) {
                best = v;
                bs = sig;
                bt = t;
            }
        }
    }
    r.notes.push_back("off-line grid minimum of |zstar| = " + fmt10(best) +
                      " at s = " + fmt10(bs) + "+" + fmt10(bt) +
                      "i (Gamma-factor decay, not a zero)");
    return r;
}

double levy_moment_quad(double u) {
    const auto head = quad::integrate(
        [&](double x) -> Complex { return std::pow(x, u) * levy::density(x, 1.0); },
        0.0, 1.0, {1e-13, 8000});
    // tail beyond x = 1 folded by w = 1/x
    const auto tail = quad::integrate_singular_lower(
        [&](double w) -> Complex {
            return std::exp(-0.5 * w) * std::pow(w, -u - 0.5) / std::sqrt(kTwoPi);
        },
        0.0, 1.0, -u - 0.5, {1e-13, 8000});
    return head.value.real() + tail.value.real();
}

ClaimReport eval_levy(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    const double rel_budget = scaled_budget(cfg, 1e-8);
    for (const auto& s : pts) {
        require_region(s.imag() == 0.0 && s.real() > 0.0 && s.real() < 0.5,
                       "finite-moment points need real u in (0, 1/2)");
        const double u = s.real();
        const auto closed = levy::fractional_moment(u, 1.0);
        const double quadv = levy_moment_quad(u);
        auto p = make_point(s, *closed, quadv, rel_budget * std::abs(*closed));
        r.points.push_back(p);
    }
    r.verdict = verdict_of(r.points);
    const bool typed = !levy::fractional_moment(0.5, 1.0).has_value() &&
                       !levy::fractional_moment(0.6, 1.0).has_value() &&
                       levy::fractional_moment(0.499, 1.0).has_value();
    r.variants.push_back(
        {"divergence at u >= 1/2 is typed", typed ? "supported" : "refuted", 0.0});
    r.notes.push_back(
        "E L^u = y0^{2u} 2^{-u} Gamma(1/2-u)/sqrt(pi) blows up as u -> 1/2; "
        "the density tail is x^{-3/2}, so u >= 1/2 integrals genuinely diverge");
    return r;
}

ClaimReport eval_wr(const std::vector<Complex>& pts, const Config& cfg) {
    ClaimReport r;
    constexpr long kPaths = 100000;
    double x2_max = 0.0, x2_budget_min = 1e300;
    bool x2_ok = true;
    for (const auto& s : pts) {
        require_region(s.imag() == 0.0 && s.real() >= 0.0,
                       "moments need real t >= 0");
        const double t = s.real();
        const auto est = stoch::wr_moment(t, kPaths, cfg.seed);
        double asserted;
        if (t == 0.0)
            asserted = 1.0;  // the starting-point assertion
        else if (t < 1.0)
            asserted = 0.5 * std::exp(-kPi * t * t) * (1.0 - t);  // consistency
        else
            asserted = 0.0;  // vanishing beyond the peak support
        const double budget = 3.0 * est.std_error;
        r.points.push_back(make_point(s, est.mean, asserted, budget));
        const double want2 = (t == 0.0) ? 1.0 : 2.0 * asserted;
        const double err2 = std::abs(2.0 * est.mean - want2);
        x2_max = std::max(x2_max, err2);
        x2_budget_min = std::min(x2_budget_min, 6.0 * est.std_error);
        if (err2 > 6.0 * est.std_error) x2_ok = false;
    }
    r.verdict = verdict_of(r.points);
    r.variants.push_back({"x2-renormalized weights",
                          x2_ok ? "supported" : "inconclusive", x2_max});
    r.notes.push_back(
        "the geometric weights sum to 1 but put mass 1/2 on the first segment, "
        "so the t=0 moment is 1/2, not 1; doubling the weights fixes the "
        "starting point but the weights then sum to 2 -- no scaling satisfies "
        "both, and the mass inconsistency is recorded here rather than hidden");
    return r;
}

}  // namespace

const std::vector<ClaimInfo>& list_claims() { return registry(); }

const ClaimInfo& info(ClaimId id) {
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw DomainError("claims: unknown claim id");
}

std::optional<ClaimId> claim_from_name(const std::string& name) {
    for (const auto& c : registry())
        if (c.name == name) return c.id;
    return std::nullopt;
}

std::string verdict_of(const std::vector<PointReport>& points) {
    bool all_within = true, any_blown = false;
    for (const auto& p : points) {
        if (p.abs_err > p.err_budget) all_within = false;
        if (p.abs_err > 10.0 * p.err_budget) any_blown = true;
    }
    if (any_blown) return "refuted";
    return all_within ? "supported" : "inconclusive";
}

std::vector<Complex> default_points(ClaimId id) {
    switch (id) {
        case ClaimId::PsfGaussian:
            return {{0.3, 0}, {0.5, 0}, {1, 0}, {2, 0}, {3, 0}};
        case ClaimId::MuntzIdentity:
            return {{1.5, 0}, {0.5, 3}, {0.75, 2}, {0.5, 0}, {1.2, 0}};
        case ClaimId::ContinuationQuotient:
            return {{2, 0}, {0.5, 0}, {0.25, 5}, {1.5, 0.5}, {0.8, 8}};
        case ClaimId::ImDecomposition:
            return {{0.75, 2}, {0.6, 1}, {1.2, 3}, {0.3, 0.5}, {0.5, 2}};
        case ClaimId::WrAveragedFe:
            return {{0.25, 2}, {0.3, 1}, {0.4, 3}, {0.1, 0.5}, {0.45, 5}};
        case ClaimId::PGeneralFe:
        case ClaimId::RefinementSeries:
            return {{0.25, 0}, {0.3, 1}, {0.4, 2}, {0.1, 0}, {0.45, 0.5}};
        case ClaimId::EtaRepresentation:
            return {{2, 0}, {0.5, 0}, {3, 10}, {0.25, 1}, {0.5, 14.134725}};
        case ClaimId::ImzetaStarSeries:
            return {{0.25, 1}, {0.4, 2}, {0.1, 0.5}};
        case ClaimId::MaslankaFormula:
            return {{0.5, 2}, {3, 0}, {0.25, 0}, {2.5, 0}};
        case ClaimId::RwrfeHyperbola:
            return {{0.25, 2}, {0.3, 1}, {0.4, 3}};
        case ClaimId::MahZeroContainment:
            return {};  // derived from the scan
        case ClaimId::LevyMomentDichotomy:
            return {{0.1, 0}, {0.25, 0}, {0.4, 0}};
        case ClaimId::WrMoments:
            return {{0, 0}, {0.5, 0}, {1.5, 0}, {2, 0}, {3, 0}};
    }
    throw DomainError("claims: unknown claim id");
}

ClaimReport evaluate_claim(ClaimId id, const std::vector<Complex>& points,
                           const Config& cfg) {
    if (points.empty() && id != ClaimId::MahZeroContainment)
        throw DomainError("claims: no evaluation points given");
    const bool is_default_suite = points == default_points(id);
    ClaimReport r;
    switch (id) {
        case ClaimId::PsfGaussian: r = eval_psf(points, cfg); break;
        case ClaimId::MuntzIdentity: r = eval_muntz(points, cfg, is_default_suite); break;
        case ClaimId::ContinuationQuotient: r = eval_continuation(points, cfg); break;
        case ClaimId::ImDecomposition: r = eval_imdecomp(points, cfg); break;
        case ClaimId::WrAveragedFe: r = eval_wravg(points, cfg); break;
        case ClaimId::PGeneralFe: r = eval_pgen(points, cfg); break;
        case ClaimId::RefinementSeries: r = eval_refinement(points, cfg); break;
        case ClaimId::EtaRepresentation: r = eval_eta(points, cfg); break;
        case ClaimId::ImzetaStarSeries: r = eval_imzeta(points, cfg); break;
        case ClaimId::MaslankaFormula: r = eval_maslanka(points, cfg); break;
        case ClaimId::RwrfeHyperbola: r = eval_rwrfe(points, cfg); break;
        case ClaimId::MahZeroContainment: r = eval_mah(points, cfg); break;
        case ClaimId::LevyMomentDichotomy: r = eval_levy(points, cfg); break;
        case ClaimId::WrMoments: r = eval_wr(points, cfg); break;
    }
    r.claim = id;
    r.config = cfg;
    return r;
}

ClaimReport evaluate_claim(ClaimId id, const Config& cfg) {
    return evaluate_claim(id, default_points(id), cfg);
}

ChebyshevResult chebyshev_sum_check(const std::vector<double>& a,
                                    const std::vector<double>& b) {
    if (a.size() != b.size() || a.empty())
        throw DomainError("chebyshev check: sequences must share a positive length");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] > 0.0) || !(b[i] > 0.0))
            throw DomainError("chebyshev check: entries must be positive");
    const double n = double(a.size());
    double sab = 0.0, sa = 0.0, sb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += a[i] * b[i];
        sa += a[i];
        sb += b[i];
    }
    ChebyshevResult r;
    r.gap = sab / n - (sa / n) * (sb / n);
    r.holds = r.gap >= 0.0;
    return r;
}

std::vector<double> critical_zero_scan(double t_lo, double t_hi, double step) {
    if (!(t_lo >= 0.0) || !(t_lo < t_hi) || !(t_hi <= 50.0))
        throw DomainError("zero scan: need 0 <= t_lo < t_hi <= 50");
    if (!(step > 0.0)) throw DomainError("zero scan: step must be positive");
    return ref::critical_zero_scan(t_lo, t_hi, step);
}

}  // namespace zetalab::claims
