#include "zetalab/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "zetalab/gamma_zeta.hpp"
#include "zetalab/transforms.hpp"

namespace zetalab::cont {
namespace {

constexpr double kPoleGap = 1e-3;
constexpr int kDilationFloor = 300;    // dilations summed explicitly past the window
constexpr int kDilationCeil = 200000;  // hard cost cap; beyond it the bound stays honest

Complex cpow(double x, const Complex& z) { return std::exp(z * std::log(x)); }

void require_off_pole(const Complex& s) {
    if (std::abs(s - 1.0) < kPoleGap)
        throw PolePoint("within 1e-3 of the pole at s = 1");
}

// theta(atom)(x) <= C exp(-a x^q) for x >= 1, from the atom's decay certificate:
// sum_n exp(-a n^2 x^2) <= exp(-a x^2)/(1 - exp(-3 a x^2)) and its exp(-a n x) twin.
struct ThetaEnvelope {
    double C;
    double a;
    int q;  // 1 or 2
};

ThetaEnvelope theta_envelope(const fn::TestFunction& f) {
    const auto cert = f.integral_certificate();
    if (const auto* g = std::get_if<quad::GaussianDecay>(&cert)) {
        const double x0 = std::max(1.0, g->x0);
        return {g->C / (1.0 - std::exp(-3.0 * g->a * x0 * x0)), g->a, 2};
    }
    if (const auto* e = std::get_if<quad::Exponential>(&cert)) {
        const double x0 = std::max(1.0, e->x0);
        return {e->C / (1.0 - std::exp(-e->a * x0)), e->a, 1};
    }
    throw DomainError("theta tail: decay certificate is not exponential-class");
}

// int_B^inf x^p C exp(-a x^q) dx  (p >= 0), via x^p <= B^p e^{p(x-B)/B} and
// x^q - B^q >= q B^{q-1} (x - B).
double expo_tail(const ThetaEnvelope& e, double sigma, double B) {
    const double p = std::max(sigma - 1.0, 0.0);
    const double margin = (e.q == 2 ? 2.0 * e.a * B : e.a) - p / B;
    if (margin <= 0.0) return std::numeric_limits<double>::infinity();
    const double decay = e.q == 2 ? e.a * B * B : e.a * B;
    return e.C * std::pow(B, p) * std::exp(-decay) / margin;
}

struct ModeledAtom {
    double coeff = 0.0;
    const fn::AsymptoticTail* model = nullptr;
    fn::AsymptoticTail osc;  // the model with DC terms stripped (remainder kept)
};

struct TailPlan {
    double X = 7.0;
    int M = kDilationFloor;
    std::vector<ModeledAtom> modeled;
    std::vector<std::pair<double, ThetaEnvelope>> expo;  // |coeff|, envelope
};

// Truncation bound for the dilations n > M of one modeled atom's oscillatory
// terms plus its remainder envelope: |int_{nX}^inf u^{s-1-m} e(u) du| is
// bounded without oscillatory gain by (nX)^{sig-m}/(m-sig), and
// sum_{n>M} n^{-m} by the integral bound M^{1-m}/(m-1).
double modeled_truncation(const ModeledAtom& md, double sigma, double X, int M) {
    double tsum = 0.0;
    for (const auto& t : md.model->terms) {
        const double cm = std::abs(t.a) + std::abs(t.s);
        if (cm == 0.0) continue;
        tsum += cm * std::pow(kTwoPi, -t.m) * std::pow(X, sigma - t.m) / (t.m - sigma) *
                std::pow(double(M), 1.0 - t.m) / (t.m - 1.0);
    }
    if (md.model->rem_coeff != 0.0) {
        const int p = md.model->rem_power;
        tsum += md.model->rem_coeff * std::pow(kTwoPi, -p) * std::pow(X, sigma - p) /
                (p - sigma) * std::pow(double(M), 1.0 - p) / (p - 1.0);
    }
    return std::abs(md.coeff) * tsum;
}

TailPlan make_plan(const fn::TestFunction& c, double sigma, double share) {
    TailPlan plan;
    for (const auto& at : fn::flatten(c)) {
        switch (at.fn.decay_class()) {
            case fn::DecayClass::Compact:
                plan.X = std::max(plan.X, *at.fn.support_end());
                break;
            case fn::DecayClass::SuperExponential:
                plan.expo.emplace_back(std::abs(at.coeff), theta_envelope(at.fn));
                break;
            case fn::DecayClass::Modeled: {
                const auto* m = at.fn.tail_model();
                int mmin = m->rem_power;
                for (const auto& t : m->terms) mmin = std::min(mmin, t.m);
                if (mmin < 2)
                    throw DomainError("theta tail: first-order image decay unsupported");
                if (sigma >= double(mmin))
                    throw DomainError("theta tail: Re(s) outside the decay-limited strip");
                ModeledAtom md{at.coeff, m, *m};
                for (auto& t : md.osc.terms) t.d = 0.0;
                plan.modeled.push_back(std::move(md));
                plan.X = std::max(plan.X, m->cutoff);
                break;
            }
            default:
                throw DomainError("theta tail: component without usable decay");
        }
    }
    const auto overshoot = [&]() {
        double t = 0.0;
        for (const auto& md : plan.modeled)
            t += modeled_truncation(md, sigma, plan.X, plan.M);
        for (const auto& [cc, env] : plan.expo) t += cc * expo_tail(env, sigma, plan.X);
        return t;
    };
    if (plan.modeled.empty()) {
        // smooth decaying integrands: widening the window is cheap
        while (overshoot() > share && plan.X < 2048.0) plan.X *= 1.5;
    } else {
        // the window must stop at the model cutoff -- past it the integrand
        // carries the model's dilated oscillations, which no sane quadrature
        // should chase; accuracy is bought with more explicit dilations instead
        while (overshoot() > share && plan.M < kDilationCeil) plan.M *= 2;
    }
    return plan;
}

}  // namespace

Complex pole_term(const Complex& s, PoleTerm which) {
    const Complex base = 1.0 / (s * (s - 1.0));
    return which == PoleTerm::Corrected ? 0.5 * base : base;
}

double zeta_t(const Complex& s) { return s.imag() * (2.0 * s.real() - 1.0); }

quad::Result theta_mellin_upper(const fn::TestFunction& c, const Complex& s,
                                double tol) {
    const double sigma = s.real();
    const double share = tol / 4.0;
    TailPlan plan = make_plan(c, sigma, share);
    const double X = plan.X, lnX = std::log(X);

    quad::Result out;

    // [1, X] on the logarithmic axis: int_0^lnX e^{v s} theta(c)(e^v) dv
    const double wfac = sigma > 1e-12 ? (std::pow(X, sigma) - 1.0) / sigma : lnX;
    const double theta_tol = std::max(share / std::max(wfac, 1.0) / 2.0, 5e-15);
    long theta_evals = 0;
    const auto integrand = [&](double v) -> Complex {
        auto th = tx::theta_transform(c, std::exp(v), theta_tol);
        theta_evals += th.evaluations;
        return std::exp(v * s) * th.value;
    };
    auto core = quad::integrate(integrand, 0.0, lnX, {share, 8000});
    out.value = core.value;
    out.err_bound = core.err_bound + theta_tol * wfac;
    out.evaluations = core.evaluations + theta_evals;

    // beyond X, exponential-class pieces contribute only their envelope bound
    for (const auto& [cc, env] : plan.expo) out.err_bound += cc * expo_tail(env, sigma, X);

    // modeled pieces: DC terms closed over every dilation, oscillatory terms
    // summed dilation by dilation through the incomplete-Mellin recursion
    for (const auto& md : plan.modeled) {
        for (const auto& t : md.model->terms) {
            if (t.d == 0.0) continue;
            const double zm = ref::zeta(Complex(double(t.m), 0.0)).real();
            out.value += md.coeff * t.d * std::pow(kTwoPi, -t.m) * zm *
                         cpow(X, s - double(t.m)) / (double(t.m) - s);
        }
        for (int n = 1; n <= plan.M; ++n) {
            auto tail = tx::mellin_model_tail(md.osc, s, double(n) * X);
            const Complex w = cpow(double(n), -s);
            out.value += md.coeff * w * tail.value;
            out.err_bound += std::abs(md.coeff) * std::abs(w) * tail.bound;
            out.evaluations += 1;
        }
        out.err_bound += modeled_truncation(md, sigma, X, plan.M);
    }
    return out;
}

quad::Result tail_integral(const fn::TestFunction& c, const Complex& s, double tol) {
    auto a = theta_mellin_upper(c, s, tol / 2.0);
    auto b = theta_mellin_upper(c, 1.0 - s, tol / 2.0);
    return {a.value + b.value, a.err_bound + b.err_bound,
            a.evaluations + b.evaluations};
}

quad::Result muntz_residual(const fn::TestFunction& c, const Complex& s,
                            PoleTerm pole, double tol) {
    require_off_pole(s);
    if (s.real() <= 0.0 || s.real() >= 2.0)
        throw DomainError("product identity: Re(s) outside (0,2)");
    const Complex z = ref::zeta(s);
    // apportion the budget: the Mellin error is amplified by |zeta(s)|
    auto m = tx::mellin(c, s, tol / (3.0 * (std::abs(z) + 1.0)));
    auto ti = tail_integral(c, s, tol / 3.0);
    const Complex lhs = m.value * z;
    const Complex rhs = pole_term(s, pole) + ti.value;
    const double eb = m.err_bound * std::abs(z) +
                      std::abs(m.value) * 1e-14 * std::abs(z) + ti.err_bound;
    return {lhs - rhs, eb, m.evaluations + ti.evaluations};
}

quad::Result zeta_via_theta_quotient(const Complex& s, PoleTerm pole, double tol) {
    if (std::abs(s) < kPoleGap) throw PolePoint("within 1e-3 of the pole at s = 0");
    require_off_pole(s);
    if (s.real() <= 0.0)
        throw DomainError("theta quotient route requires Re(s) > 0");
    auto G = fn::TestFunction::gaussian();
    // tol is the budget for the quotient; dividing by a small M(G) amplifies
    // the parts' error, so refine them until the propagated bound fits.
    double part_tol = tol;
    quad::Result last{0.0, kInf, 0};
    long evals = 0;
    for (int round = 0; round < 4; ++round) {
        auto ti = tail_integral(G, s, part_tol);
        auto mg = tx::mellin(G, s, part_tol);
        evals += ti.evaluations + mg.evaluations;
        const Complex num = pole_term(s, pole) + ti.value;
        const double den = std::abs(mg.value) - mg.err_bound;
        if (den > 0.0) {
            const Complex q = num / mg.value;
            const double eb = (ti.err_bound + std::abs(q) * mg.err_bound) / den;
            last = {q, eb, evals};
            if (eb <= tol) return last;
            part_tol = std::max(0.25 * part_tol * tol / eb, 1e-14);
        } else {
            part_tol = std::max(0.1 * part_tol, 1e-14);
        }
    }
    if (!std::isfinite(last.err_bound))
        throw ToleranceNotMet("theta quotient: denominator uncertain to its own bound",
                              part_tol);
    return last;  // honest bound, caller sees it exceeds the request
}

quad::Result mellin_theta(const fn::TestFunction& c, const Complex& s, double tol) {
    const double sigma = s.real();
    if (sigma <= 1.0 || sigma >= 2.0)
        throw DomainError("M(theta(c)) is computed on Re(s) in (1,2) only");
    require_off_pole(s);

    // x in (0,1): evaluate theta through the summation identity pointwise;
    // the 1/x amplification of the pointwise theta error integrates to
    // theta_tol / (sigma - 1) under the x^{s-1} weight.
    const double theta_tol = std::max(tol * (sigma - 1.0) / 8.0, 5e-15);
    long theta_evals = 0;
    const auto low = [&](double x) -> Complex {
        if (x <= 0.0) return 0.0;
        auto th = tx::theta_transform(c, 1.0 / x, theta_tol);
        theta_evals += th.evaluations;
        return cpow(x, s - 1.0) * (0.5 / x - 0.5 + th.value / x);
    };
    auto lower = quad::integrate_singular_lower(low, 0.0, 1.0, sigma - 2.0, {tol / 4.0, 8000});
    auto upper = theta_mellin_upper(c, s, tol / 4.0);
    return {lower.value + upper.value,
            lower.err_bound + theta_tol / (sigma - 1.0) + upper.err_bound,
            lower.evaluations + theta_evals + upper.evaluations};
}

ImDecomposition im_decomposition(const fn::TestFunction& c, const Complex& s,
                                 double tol) {
    require_off_pole(s);
    const double sigma = s.real(), tau = s.imag();
    if (sigma <= 0.0 || sigma >= 2.0)
        throw DomainError("imaginary-part decomposition: Re(s) outside (0,2)");

    auto m = tx::mellin(c, s, tol);
    const Complex z = ref::zeta(s);
    ImDecomposition d{};
    d.direct = (m.value * z).imag();
    const double m2 = std::norm(s * (s - 1.0));
    d.trivial_term_stated = zeta_t(s) / m2;
    d.trivial_term_derived = -zeta_t(s) / (2.0 * m2);

    auto ti = tail_integral(c, s, tol);
    d.oscillatory_derived = ti.value.imag();
    d.err_bound = m.err_bound * std::abs(z) + std::abs(m.value) * 1e-14 * std::abs(z) +
                  ti.err_bound;

    if (tau == 0.0) {
        d.oscillatory_stated = 0.0;
        return d;
    }

    // the linear-phase integral int_1^inf (x^{sigma-1} - x^{-sigma}) sin(tau x)
    // theta(c)(x) dx: quadrature over [1, B]; exponential-class tails are
    // certified, power-law (modeled) tails only admit the blunt |sin| <= 1
    // envelope, so B is capped and the residue stays in err_bound.
    const double share = tol / 4.0;
    TailPlan plan = make_plan(c, sigma, share);
    double B = plan.X;
    const auto brutal = [&](double Bc) {
        double t = 0.0;
        for (const auto& md : plan.modeled) {
            double dc_sup = md.model->rem_coeff * std::pow(kTwoPi, -md.model->rem_power);
            for (const auto& tm : md.model->terms)
                dc_sup += (std::abs(tm.a) + std::abs(tm.s) + std::abs(tm.d)) *
                          std::pow(kTwoPi, -tm.m) * std::pow(Bc, 2 - tm.m);
            // |theta tail| <= dc_sup * zeta(2) / x^2 beyond the window
            t += std::abs(md.coeff) * dc_sup * (kPi * kPi / 6.0) *
                 (std::pow(Bc, sigma - 2.0) / (2.0 - sigma) +
                  std::pow(Bc, -sigma - 1.0) / (sigma + 1.0));
        }
        for (const auto& [cc, env] : plan.expo) t += 2.0 * cc * expo_tail(env, sigma, Bc);
        return t;
    };
    while (brutal(B) > share && B < 600.0) B *= 1.5;

    const double wfac = (sigma > 1e-12 ? (std::pow(B, sigma) - 1.0) / sigma : std::log(B)) +
                        std::log(B);
    const double theta_tol = std::max(share / std::max(wfac, 1.0) / 2.0, 5e-15);
    const auto integrand = [&](double x) -> Complex {
        auto th = tx::theta_transform(c, x, theta_tol);
        return (std::pow(x, sigma - 1.0) - std::pow(x, -sigma)) * std::sin(tau * x) *
               th.value;
    };
    auto osc = quad::integrate(integrand, 1.0, B, {share, 8000});
    d.oscillatory_stated = osc.value.real();
    d.err_bound += osc.err_bound + theta_tol * wfac + brutal(B);
    return d;
}

}  // namespace zetalab::cont
