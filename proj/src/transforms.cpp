#include "zetalab/transforms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "zetalab/series.hpp"

namespace zetalab::tx {

namespace {

using fn::AsymptoticTail;
using fn::TestFunction;

Complex cpow(double x, Complex z) { return std::exp(z * std::log(x)); }

// ---------------------------------------------------------------------------
// Bernoulli machinery for the closed trigonometric sums
//   sum_{n>=1} cos(2 pi n t)/n^m  (m even)  and  sin(...)/n^m  (m odd):
// both are (+-) (2 pi)^m B_m({t}) / (2 m!), plus the m = 1 sawtooth.
// ---------------------------------------------------------------------------

constexpr int kMaxBm = 14;

struct BernoulliTable {
    double num[kMaxBm + 1];    // Bernoulli numbers B_0..B_14 (B_1 = -1/2)
    double fact[kMaxBm + 1];

    BernoulliTable() {
        double C[kMaxBm + 2][kMaxBm + 2] = {};
        for (int n = 0; n <= kMaxBm + 1; ++n) {
            C[n][0] = 1.0;
            for (int k = 1; k <= n; ++k) C[n][k] = C[n - 1][k - 1] + C[n - 1][k];
        }
        num[0] = 1.0;
        for (int m = 1; m <= kMaxBm; ++m) {
            double acc = 0.0;
            for (int j = 0; j < m; ++j) acc += C[m + 1][j] * num[j];
            num[m] = -acc / C[m + 1][m];
        }
        fact[0] = 1.0;
        for (int m = 1; m <= kMaxBm; ++m) fact[m] = fact[m - 1] * m;
    }

    // B_m(t) = sum_k C(m,k) B_{m-k} t^k
    double poly(int m, double t) const {
        double Cmk = 1.0, tk = 1.0, acc = 0.0;
        for (int k = 0; k <= m; ++k) {
            acc += Cmk * num[m - k] * tk;
            Cmk = Cmk * (m - k) / (k + 1);
            tk *= t;
        }
        return acc;
    }
};

const BernoulliTable& btab() {
    static const BernoulliTable t;
    return t;
}

// sum_{n>=1} cos(2 pi n t)/n^m for even m >= 2, t in [0,1)
double clausen_cos(int m, double t) {
    if (m < 2 || m % 2) throw Error("clausen_cos: need even m >= 2");
    const double sg = (m / 2 + 1) % 2 ? -1.0 : 1.0;
    return sg * std::pow(kTwoPi, m) * btab().poly(m, t) / (2.0 * btab().fact[m]);
}

// sum_{n>=1} sin(2 pi n t)/n^m for odd m, t in [0,1)
double clausen_sin(int m, double t) {
    if (m % 2 == 0) throw Error("clausen_sin: need odd m");
    if (m == 1) return t == 0.0 ? 0.0 : kPi * (0.5 - t);
    const double sg = ((m - 1) / 2 + 1) % 2 ? -1.0 : 1.0;
    return sg * std::pow(kTwoPi, m) * btab().poly(m, t) / (2.0 * btab().fact[m]);
}

double ipow(double x, int m) {
    double r = 1.0;
    for (int i = 0; i < m; ++i) r *= x;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Oscillatory tails
// ---------------------------------------------------------------------------

OscTail osc_tail(Complex mu, double A, double nu) {
    if (nu == 0.0) throw DomainError("osc_tail: nu must be nonzero");
    if (!(A > 0.0)) throw DomainError("osc_tail: A must be positive");
    constexpr int K = 12;
    if (mu.real() >= K - 2) throw DomainError("osc_tail: Re(mu) too large");
    const Complex z(0.0, kTwoPi * nu);
    const Complex eA = std::exp(z * A);
    const double lnA = std::log(A);
    Complex coef = 1.0, val = 0.0;
    for (int j = 0; j < K; ++j) {
        val += coef * (-std::exp((mu - double(j)) * lnA) * eA / z);
        coef *= -(mu - double(j)) / z;
    }
    OscTail out;
    out.value = val;
    out.bound = std::abs(coef) * std::pow(A, mu.real() - K + 1) / (K - 1 - mu.real());
    return out;
}

OscTail osc_tail_cos(Complex mu, double A, double nu) {
    const OscTail p = osc_tail(mu, A, nu), m = osc_tail(mu, A, -nu);
    return {(p.value + m.value) / 2.0, (p.bound + m.bound) / 2.0};
}

OscTail osc_tail_sin(Complex mu, double A, double nu) {
    const OscTail p = osc_tail(mu, A, nu), m = osc_tail(mu, A, -nu);
    return {(p.value - m.value) / Complex(0.0, 2.0), (p.bound + m.bound) / 2.0};
}

double zeta_tail(int m, long N) {
    if (m < 2 || N < 1) throw DomainError("zeta_tail: need m >= 2, N >= 1");
    const double x = double(N);
    const double m1 = m, m2 = m1 + 1, m3 = m1 + 2, m4 = m1 + 3, m5 = m1 + 4;
    return std::pow(x, 1.0 - m1) / (m1 - 1.0) - std::pow(x, -m1) / 2.0 +
           m1 * std::pow(x, -m1 - 1.0) / 12.0 -
           m1 * m2 * m3 * std::pow(x, -m1 - 3.0) / 720.0 +
           m1 * m2 * m3 * m4 * m5 * std::pow(x, -m1 - 5.0) / 30240.0;
}

OscTail mellin_model_tail(const AsymptoticTail& t, Complex s, double A) {
    OscTail out;
    const double sig = s.real();
    for (const auto& tm : t.terms) {
        const double w = std::pow(kTwoPi, -tm.m);
        const Complex mu = s - 1.0 - double(tm.m);
        if (tm.a != 0.0) {
            const OscTail r = osc_tail_cos(mu, A, t.freq);
            out.value += w * tm.a * r.value;
            out.bound += w * std::abs(tm.a) * r.bound;
        }
        if (tm.s != 0.0) {
            const OscTail r = osc_tail_sin(mu, A, t.freq);
            out.value += w * tm.s * r.value;
            out.bound += w * std::abs(tm.s) * r.bound;
        }
        if (tm.d != 0.0) {
            if (sig >= tm.m)
                throw DomainError("Mellin tail diverges against the model's DC term");
            out.value += w * tm.d * cpow(A, s - double(tm.m)) / (double(tm.m) - s);
        }
    }
    if (t.rem_coeff != 0.0) {
        if (sig >= t.rem_power)
            throw DomainError("Mellin tail exceeds the model's certified power");
        out.bound += t.rem_coeff * std::pow(kTwoPi, -t.rem_power) *
                     std::pow(A, sig - t.rem_power) / (t.rem_power - sig);
    }
    return out;
}

// ---------------------------------------------------------------------------
// theta
// ---------------------------------------------------------------------------

namespace {

// certified envelope tail of sum_{n > n0} env(n x)
double envelope_sum_tail(const quad::DecayCertificate& cert, double x, long n0) {
    const double y = (n0 + 1) * x;
    if (const auto* g = std::get_if<quad::GaussianDecay>(&cert)) {
        if (y < g->x0) return std::numeric_limits<double>::infinity();
        // m^2 >= (n0+1)^2 + 2(n0+1)(m-n0-1) for m > n0
        const double q = std::exp(-2.0 * g->a * (n0 + 1) * x * x);
        return g->C * std::exp(-g->a * y * y) / (1.0 - q);
    }
    if (const auto* e = std::get_if<quad::Exponential>(&cert)) {
        if (y < e->x0) return std::numeric_limits<double>::infinity();
        return e->C * std::exp(-e->a * y) / (1.0 - std::exp(-e->a * x));
    }
    const auto& p = std::get<quad::PowerLaw>(cert);
    if (y < p.x0 || p.p <= 1.0) return std::numeric_limits<double>::infinity();
    return p.C * std::pow(x, -p.p) * zeta_tail(int(p.p), n0);  // p integral only
}

quad::Result theta_atom(const TestFunction& g, double x, double tol) {
    using Kind = TestFunction::Kind;
    if (g.kind() == Kind::Dilated) return theta_atom(g.child(), g.dilation() * x, tol);

    quad::Result out;
    const auto dc = g.decay_class();

    if (dc == fn::DecayClass::Compact) {
        const double b = *g.support_end();
        const long N = long(std::floor(b / x + 1e-12));
        series::NeumaierSum<double> acc;
        for (long n = 1; n <= N; ++n) acc.add(g(n * x));
        out.value = acc.value();
        out.evaluations = N;
        return out;
    }

    if (dc == fn::DecayClass::SuperExponential) {
        const auto cert = g.integral_certificate();
        series::NeumaierSum<double> acc;
        double tail = std::numeric_limits<double>::infinity();
        long n = 0;
        while (true) {
            ++n;
            acc.add(g(n * x));
            tail = envelope_sum_tail(cert, x, n);
            if (tail <= tol / 2) break;
            if (n > 10'000'000)
                throw ToleranceNotMet("theta: envelope tail will not close", tail);
        }
        out.value = acc.value();
        out.err_bound = tail;
        out.evaluations = n;
        return out;
    }

    const AsymptoticTail* model = g.tail_model();
    if (!model) throw DomainError("theta: no decay certificate for the tail");

    // modeled image: direct sum to N, then closed trigonometric corrections
    // for n > N term by term against the model
    const double w0 = kTwoPi * x;
    long N = std::max<long>(48, long(std::ceil(model->cutoff / x)) + 8);
    double remtail = 0.0;
    while (true) {
        remtail = model->rem_coeff == 0.0
                      ? 0.0
                      : model->rem_coeff * std::pow(w0, -model->rem_power) *
                            zeta_tail(model->rem_power, N);
        if (remtail <= tol / 2 || N >= 30'000'000) break;
        N *= 4;
    }
    if (remtail > tol)
        throw ToleranceNotMet("theta: model remainder will not close", remtail);

    for (const auto& tm : model->terms) {
        if (tm.d != 0.0 && tm.m < 2)
            throw DomainError("theta diverges: model has a non-decaying mean term");
        if (tm.a != 0.0 && tm.m % 2 != 0)
            throw Error("theta: no closed cosine sum for odd power");
        if (tm.s != 0.0 && tm.m % 2 == 0)
            throw Error("theta: no closed sine sum for even power");
    }

    // closed-form images evaluate exactly; quadrature-backed ones carry the
    // per-point quadrature tolerance below the seam and the model remainder
    // beyond it
    const auto bk = g.child().kind();
    const bool quad_eval = bk == TestFunction::Kind::PeakTimesGaussian ||
                           bk == TestFunction::Kind::SampledEven;
    series::NeumaierSum<double> acc;
    double perr = 0.0;
    for (long n = 1; n <= N; ++n) {
        const double u = n * x;
        acc.add(g(u));
        if (quad_eval)
            perr += u < model->cutoff
                        ? 1e-12
                        : model->rem_coeff * std::pow(kTwoPi * u, -model->rem_power);
    }

    const double tf = model->freq * x - std::floor(model->freq * x);
    std::vector<double> cpart(model->terms.size(), 0.0), spart(model->terms.size(), 0.0);
    for (long n = 1; n <= N; ++n) {
        const double ang = kTwoPi * std::fmod(double(n) * tf, 1.0);
        const double cn = std::cos(ang), sn = std::sin(ang);
        const double inv = 1.0 / double(n);
        for (size_t i = 0; i < model->terms.size(); ++i) {
            const auto& tm = model->terms[i];
            const double nw = ipow(inv, tm.m);
            if (tm.a != 0.0) cpart[i] += cn * nw;
            if (tm.s != 0.0) spart[i] += sn * nw;
        }
    }

    double corr = 0.0;
    for (size_t i = 0; i < model->terms.size(); ++i) {
        const auto& tm = model->terms[i];
        const double wm = std::pow(w0, -tm.m);
        if (tm.a != 0.0) corr += tm.a * (clausen_cos(tm.m, tf) - cpart[i]) * wm;
        if (tm.s != 0.0) corr += tm.s * (clausen_sin(tm.m, tf) - spart[i]) * wm;
        if (tm.d != 0.0) corr += tm.d * zeta_tail(tm.m, N) * wm;
    }

    out.value = acc.value() + corr;
    out.err_bound = remtail + perr;
    out.evaluations = N;
    return out;
}

}  // namespace

quad::Result theta_transform(const TestFunction& f, double x, double tol) {
    if (!(x > 0.0)) throw DomainError("theta: x must be positive");
    const auto atoms = fn::flatten(f);
    long live = 0;
    for (const auto& a : atoms)
        if (a.coeff != 0.0) ++live;
    quad::Result total;
    for (const auto& a : atoms) {
        if (a.coeff == 0.0) continue;
        const auto r = theta_atom(a.fn, x, tol / (double(live) * std::abs(a.coeff)));
        total.value += a.coeff * r.value;
        total.err_bound += std::abs(a.coeff) * r.err_bound;
        total.evaluations += r.evaluations;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Fourier cosine transform
// ---------------------------------------------------------------------------

namespace {

// int_A^inf 2 cos(2 pi x y) * model(y) dy
OscTail fourier_model_tail(const AsymptoticTail& t, double x, double A) {
    OscTail out;
    auto C = [&](int m, double eta) -> OscTail {  // int_A^inf t^-m cos(2 pi eta t)
        if (std::abs(eta) < 1e-12) {
            if (m < 2)
                throw DomainError("Fourier tail diverges at the model's frequency");
            return {std::pow(A, 1.0 - m) / (m - 1.0), 0.0};
        }
        return osc_tail_cos(Complex(-double(m), 0.0), A, eta);
    };
    auto S = [&](int m, double eta) -> OscTail {  // int_A^inf t^-m sin(2 pi eta t)
        if (std::abs(eta) < 1e-12) return {0.0, 0.0};
        return osc_tail_sin(Complex(-double(m), 0.0), A, eta);
    };
    for (const auto& tm : t.terms) {
        const double w = std::pow(kTwoPi, -tm.m);
        if (tm.a != 0.0) {  // 2 cos(X) cos(V) = cos(X+V) + cos(X-V)
            for (const double eta : {x + t.freq, x - t.freq}) {
                const OscTail r = C(tm.m, eta);
                out.value += w * tm.a * r.value;
                out.bound += w * std::abs(tm.a) * r.bound;
            }
        }
        if (tm.s != 0.0) {  // 2 cos(X) sin(V) = sin(V+X) + sin(V-X)
            for (const double eta : {t.freq + x, t.freq - x}) {
                const OscTail r = S(tm.m, eta);
                out.value += w * tm.s * r.value;
                out.bound += w * std::abs(tm.s) * r.bound;
            }
        }
        if (tm.d != 0.0) {
            const OscTail r = C(tm.m, x);
            out.value += 2.0 * w * tm.d * r.value;
            out.bound += 2.0 * w * std::abs(tm.d) * r.bound;
        }
    }
    if (t.rem_coeff != 0.0)
        out.bound += 2.0 * t.rem_coeff * std::pow(kTwoPi, -t.rem_power) *
                     std::pow(A, 1.0 - t.rem_power) / (t.rem_power - 1.0);
    return out;
}

quad::Result fourier_atom(const TestFunction& g, double x, double tol) {
    using Kind = TestFunction::Kind;
    if (g.kind() == Kind::Dilated) {
        // image of g(beta .) at x is (1/beta) image(g)(x/beta)
        const double b = g.dilation();
        auto r = fourier_atom(g.child(), x / b, tol * b);
        r.value /= b;
        r.err_bound /= b;
        return r;
    }

    const auto osc = [&](double y) -> Complex { return 2.0 * std::cos(kTwoPi * x * y) * g(y); };
    const auto dc = g.decay_class();

    if (dc == fn::DecayClass::Compact)
        return quad::integrate(osc, 0.0, *g.support_end(), {tol, 8000});

    if (dc == fn::DecayClass::SuperExponential) {
        auto cert = g.integral_certificate();
        std::visit([](auto& c) { c.C *= 2.0; }, cert);
        return quad::integrate_half_line(osc, 0.0, cert, {tol, 8000});
    }

    const AsymptoticTail* model = g.tail_model();
    if (!model) throw DomainError("fourier: no decay certificate for the tail");
    auto r = quad::integrate(osc, 0.0, model->cutoff, {tol / 2, 8000});
    const OscTail t = fourier_model_tail(*model, x, model->cutoff);
    r.value += t.value;
    r.err_bound += t.bound;
    return r;
}

}  // namespace

quad::Result fourier_cosine(const TestFunction& f, double x, double tol) {
    x = std::abs(x);
    const auto atoms = fn::flatten(f);
    long live = 0;
    for (const auto& a : atoms)
        if (a.coeff != 0.0) ++live;
    quad::Result total;
    for (const auto& a : atoms) {
        if (a.coeff == 0.0) continue;
        const auto r = fourier_atom(a.fn, x, tol / (double(live) * std::abs(a.coeff)));
        total.value += a.coeff * r.value;
        total.err_bound += std::abs(a.coeff) * r.err_bound;
        total.evaluations += r.evaluations;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Mellin transform
// ---------------------------------------------------------------------------

namespace {

// envelope certificate for |y^(s-1) g(y)| on y >= 1, from g's own envelope
quad::DecayCertificate mellin_weight_cert(const quad::DecayCertificate& cert,
                                          double sig) {
    if (const auto* g = std::get_if<quad::GaussianDecay>(&cert)) {
        double K = 1.0;
        if (sig > 1.0) {
            const double ym = std::max(1.0, std::sqrt((sig - 1.0) / g->a));
            K = std::pow(ym, sig - 1.0) * std::exp(-0.5 * g->a * ym * ym);
        }
        return quad::GaussianDecay{g->C * std::max(K, 1.0), g->a / 2.0,
                                   std::max(g->x0, 1.0)};
    }
    if (const auto* e = std::get_if<quad::Exponential>(&cert)) {
        double K = 1.0;
        if (sig > 1.0) {
            const double ym = std::max(1.0, 2.0 * (sig - 1.0) / e->a);
            K = std::pow(ym, sig - 1.0) * std::exp(-0.5 * e->a * ym);
        }
        return quad::Exponential{e->C * std::max(K, 1.0), e->a / 2.0,
                                 std::max(e->x0, 1.0)};
    }
    const auto& p = std::get<quad::PowerLaw>(cert);
    if (p.p - sig + 1.0 <= 1.0)
        throw DomainError("Mellin point outside the decay-limited strip");
    return quad::PowerLaw{p.C, p.p - sig + 1.0, std::max(p.x0, 1.0)};
}

quad::Result mellin_atom(const TestFunction& g, Complex s, double tol) {
    using Kind = TestFunction::Kind;
    const double sig = s.real();
    if (g.kind() == Kind::Dilated) {
        // int y^(s-1) g(beta y) dy = beta^(-s) M(g)(s)
        const double b = g.dilation();
        auto r = mellin_atom(g.child(), s, tol * std::pow(b, sig));
        const Complex fac = cpow(b, -s);
        r.value *= fac;
        r.err_bound *= std::abs(fac);
        return r;
    }

    const auto dc = g.decay_class();
    const AsymptoticTail* model = g.tail_model();
    if (model) {
        // absolute-convergence strip: every surviving x^-m term caps Re(s) at m
        double strip_max = model->rem_coeff != 0.0 ? double(model->rem_power)
                                                   : std::numeric_limits<double>::infinity();
        for (const auto& tm : model->terms)
            strip_max = std::min(strip_max, double(tm.m));
        if (sig >= strip_max)
            throw DomainError("Mellin point outside the decay-limited strip");
    } else if (dc != fn::DecayClass::Compact && dc != fn::DecayClass::SuperExponential) {
        throw DomainError("Mellin: no decay certificate for the tail");
    }

    const auto wgt = [&](double y) -> Complex { return cpow(y, s - 1.0) * g(y); };
    const double lower_end =
        dc == fn::DecayClass::Compact ? std::min(1.0, *g.support_end()) : 1.0;

    quad::Result out;
    if (sig < 1.0)
        out = quad::integrate_singular_lower(wgt, 0.0, lower_end, sig - 1.0,
                                             {tol / 2, 8000});
    else
        out = quad::integrate(wgt, 0.0, lower_end, {tol / 2, 8000});

    if (dc == fn::DecayClass::Compact) {
        const double b = *g.support_end();
        if (b > 1.0) {
            const auto r = quad::integrate(wgt, 1.0, b, {tol / 2, 8000});
            out.value += r.value;
            out.err_bound += r.err_bound;
            out.evaluations += r.evaluations;
        }
        return out;
    }

    if (dc == fn::DecayClass::SuperExponential) {
        const auto cert = mellin_weight_cert(g.integral_certificate(), sig);
        const auto r = quad::integrate_half_line(wgt, 1.0, cert, {tol / 2, 8000});
        out.value += r.value;
        out.err_bound += r.err_bound;
        out.evaluations += r.evaluations;
        return out;
    }

    const auto mid = quad::integrate(wgt, 1.0, model->cutoff, {tol / 2, 8000});
    const OscTail t = mellin_model_tail(*model, s, model->cutoff);
    out.value += mid.value + t.value;
    out.err_bound += mid.err_bound + t.bound;
    out.evaluations += mid.evaluations;
    return out;
}

}  // namespace

quad::Result mellin(const TestFunction& f, Complex s, double tol) {
    if (s.real() <= 0.0)
        throw DomainError("Mellin requires Re(s) > 0: the integrand is not "
                          "integrable at 0 for bounded nonvanishing functions");
    const auto atoms = fn::flatten(f);
    long live = 0;
    for (const auto& a : atoms)
        if (a.coeff != 0.0) ++live;
    quad::Result total;
    for (const auto& a : atoms) {
        if (a.coeff == 0.0) continue;
        const auto r = mellin_atom(a.fn, s, tol / (double(live) * std::abs(a.coeff)));
        total.value += a.coeff * r.value;
        total.err_bound += std::abs(a.coeff) * r.err_bound;
        total.evaluations += r.evaluations;
    }
    return total;
}

// ---------------------------------------------------------------------------
// sup-norm, Poisson residual, element builders
// ---------------------------------------------------------------------------

double s2_norm(const TestFunction& f) {
    const auto atoms = fn::flatten(f);
    double X = 3.0;
    double tail_sup = 0.0;
    bool slow_eval = false;
    for (const auto& a : atoms) {
        if (a.coeff == 0.0) continue;
        const auto& g = a.fn;
        const auto dc = g.decay_class();
        if (dc == fn::DecayClass::Compact) {
            X = std::max(X, *g.support_end());
            continue;  // no mass beyond the support
        }
        if (dc == fn::DecayClass::SuperExponential) {
            const auto cert = g.integral_certificate();
            if (const auto* gd = std::get_if<quad::GaussianDecay>(&cert)) {
                X = std::max({X, gd->x0, std::sqrt(2.0 / gd->a)});
                tail_sup += std::abs(a.coeff) * gd->C * X * X * std::exp(-gd->a * X * X);
            } else if (const auto* e = std::get_if<quad::Exponential>(&cert)) {
                X = std::max({X, e->x0, 2.0 / e->a});
                tail_sup += std::abs(a.coeff) * e->C * X * X * std::exp(-e->a * X);
            }
            continue;
        }
        const AsymptoticTail* model = g.tail_model();
        if (!model) return std::numeric_limits<double>::infinity();
        X = std::max(X, model->cutoff);
        double sup = 0.0;
        for (const auto& tm : model->terms) {
            const double mag = std::abs(tm.a) + std::abs(tm.s) + std::abs(tm.d);
            if (mag == 0.0) continue;
            if (tm.m == 1 && mag > 1e-30)
                return std::numeric_limits<double>::infinity();
            sup += mag * std::pow(kTwoPi, -tm.m) * std::pow(model->cutoff, 2.0 - tm.m);
        }
        sup += model->rem_coeff * std::pow(kTwoPi, -model->rem_power) *
               std::pow(model->cutoff, 2.0 - model->rem_power);
        tail_sup += std::abs(a.coeff) * sup;
        if (model->rem_coeff != 0.0) slow_eval = true;  // per-point quadratures
    }

    const auto weight = [&](double x) { return x * x * std::abs(f(x)); };
    const long M = slow_eval ? 1200 : 4000;
    double best = 0.0;
    long bi = 0;
    for (long i = 1; i <= M; ++i) {
        const double v = weight(X * double(i) / double(M));
        if (v > best) {
            best = v;
            bi = i;
        }
    }
    // golden-section refinement around the best grid point
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = X * double(bi - 1) / double(M), hi = X * double(bi + 1) / double(M);
    double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
    double fc = weight(c), fd = weight(d);
    for (int it = 0; it < 120 && hi - lo > 1e-15 * (1.0 + hi); ++it) {
        if (fc > fd) {
            hi = d; d = c; fd = fc;
            c = hi - gr * (hi - lo); fc = weight(c);
        } else {
            lo = c; c = d; fc = fd;
            d = lo + gr * (hi - lo); fd = weight(d);
        }
    }
    best = std::max({best, fc, fd});
    return std::max(best, tail_sup);
}

double psf_residual(const TestFunction& c, double x, double tol) {
    if (!(x > 0.0)) throw DomainError("psf_residual: x must be positive");
    const auto t1 = theta_transform(c, x, tol / 2);
    const auto t2 = theta_transform(c, 1.0 / x, tol / 2);
    const double lhs = t2.value.real() / x + 1.0 / (2.0 * x) - 0.5;
    return std::abs(lhs - t1.value.real());
}

fn::TestFunction make_poisson_element(const TestFunction& f, bool normalize) {
    auto img = TestFunction::fourier_image(f);
    const double c0 = f(0.0) + img(0.0);
    if (!std::isfinite(c0) || std::abs(c0) < 1e-9)
        throw DomainError("make_poisson_element: normalizer f(0) + fhat(0) vanishes");
    auto base = TestFunction::sum(f, std::move(img));
    return normalize ? TestFunction::scaled(1.0 / c0, std::move(base)) : base;
}

fn::TestFunction fox_solve(const TestFunction& f, double lambda) {
    const double den = 1.0 - lambda * lambda;
    if (std::abs(den) < 1e-12)
        throw DomainError("fox_solve: lambda is an eigenvalue of the kernel");
    // unitary cosine kernel: (A f)(x) = sqrt(2/pi) int_0^inf cos(x t) f(t) dt
    //                               = sqrt(1/(2 pi)) fhat(x / (2 pi))
    auto Af = TestFunction::scaled(
        std::sqrt(1.0 / kTwoPi),
        TestFunction::dilated(1.0 / kTwoPi, TestFunction::fourier_image(f)));
    return TestFunction::sum(TestFunction::scaled(1.0 / den, f),
                             TestFunction::scaled(lambda / den, std::move(Af)));
}

}  // namespace zetalab::tx
