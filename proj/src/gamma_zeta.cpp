#include "zetalab/gamma_zeta.hpp"

#include <cmath>

#include "zetalab/series.hpp"

namespace zetalab::ref {

namespace {

constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7};

// Bernoulli numbers B_2, B_4, ..., B_24
constexpr double kBernoulli[12] = {
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0,
    -174611.0 / 330.0, 854513.0 / 138.0, -236364091.0 / 2730.0};

Complex pow_complex(double base, Complex e) {
    return std::exp(e * std::log(base));
}

}  // namespace

Complex gamma(Complex s) {
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
        throw PolePoint("gamma pole at a non-positive integer");
    if (s.real() < 0.5) {
        // reflection: Gamma(s) Gamma(1-s) = pi / sin(pi s)
        return kPi / (std::sin(kPi * s) * gamma(1.0 - s));
    }
    const Complex z = s - 1.0;
    Complex acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z + static_cast<double>(i));
    const Complex t = z + kLanczosG + 0.5;
    return std::sqrt(kTwoPi) * std::pow(t, z + 0.5) * std::exp(-t) * acc;
}

Complex zeta_em(Complex s) {
    const long N = std::max<long>(20, static_cast<long>(1.3 * std::abs(s) + 10.0));
    series::NeumaierSum<Complex> head;
    for (long n = 1; n < N; ++n) head.add(pow_complex(static_cast<double>(n), -s));
    const Complex Nms = pow_complex(static_cast<double>(N), -s);
    Complex v = head.value() + Nms * static_cast<double>(N) / (s - 1.0) + 0.5 * Nms;
    // tail: sum_k B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k)
    Complex poch = s;                       // rising factorial with 2k-1 factors
    double fact = 2.0;                      // (2k)!
    Complex npow = Nms / static_cast<double>(N);  // N^(-s-2k+1)
    for (int k = 1; k <= 12; ++k) {
        v += kBernoulli[k - 1] / fact * poch * npow;
        poch *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
        fact *= (2.0 * k + 1.0) * (2.0 * k + 2.0);
        npow /= static_cast<double>(N) * static_cast<double>(N);
    }
    return v;
}

Complex zeta(Complex s) {
    if (s.real() <= 0.0)
        throw DomainError("zeta representation valid only for Re(s) > 0");
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-3) throw PolePoint("zeta pole at s = 1");
    const Complex q = 1.0 - pow_complex(2.0, 1.0 - s);
    if (std::abs(q) < 1e-3) return zeta_em(s);  // spurious zeros s = 1 + 2 pi i k/ln 2
    const Complex eta = series::accelerate_alternating(
        [&s](long k) { return pow_complex(static_cast<double>(k + 1), -s); }, 5e-14);
    return eta / q;
}

Complex completed_zeta(Complex s) {
    if (std::abs(s) < 1e-3) throw PolePoint("completed zeta pole at s = 0");
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-3)
        throw PolePoint("completed zeta pole at s = 1");
    if (s.real() <= 0.0) return completed_zeta(1.0 - s);
    return pow_complex(kPi, -s / 2.0) * gamma(s / 2.0) * zeta(s);
}

std::vector<double> critical_zero_scan(double t_lo, double t_hi, double step) {
    if (!(step > 0.0) || !(t_lo < t_hi))
        throw DomainError("critical_zero_scan: need t_lo < t_hi and step > 0");
    auto f = [](double t) { return completed_zeta(Complex(0.5, t)).real(); };
    std::vector<double> zeros;
    double a = t_lo, fa = f(a);
    while (a < t_hi) {
        double b = std::min(a + step, t_hi);
        double fb = f(b);
        if (fa == 0.0) zeros.push_back(a);
        else if (fa * fb < 0.0) {
            double lo = a, hi = b, flo = fa;
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                const double fm = f(mid);
                if (fm == 0.0) { lo = hi = mid; break; }
                if (flo * fm < 0.0) hi = mid;
                else { lo = mid; flo = fm; }
            }
            zeros.push_back(0.5 * (lo + hi));
        }
        a = b;
        fa = fb;
    }
    return zeros;
}

}  // namespace zetalab::ref
