#include "zetalab/series.hpp"

#include <cmath>

namespace zetalab::series {

namespace {

// One CVZ pass at level n: Chebyshev-polynomial weights via the three-term
// recurrence on b, folded into a running signed sum.
template <typename T>
T cvz_level(const std::function<T(long)>& a, long n) {
    double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0, c = -d;
    T s{};
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s += c * a(k);
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    return s / d;
}

template <typename T>
T accelerate(const std::function<T(long)>& a, double tol, long max_terms) {
    long n = 18;
    T prev = cvz_level(a, n);
    while (true) {
        long next = n + n / 2 + 2;
        if (next > max_terms)
            throw ToleranceNotMet("alternating-series acceleration did not stabilize",
                                  std::abs(prev));
        T cur = cvz_level(a, next);
        if (std::abs(cur - prev) <= 0.5 * tol) return cur;
        prev = cur;
        n = next;
    }
}

}  // namespace

namespace detail {

double accelerate_real(const std::function<double(long)>& a, double tol, long max_terms) {
    return accelerate<double>(a, tol, max_terms);
}

Complex accelerate_complex(const std::function<Complex(long)>& a, double tol,
                           long max_terms) {
    return accelerate<Complex>(a, tol, max_terms);
}

}  // namespace detail

}  // namespace zetalab::series
