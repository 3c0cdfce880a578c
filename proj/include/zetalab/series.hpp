#pragma once

#include <cmath>
#include <functional>
#include <type_traits>

#include "zetalab/common.hpp"

namespace zetalab::series {

// Compensated (Neumaier) accumulator: the correction term also absorbs the
// case where the addend dominates the running sum.
template <typename T>
class NeumaierSum {
public:
    void add(T x) {
        T t = sum_ + x;
        if constexpr (std::is_same_v<T, Complex>) {
            comp_ += Complex(branch(sum_.real(), x.real(), t.real()),
                             branch(sum_.imag(), x.imag(), t.imag()));
        } else {
            comp_ += branch(sum_, x, t);
        }
        sum_ = t;
    }
    T value() const { return sum_ + comp_; }

private:
    static double branch(double s, double x, double t) {
        return std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    }
    T sum_{};
    T comp_{};
};

namespace detail {
double accelerate_real(const std::function<double(long)>& a, double tol, long max_terms);
Complex accelerate_complex(const std::function<Complex(long)>& a, double tol,
                           long max_terms);
}  // namespace detail

// Cohen-Villegas-Zagier acceleration for sum_{k>=0} (-1)^k a(k), a(k) > 0
// decaying. Error after n terms ~ (3+sqrt(8))^(-n); n is grown until two
// successive levels agree within tol/2. Throws ToleranceNotMet if they never
// do within the term budget.
template <typename F>
auto accelerate_alternating(F&& a, double tol, long max_terms = 4000) {
    using R = std::invoke_result_t<F&, long>;
    if constexpr (std::is_same_v<R, Complex>)
        return detail::accelerate_complex(std::function<Complex(long)>(std::forward<F>(a)),
                                          tol, max_terms);
    else
        return detail::accelerate_real(std::function<double(long)>(std::forward<F>(a)),
                                       tol, max_terms);
}

}  // namespace zetalab::series
