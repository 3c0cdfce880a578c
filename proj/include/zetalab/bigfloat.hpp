#pragma once

#include <mpfr.h>

#include "zetalab/common.hpp"

namespace zetalab::big {

// RAII wrapper over a single mpfr_t with explicit binary precision. Only the
// operations the extended-precision series evaluators need are exposed; all
// arithmetic rounds to nearest and results carry the wider operand precision.
class Real {
  public:
    explicit Real(long prec);
    Real(double v, long prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    long precision() const;
    double to_double() const;
    bool abs_less(const Real& o) const;  // |*this| < |o|

    static Real pi(long prec);
    static Real zeta_int(unsigned long n, long prec);  // zeta(n), n >= 2

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& mul_si(long k);
    Real& mul_ui(unsigned long k);
    Real& div_ui(unsigned long k);
    Real operator-() const;
    Real abs() const;
    Real sqrt() const;

    friend Real operator+(Real a, const Real& b) { return a += b; }
    friend Real operator-(Real a, const Real& b) { return a -= b; }
    friend Real operator*(Real a, const Real& b) { return a *= b; }
    friend Real operator/(Real a, const Real& b) { return a /= b; }

  private:
    mpfr_t v_;
};

// Complex pair at shared precision; just enough for Pochhammer-style
// recurrences with a real coefficient stream.
struct BigComplex {
    Real re, im;

    BigComplex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(const Complex& z, long prec) : re(z.real(), prec), im(z.imag(), prec) {}

    BigComplex& operator+=(const BigComplex& o);
    BigComplex& operator*=(const BigComplex& o);
    BigComplex& scale(const Real& k);
    BigComplex& div_ui(unsigned long k);
    BigComplex reciprocal() const;  // 1/z via conjugate over |z|^2
    Real abs() const;
    Complex to_complex() const;
};

}  // namespace zetalab::big
