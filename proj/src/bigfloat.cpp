#include "zetalab/bigfloat.hpp"

#include <utility>

namespace zetalab::big {

namespace {
long require_prec(long prec) {
    if (prec < MPFR_PREC_MIN || prec > 1L << 24)
        throw DomainError("bigfloat: precision out of range");
    return prec;
}
}  // namespace

Real::Real(long prec) {
    mpfr_init2(v_, require_prec(prec));
    mpfr_set_zero(v_, 1);
}

Real::Real(double v, long prec) {
    mpfr_init2(v_, require_prec(prec));
    mpfr_set_d(v_, v, MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

long Real::precision() const { return mpfr_get_prec(v_); }

double Real::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

bool Real::abs_less(const Real& o) const { return mpfr_cmpabs(v_, o.v_) < 0; }

Real Real::pi(long prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::zeta_int(unsigned long n, long prec) {
    if (n < 2) throw DomainError("bigfloat: zeta_int needs n >= 2");
    Real r(prec);
    mpfr_zeta_ui(r.v_, n, MPFR_RNDN);
    return r;
}

namespace {
// widen the target before an in-place binary op so no precision is lost
void match_prec(mpfr_t a, const mpfr_t b) {
    if (mpfr_get_prec(b) > mpfr_get_prec(a)) {
        mpfr_prec_round(a, mpfr_get_prec(b), MPFR_RNDN);
    }
}
}  // namespace

Real& Real::operator+=(const Real& o) {
    match_prec(v_, o.v_);
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& o) {
    match_prec(v_, o.v_);
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& o) {
    match_prec(v_, o.v_);
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& o) {
    match_prec(v_, o.v_);
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
}

Real& Real::mul_si(long k) {
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real& Real::mul_ui(unsigned long k) {
    mpfr_mul_ui(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real& Real::div_ui(unsigned long k) {
    if (k == 0) throw DomainError("bigfloat: division by zero");
    mpfr_div_ui(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real Real::operator-() const {
    Real r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::abs() const {
    Real r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt() const {
    Real r(*this);
    mpfr_sqrt(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigComplex& BigComplex::operator+=(const BigComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

BigComplex& BigComplex::operator*=(const BigComplex& o) {
    Real nre = re * o.re - im * o.im;
    Real nim = re * o.im + im * o.re;
    re = std::move(nre);
    im = std::move(nim);
    return *this;
}

BigComplex& BigComplex::scale(const Real& k) {
    re *= k;
    im *= k;
    return *this;
}

BigComplex& BigComplex::div_ui(unsigned long k) {
    re.div_ui(k);
    im.div_ui(k);
    return *this;
}

BigComplex BigComplex::reciprocal() const {
    Real n = re * re + im * im;
    BigComplex r(re / n, (-im) / n);
    return r;
}

Real BigComplex::abs() const { return (re * re + im * im).sqrt(); }

Complex BigComplex::to_complex() const { return {re.to_double(), im.to_double()}; }

}  // namespace zetalab::big
