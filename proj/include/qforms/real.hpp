#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "qforms/rational.hpp"

namespace qf {

// Value-semantic wrapper over mpfr_t. Results carry the larger operand
// precision; rounding is to nearest.
class Real {
public:
    Real() { mpfr_init2(v_, 128); mpfr_set_zero(v_, 1); }
    explicit Real(long prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(double x, long prec) {
        Real r(prec);
        mpfr_set_d(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(long x, long prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const Rat& x, long prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Int& x, long prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real pi(long prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real pow2(long e, long prec) { // 2^e
        Real r(prec);
        mpfr_set_si(r.v_, 1, MPFR_RNDN);
        mpfr_mul_2si(r.v_, r.v_, e, MPFR_RNDN);
        return r;
    }

    long prec() const { return mpfr_get_prec(v_); }
    double d() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

#define QF_REAL_BINOP(op, fn)                                            \
    friend Real operator op(const Real& a, const Real& b) {              \
        Real r(std::max(a.prec(), b.prec()));                            \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                                 \
        return r;                                                        \
    }
    QF_REAL_BINOP(+, mpfr_add)
    QF_REAL_BINOP(-, mpfr_sub)
    QF_REAL_BINOP(*, mpfr_mul)
    QF_REAL_BINOP(/, mpfr_div)
#undef QF_REAL_BINOP

    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }

#define QF_REAL_FN(name, fn)                                             \
    friend Real name(const Real& a) {                                    \
        Real r(a.prec());                                                \
        fn(r.v_, a.v_, MPFR_RNDN);                                       \
        return r;                                                        \
    }
    QF_REAL_FN(abs, mpfr_abs)
    QF_REAL_FN(sqrt, mpfr_sqrt)
    QF_REAL_FN(exp, mpfr_exp)
    QF_REAL_FN(log, mpfr_log)
    QF_REAL_FN(sin, mpfr_sin)
    QF_REAL_FN(cos, mpfr_cos)
    QF_REAL_FN(erfc, mpfr_erfc)
    QF_REAL_FN(floorr, mpfr_rint_floor)
    QF_REAL_FN(roundr, mpfr_rint_round)
#undef QF_REAL_FN

    friend Real atan2r(const Real& y, const Real& x) {
        Real r(std::max(y.prec(), x.prec()));
        mpfr_atan2(r.v_, y.raw(), x.raw(), MPFR_RNDN);
        return r;
    }
    friend Real pow_si(const Real& a, long e) {
        Real r(a.prec());
        mpfr_pow_si(r.v_, a.raw(), e, MPFR_RNDN);
        return r;
    }
    friend Real hypot2(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_hypot(r.v_, a.raw(), b.raw(), MPFR_RNDN);
        return r;
    }
    friend Real mul_2si(const Real& a, long e) {
        Real r(a.prec());
        mpfr_mul_2si(r.v_, a.raw(), e, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    std::string str(int digits = 20) const {
        char* s = nullptr;
        mpfr_asprintf(&s, "%.*Rg", digits, v_);
        std::string out(s);
        mpfr_free_str(s);
        return out;
    }

private:
    mpfr_t v_;
};

} // namespace qf
