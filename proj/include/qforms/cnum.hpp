#pragma once

#include "qforms/real.hpp"

namespace qf {

// Complex numbers over Real. sqrt and fractional powers use the principal
// branch; roots of unity go through expi/e_of for exactness of the angle.
struct Cnum {
    Real re, im;

    Cnum() = default;
    Cnum(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    explicit Cnum(long prec) : re(prec), im(prec) {}

    static Cnum of(double r, double i, long prec) {
        return {Real::of(r, prec), Real::of(i, prec)};
    }
    static Cnum of(const Rat& r, long prec) { return {Real::of(r, prec), Real(prec)}; }

    long prec() const { return std::max(re.prec(), im.prec()); }

    friend Cnum operator+(const Cnum& a, const Cnum& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cnum operator-(const Cnum& a, const Cnum& b) { return {a.re - b.re, a.im - b.im}; }
    Cnum operator-() const { return {-re, -im}; }
    friend Cnum operator*(const Cnum& a, const Cnum& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cnum operator*(const Real& a, const Cnum& b) { return {a * b.re, a * b.im}; }
    friend Cnum operator/(const Cnum& a, const Cnum& b) {
        Real d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    Cnum& operator+=(const Cnum& b) { return *this = *this + b; }
    Cnum& operator-=(const Cnum& b) { return *this = *this - b; }
    Cnum& operator*=(const Cnum& b) { return *this = *this * b; }

    Cnum conj() const { return {re, -im}; }
    friend Real abs(const Cnum& a) { return hypot2(a.re, a.im); }
    friend Real arg(const Cnum& a) { return atan2r(a.im, a.re); }
};

inline Cnum cexp(const Cnum& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

inline Cnum clog(const Cnum& z) { return {log(abs(z)), arg(z)}; }

inline Cnum csqrt(const Cnum& z) {
    Real m = sqrt(abs(z));
    Real a = arg(z) * Real::of(Rat(1, 2), z.prec());
    return {m * cos(a), m * sin(a)};
}

// principal z^p for rational p
inline Cnum cpow(const Cnum& z, const Rat& p) {
    long prec = z.prec();
    Cnum l = clog(z);
    return cexp(Cnum{Real::of(p, prec), Real(prec)} * l);
}

inline Cnum cinv(const Cnum& z) {
    Real d = z.re * z.re + z.im * z.im;
    return {z.re / d, -z.im / d};
}

// e(x) = exp(2 pi i x) for real-typed x
inline Cnum expi2pi(const Real& x) {
    Real t = Real::of(2L, x.prec()) * Real::pi(x.prec()) * x;
    return {cos(t), sin(t)};
}

// exp(2 pi i t) for complex t
inline Cnum expi2pi_c(const Cnum& t) {
    Real damp = exp(-Real::of(2L, t.prec()) * Real::pi(t.prec()) * t.im);
    Cnum r = expi2pi(t.re);
    return {r.re * damp, r.im * damp};
}

inline Cnum e_of(const Rat& x, long prec) { return expi2pi(Real::of(x, prec)); }

// i^k
inline Cnum ipow_unit(int k, long prec) {
    int m = ((k % 4) + 4) % 4;
    Real one = Real::of(1L, prec), zero(prec);
    switch (m) {
    case 0: return {one, zero};
    case 1: return {zero, one};
    case 2: return {-one, zero};
    default: return {zero, -one};
    }
}

} // namespace qf
