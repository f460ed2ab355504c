#pragma once

#include <vector>

#include "qforms/qseries.hpp"

namespace qf {

// Truncated Laurent series in the scaled elliptic variable x = 2*pi*i*z (or
// x = 2*pi*i*w about a shifted center) whose coefficients are QSeries.
// Represents sum_{j >= lead} c[j-lead] x^j with coefficients at x-powers
// >= xtrunc unspecified.
class ZSeries {
public:
    ZSeries() = default;
    ZSeries(long lead, std::vector<QSeries> coeffs, long xtrunc);

    static ZSeries zero_to(long xtrunc) { return ZSeries(0, {}, xtrunc); }
    static ZSeries constant(const QSeries& c, long xtrunc);
    static ZSeries x_power(long k, long xtrunc); // the monomial x^k

    long lead() const { return lead_; }
    long xtrunc() const { return xtrunc_; }
    const QSeries& coeff(long j) const; // coefficient of x^j
    bool in_range(long j) const { return j >= lead_ && j < xtrunc_; }

    ZSeries operator-() const;
    friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
    friend ZSeries operator*(const ZSeries& a, const ZSeries& b);

    ZSeries scaled(const QSeries& c) const;
    ZSeries scaled(const Rat& c) const;
    ZSeries shifted_x(long k) const; // multiply by x^k

    // Multiplicative inverse; the x-leading QSeries coefficient must be
    // invertible.
    ZSeries inverse() const;
    ZSeries pow(long e) const;

    ZSeries dx() const;   // d/dx (equals D_zeta on these expansions)
    ZSeries dq() const;   // q d/dq, coefficientwise
    ZSeries heat(long n_index) const; // 2*n_index*Dq + d^2/dx^2

    // drops exact-zero leading coefficients
    ZSeries& normalize();

    bool even_in_x(const Rat& q_order) const;
    bool odd_in_x(const Rat& q_order) const;

private:
    long lead_ = 0;
    std::vector<QSeries> c_;
    long xtrunc_ = 0;
    static const QSeries& zero_series();
};

// Expansion of theta(z;tau) about z = 0 as i * R(x) with R real:
// R = x eta^3 exp(-2 sum_k G_{2k} x^{2k}/(2k)!). The unit i is left to the
// caller (coefficients stay rational).
ZSeries theta_z0_real(long x_order, const Rat& q_order);

// theta(w + 1/2; tau) about w = 0, built from the triple product with
// zeta -> -zeta; genuinely real-rational, even in x, leading term -2q^{1/8}.
ZSeries theta_half(long x_order, const Rat& q_order);

// Bilateral-sum routes (independent of the product/exp formulas); used as
// cross-check oracles.
ZSeries theta_z0_real_bilateral(long x_order, const Rat& q_order);
ZSeries theta_half_bilateral(long x_order, const Rat& q_order);

} // namespace qf
