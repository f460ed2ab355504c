#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "qforms/errors.hpp"

namespace qf {

using Int = mpz_class;
using Rat = mpq_class;

inline long lcm_ll(long a, long b) {
    Int g;
    mpz_gcd_ui(g.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>(b));
    Int l = Int(a) / g * b;
    if (!l.fits_slong_p())
        throw grid_overflow("lcm of exponent grids exceeds representable range");
    return l.get_si();
}

inline long gcd_ll(long a, long b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), Int(a).get_mpz_t(), Int(b).get_mpz_t());
    return g.get_si();
}

// mpq_class(p, q) does not canonicalize; always build rationals through this.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Exact floor/ceil of a rational.
inline Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

// Integer square root, rounded down.
inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Smallest integer >= sqrt(x) for rational x >= 0.
inline Int sqrt_ceil(const Rat& x) {
    if (x < 0) throw std::invalid_argument("sqrt_ceil of negative rational");
    Int c = ceil_rat(x);
    Int r = isqrt(c);
    while (r * r < c) ++r;
    return r;
}

inline Rat pow_rat(const Rat& base, long e) {
    Rat r(1);
    Rat b = base;
    long k = e < 0 ? -e : e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    if (e < 0) {
        if (r == 0) throw std::invalid_argument("pow_rat: zero base with negative exponent");
        r = 1 / r;
    }
    return r;
}

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

// Bernoulli numbers B_0..B_n (B_1 = -1/2 convention).
std::vector<Rat> bernoulli_numbers(unsigned long n);

// Bernoulli polynomial B_m(x) evaluated at rational x.
Rat bernoulli_poly(unsigned long m, const Rat& x);

// Parses "p/q" or "p" into an exact rational; rejects anything else (incl. decimals).
Rat parse_rational(const std::string& s);

std::string rat_str(const Rat& x);

// 2-adic valuation of a nonzero integer.
inline long ord2(const Int& n) {
    if (n == 0) throw std::invalid_argument("ord2(0) undefined");
    return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
}

// Kronecker symbol (a/n), full extension to all integers.
int kronecker(const Int& a, const Int& n);

} // namespace qf
