#pragma once

#include <vector>

#include "qforms/oracle.hpp"

namespace qf {

struct RationalPoint {
    Int h;
    Int k; // k > 0, gcd(h,k) = 1
    RationalPoint(Int hh, Int kk);
    Rat value() const { return rat(h, k); }
};

RationalPoint moebius_point(const Mat2& g, const RationalPoint& p);

// membership in Q-hat_{N,r} (N even) via exact 2-adic arithmetic
bool quantum_member(long N, long r, const RationalPoint& p);

// membership in Q_{a,b} of the weight-1/2 family G(a,b;tau)
bool for_quantum_member(long a, long b, const RationalPoint& p);

// G(a,b,c) = sum_{n<c} e((a n^2 + b n)/c)
Cnum gauss_sum(long a, long b, long c, long prec);

enum class GaussCase { none, case1, case2, case3 };
GaussCase gauss_vanishing(long a, long b, long c);

struct PeriodicSeq {
    long period = 1;
    std::vector<Cnum> values; // values[n mod period], n >= 0 indexing
    const Cnum& at(long n) const;
    Cnum mean_value() const;
    bool even_parity(const Real& tol) const; // chi(-n) = chi(n)
};

// gamma_{N,r} at the point h/k: period 2kN, weight doubled whenever the
// residues r and -r coincide mod N (r = 0 or N/2), so that
// Theta+ + (r/N) q^{r^2/2N} = (1/N) sum_{n>0} n gamma(n) e^{-t n^2/2N} holds.
PeriodicSeq gamma_seq(long N, long r, const RationalPoint& p, long prec);

// L(-m, chi) by the finite Hurwitz-Bernoulli formula
Cnum l_value_bernoulli(long m, const PeriodicSeq& chi);
// independent check: Abel limit of sum chi(n) n^m x^n as x -> 1^-
Cnum l_value_abel(long m, const PeriodicSeq& chi);

// a_n = (1/N)(-1)^n L(-2n-1, gamma_{N,r}) / n! (1/(2N))^n
std::vector<Cnum> asymptotic_coeffs(long N, long r, const RationalPoint& p, long n_max,
                                    long prec);

// (1/N) sum_{n>0} n gamma(n) e^{-t n^2 / 2N}  =  Theta+ + (r/N) q^{r^2/2N}
Cnum theta_plus_direct(long N, long r, const RationalPoint& p, const Real& t,
                       const PrecisionContext& ctx);

// Gamma(-1/2; x) for real x > 0
Real gamma_m12(const Real& x);

// nonholomorphic Eichler integral on the lower half plane, by the
// incomplete-gamma series
Cnum eichler_star(long N, long r, const Cnum& tau_lower, const PrecisionContext& ctx);
// the same object by direct quadrature of the defining integral
Cnum eichler_star_integral(long N, long r, const Cnum& tau_lower,
                           const PrecisionContext& ctx);
// cocycle integral r_x(tau) from the rational point x
Cnum cocycle_integral(long N, long r, const Rat& x, const Cnum& tau_lower,
                      const PrecisionContext& ctx);
// residual of the Lemma-6.6 identity at (gamma, tau)
Real cocycle_residual(long N, long r, const Mat2& g, const Cnum& tau_lower,
                      const PrecisionContext& ctx);

struct SlopeReport {
    std::vector<double> slopes_upper; // least-squares log-log slope after n0 terms
    std::vector<double> slopes_lower;
};

SlopeReport theta_limit_checks(long N, long r, const RationalPoint& p,
                               const std::vector<double>& t_list, long n0_max,
                               const PrecisionContext& ctx);

enum class RootRoute { warnaar, sum_of_tails, ajuo_r0 };

struct RootValue {
    Cnum value;        // finite evaluation of Theta_{3/2}(N, r) at e(h/k)
    RootRoute route;
    Real vs_limit;     // |value - radial limit|
    Real vs_lvalue;    // |a_0 - (value(r) + value(N-r))| consistency residual
};

// finite root-of-unity evaluation with the two independent cross-checks
RootValue root_of_unity_value(long N, long r, const RationalPoint& p,
                              const PrecisionContext& ctx);

// radial limit of Theta_{3/2}(N,r; h/k + it/2pi) by Richardson extrapolation
Cnum theta_radial_limit(long N, long r, const RationalPoint& p,
                        const PrecisionContext& ctx);

} // namespace qf
