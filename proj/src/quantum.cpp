#include "qforms/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qf {

namespace {

Rat frac_part(const Rat& x) { return x - Rat(floor_rat(x)); }

bool is_integer(const Rat& x) { return x.get_den() == 1; }

// order of the root of unity e(alpha)
long root_order(const Rat& alpha) {
    Rat f = frac_part(alpha);
    if (f == 0) return 1;
    if (!f.get_den().fits_slong_p()) throw grid_overflow("root order too large");
    return f.get_den().get_si();
}

// dual complex numbers a + eps b for first derivatives in A
struct DualC {
    Cnum v, d;
    DualC(Cnum vv, Cnum dd) : v(std::move(vv)), d(std::move(dd)) {}
    static DualC constant(const Cnum& c, long prec) { return {c, Cnum(prec)}; }
    friend DualC operator+(const DualC& a, const DualC& b) { return {a.v + b.v, a.d + b.d}; }
    friend DualC operator*(const DualC& a, const DualC& b) {
        return {a.v * b.v, a.v * b.d + a.d * b.v};
    }
    friend DualC operator/(const DualC& a, const DualC& b) {
        Cnum iv = cinv(b.v);
        return {a.v * iv, (a.d - a.v * iv * b.d) * iv};
    }
};

} // namespace

RationalPoint::RationalPoint(Int hh, Int kk) : h(std::move(hh)), k(std::move(kk)) {
    if (k == 0) throw std::invalid_argument("rational point with zero denominator");
    if (k < 0) {
        k = -k;
        h = -h;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), h.get_mpz_t(), k.get_mpz_t());
    if (g > 1) {
        h /= g;
        k /= g;
    }
}

RationalPoint moebius_point(const Mat2& g, const RationalPoint& p) {
    Int num = g.a * p.h + g.b * p.k;
    Int den = g.c * p.h + g.d * p.k;
    if (den == 0) throw usage_error("moebius image is the cusp at infinity");
    return RationalPoint(num, den);
}

bool quantum_member(long N, long r, const RationalPoint& p) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("quantum_member: N must be even");
    long rr = ((r % N) + N) % N;
    long o2k = ord2(p.k);
    long o2N = ord2(Int(N));
    if (rr % (N / 2) != 0) {
        Int half(N / 2);
        return p.k % half == 0 && o2k == o2N - 1;
    }
    if (rr == N / 2) return o2k > o2N;
    return o2k == o2N; // rr == 0
}

bool for_quantum_member(long a, long b, const RationalPoint& p) {
    if (a <= 0 || gcd_ll(a, b) != 1) throw std::invalid_argument("Q_{a,b} needs (a,b)=1, a>0");
    if (!(p.h > 0)) return false;
    Int bb(b);
    if ((2 * p.h) % bb != 0) return false;
    if (p.h % bb == 0) return false;
    if ((p.k - a) % bb != 0) return false;
    return p.k >= a;
}

Cnum gauss_sum(long a, long b, long c, long prec) {
    if (c < 1) throw std::invalid_argument("gauss_sum: c >= 1 required");
    std::vector<Cnum> roots;
    roots.reserve(static_cast<size_t>(c));
    for (long j = 0; j < c; ++j) roots.push_back(e_of(rat(j, c), prec));
    Cnum acc(prec);
    for (long n = 0; n < c; ++n) {
        Int idx = (Int(a) * n * n + Int(b) * n) % c;
        long i = idx.get_si();
        if (i < 0) i += c;
        acc += roots[static_cast<size_t>(i)];
    }
    return acc;
}

GaussCase gauss_vanishing(long a, long b, long c) {
    long g = gcd_ll(a, c);
    long bb = ((b % c) + c) % c;
    if (g > 1 && bb % g != 0) return GaussCase::case1;
    if (c % 4 == 0 && b % 2 != 0) return GaussCase::case2;
    // the b = 0 clause needs the reduced modulus: G(a,0,c) = g G(a/g,0,c/g)
    if (bb == 0 && (c / std::max(g, 1L)) % 4 == 2) return GaussCase::case3;
    return GaussCase::none;
}

const Cnum& PeriodicSeq::at(long n) const {
    long m = ((n % period) + period) % period;
    return values[static_cast<size_t>(m)];
}

Cnum PeriodicSeq::mean_value() const {
    long prec = values.empty() ? 128 : values.front().prec();
    Cnum acc(prec);
    for (auto& v : values) acc += v;
    return acc * Cnum{Real::of(1L, prec) / Real::of(period, prec), Real(prec)};
}

bool PeriodicSeq::even_parity(const Real& tol) const {
    for (long n = 0; n < period; ++n)
        if (!(abs(at(n) - at(-n)) < tol)) return false;
    return true;
}

PeriodicSeq gamma_seq(long N, long r, const RationalPoint& p, long prec) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("gamma_seq: N must be even");
    long rr = ((r % N) + N) % N;
    if (!p.k.fits_slong_p()) throw grid_overflow("gamma_seq: k too large");
    long k = p.k.get_si();
    long period = 2 * k * N;
    if (period > 2000000) throw grid_overflow("gamma_seq: period too large");
    PeriodicSeq seq;
    seq.period = period;
    seq.values.reserve(static_cast<size_t>(period));
    Rat h(p.h);
    for (long n = 0; n < period; ++n) {
        int w = 0;
        if (n % N == rr) ++w;
        if (n % N == ((N - rr) % N)) ++w;
        if (w == 0) {
            seq.values.emplace_back(prec);
            continue;
        }
        Rat angle = h * rat(n * n, 2 * k * N);
        seq.values.push_back(Cnum{Real::of(static_cast<long>(w), prec), Real(prec)} *
                             e_of(angle, prec));
    }
    if (quantum_member(N, rr, p)) {
        Real tol = Real::pow2(-prec + 40, prec);
        if (!(abs(seq.mean_value()) < tol))
            throw mean_value_nonzero("gamma sequence mean is nonzero on a quantum-set point");
    }
    return seq;
}

Cnum l_value_bernoulli(long m, const PeriodicSeq& chi) {
    long prec = chi.values.front().prec();
    long k = chi.period;
    // L(-m, chi) = -k^m/(m+1) sum_{n=1}^{k} chi(n) B_{m+1}(n/k)
    Cnum acc(prec);
    for (long n = 1; n <= k; ++n) {
        Rat b = bernoulli_poly(static_cast<unsigned long>(m + 1), rat(n, k));
        acc += Cnum{Real::of(b, prec), Real(prec)} * chi.at(n);
    }
    Rat scale = -pow_rat(Rat(k), m) / Rat(m + 1);
    return Cnum{Real::of(scale, prec), Real(prec)} * acc;
}

namespace {

using Taylor = std::vector<Cnum>;

Taylor taylor_mul(const Taylor& a, const Taylor& b) {
    size_t L = a.size();
    long prec = a.front().prec();
    Taylor c(L, Cnum(prec));
    for (size_t i = 0; i < L; ++i)
        for (size_t j = 0; i + j < L; ++j) c[i + j] += a[i] * b[j];
    return c;
}

Taylor taylor_inv(const Taylor& a) {
    size_t L = a.size();
    long prec = a.front().prec();
    Taylor b(L, Cnum(prec));
    Cnum i0 = cinv(a[0]);
    b[0] = i0;
    for (size_t k = 1; k < L; ++k) {
        Cnum s(prec);
        for (size_t j = 1; j <= k; ++j) s += a[j] * b[k - j];
        b[k] = -(s * i0);
    }
    return b;
}

// x d/dx on a Taylor jet about x0 (x = x0 + eps)
Taylor taylor_xd(const Taylor& f, const Cnum& x0) {
    size_t L = f.size();
    long prec = x0.prec();
    Taylor df(L, Cnum(prec));
    for (size_t j = 1; j < L; ++j)
        df[j - 1] = Cnum{Real::of(static_cast<long>(j), prec), Real(prec)} * f[j];
    Taylor x(L, Cnum(prec));
    x[0] = x0;
    if (L > 1) x[1] = Cnum{Real::of(1L, prec), Real(prec)};
    return taylor_mul(x, df);
}

Cnum neville(const std::vector<Real>& xs, std::vector<Cnum> ys) {
    size_t n = xs.size();
    long prec = xs.front().prec();
    for (size_t level = 1; level < n; ++level) {
        for (size_t i = 0; i + level < n; ++i) {
            Real denom = xs[i] - xs[i + level];
            ys[i] = (Cnum{-xs[i + level], Real(prec)} * ys[i] + Cnum{xs[i], Real(prec)} * ys[i + 1]) *
                    Cnum{Real::of(1L, prec) / denom, Real(prec)};
        }
    }
    return ys[0];
}

} // namespace

Cnum l_value_abel(long m, const PeriodicSeq& chi) {
    long prec = std::max(chi.values.front().prec(), 320L);
    long k = chi.period;
    size_t L = static_cast<size_t>(m + 1);
    std::vector<Real> eps_nodes;
    std::vector<Cnum> vals;
    for (long j = 3; j <= 13; ++j) {
        Real eps = Real::pow2(-j, prec);
        Cnum x0{Real::of(1L, prec) - eps, Real(prec)};
        Taylor x(L, Cnum(prec));
        x[0] = x0;
        if (L > 1) x[1] = Cnum{Real::of(1L, prec), Real(prec)};
        Taylor xn(L, Cnum(prec));
        xn[0] = Cnum{Real::of(1L, prec), Real(prec)};
        Taylor num(L, Cnum(prec));
        for (long n = 1; n <= k; ++n) {
            xn = taylor_mul(xn, x);
            for (size_t i = 0; i < L; ++i) num[i] += chi.at(n) * xn[i];
        }
        Taylor den(L, Cnum(prec));
        den[0] = Cnum{Real::of(1L, prec), Real(prec)};
        for (size_t i = 0; i < L; ++i) den[i] -= xn[i]; // xn holds x^k now
        Taylor A = taylor_mul(num, taylor_inv(den));
        for (long it = 0; it < m; ++it) A = taylor_xd(A, x0);
        eps_nodes.push_back(eps);
        vals.push_back(A[0]);
    }
    return neville(eps_nodes, vals);
}

std::vector<Cnum> asymptotic_coeffs(long N, long r, const RationalPoint& p, long n_max,
                                    long prec) {
    PeriodicSeq g = gamma_seq(N, r, p, prec);
    std::vector<Cnum> out;
    out.reserve(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) {
        Cnum L = l_value_bernoulli(2 * n + 1, g);
        Rat scale =
            pow_rat(rat(1, 2 * N), n) / (Rat(N) * Rat(factorial(static_cast<unsigned long>(n))));
        if (n % 2 != 0) scale = -scale;
        out.push_back(Cnum{Real::of(scale, prec), Real(prec)} * L);
    }
    return out;
}

Cnum theta_plus_direct(long N, long r, const RationalPoint& p, const Real& t,
                       const PrecisionContext& ctx) {
    long prec = ctx.bits;
    PeriodicSeq g = gamma_seq(N, r, p, prec);
    Cnum acc(prec);
    Real cutoff = ctx.tolerance * Real::of(Rat(1, 1024), prec);
    Real twoN = Real::of(2 * N, prec);
    for (long n = 1;; ++n) {
        Real nn = Real::of(n, prec);
        Real damp = exp(-(t * nn * nn) / twoN);
        if (nn * damp * Real::of(2L, prec) < cutoff && n > 2 * N) break;
        if (n > 10000000) throw slow_decay("theta_plus_direct: tail does not certify");
        acc += Cnum{nn * damp, Real(prec)} * g.at(n);
    }
    return acc * Cnum{Real::of(1L, prec) / Real::of(N, prec), Real(prec)};
}

Real gamma_m12(const Real& x) {
    long prec = x.prec();
    Real sx = sqrt(x);
    Real two = Real::of(2L, prec);
    return two * exp(-x) / sx - two * sqrt(Real::pi(prec)) * erfc(sx);
}

namespace {

int residue_mult(long N, long r, long n) {
    long rr = ((r % N) + N) % N;
    long m = ((n % N) + N) % N;
    int w = 0;
    if (m == rr) ++w;
    if (m == (N - rr) % N) ++w;
    return w;
}

} // namespace

Cnum eichler_star(long N, long r, const Cnum& tau_lower, const PrecisionContext& ctx) {
    long prec = ctx.bits;
    if (!(tau_lower.im.sign() < 0))
        throw std::invalid_argument("eichler_star needs Im tau < 0");
    Real y = -tau_lower.im;
    Real cutoff = ctx.tolerance * Real::of(Rat(1, 1024), prec);
    Real pi = Real::pi(prec);
    Cnum acc(prec);
    for (long n = 1;; ++n) {
        Real nn = Real::of(n, prec);
        Real x = Real::of(4L, prec) * pi * y * nn * nn / Real::of(2 * N, prec);
        Real mag = nn * gamma_m12(x) * exp(x / Real::of(2L, prec));
        if (mag * Real::of(3L, prec) < cutoff && n > 2 * N) break;
        if (n > 10000000) throw slow_decay("eichler_star: tail does not certify");
        int w = residue_mult(N, r, n);
        if (w == 0) continue;
        Cnum qpow = expi2pi_c(Real::of(rat(n * n, 2 * N), prec) * tau_lower);
        acc += Cnum{Real::of(static_cast<long>(w), prec) * nn * gamma_m12(x), Real(prec)} * qpow;
    }
    Real pref = -Real::of(1L, prec) / (Real::of(2 * N, prec) * sqrt(pi));
    return Cnum{pref, Real(prec)} * acc;
}

namespace {

// exp-sinh quadrature over (0, infinity) with early termination on both tails
Cnum exp_sinh_integral(const std::function<Cnum(const Real&)>& f, long prec,
                       const Real& tol) {
    Real half_pi = Real::pi(prec) * Real::of(Rat(1, 2), prec);
    auto pass = [&](double h, long jmax) {
        Cnum acc(prec);
        for (int dir = 0; dir < 2; ++dir) {
            long misses = 0;
            long j = dir == 0 ? 0 : -1;
            for (; std::labs(j) <= jmax; j += (dir == 0 ? 1 : -1)) {
                Real jh = Real::of(h * static_cast<double>(j), prec);
                Real sh = (exp(jh) - exp(-jh)) * Real::of(Rat(1, 2), prec);
                Real ch = (exp(jh) + exp(-jh)) * Real::of(Rat(1, 2), prec);
                Real s = exp(half_pi * sh);
                Real w = half_pi * ch * s * Real::of(h, prec);
                Cnum term = Cnum{w, Real(prec)} * f(s);
                acc += term;
                if (abs(term) < tol * Real::of(Rat(1, 64), prec)) {
                    if (++misses >= 3) break;
                } else {
                    misses = 0;
                }
            }
        }
        return acc;
    };
    Cnum prev = pass(0.5, 60);
    for (double h : {0.25, 0.125, 0.0625}) {
        Cnum cur = pass(h, static_cast<long>(60 / h));
        if (abs(cur - prev) < tol) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace

Cnum eichler_star_integral(long N, long r, const Cnum& tau_lower,
                           const PrecisionContext& ctx) {
    long prec = ctx.bits;
    if (!(tau_lower.im.sign() < 0))
        throw std::invalid_argument("eichler_star_integral needs Im tau < 0");
    Real y = -tau_lower.im;
    Cnum taubar = tau_lower.conj();
    auto integrand = [&](const Real& s) {
        Cnum z{taubar.re, taubar.im + s};
        Cnum th = eval_theta_tilde(N, Rat(r), 0, z, ctx);
        Cnum base{Real(prec), Real::of(2L, prec) * y + s}; // i (2y + s)
        return th * cpow(base, rat(-3, 2));
    };
    Cnum val = exp_sinh_integral(integrand, prec, ctx.tolerance);
    // series normalization: i * (-1/(2 pi sqrt(iN))) * (i ds) = +1/(2 pi sqrt(iN)) ds
    Cnum sqrtiN = csqrt(Cnum{Real(prec), Real::of(N, prec)});
    Cnum pref = cinv(Cnum{Real::of(2L, prec) * Real::pi(prec), Real(prec)} * sqrtiN);
    return pref * val;
}

Cnum cocycle_integral(long N, long r, const Rat& x, const Cnum& tau_lower,
                      const PrecisionContext& ctx) {
    long prec = ctx.bits;
    if (!(tau_lower.im.sign() < 0))
        throw std::invalid_argument("cocycle_integral needs Im tau < 0");
    Real xr = Real::of(x, prec);
    Real floor_s = Real::pow2(-ctx.bits / 3, prec);
    auto integrand = [&](const Real& s) {
        if (s < floor_s) return Cnum(prec); // theta decays exponentially into the cusp
        Cnum z{xr, s};
        Cnum th = eval_theta_tilde(N, Rat(r), 0, z, ctx);
        Cnum base = z - tau_lower;
        return th * cpow(base, rat(-3, 2));
    };
    Cnum val = exp_sinh_integral(integrand, prec, ctx.tolerance);
    Cnum sqrtiN = csqrt(Cnum{Real(prec), Real::of(N, prec)});
    Cnum pref = -cinv(Cnum{Real::of(2L, prec) * Real::pi(prec), Real(prec)} * sqrtiN);
    return pref * val;
}

Real cocycle_residual(long N, long r, const Mat2& g, const Cnum& tau_lower,
                      const PrecisionContext& ctx) {
    long prec = ctx.bits;
    if (g.c == 0) throw std::invalid_argument("cocycle_residual needs c != 0");
    if (!(g.c % (2 * N) == 0 && (g.a - 1) % (2 * N) == 0 && (g.d - 1) % (2 * N) == 0))
        throw std::invalid_argument("cocycle_residual needs gamma in Gamma_1(2N)");
    Cnum gt = moebius(g, tau_lower);
    Cnum j = Cnum::of(Rat(g.c), prec) * tau_lower + Cnum::of(Rat(g.d), prec);
    Cnum lhs = eichler_star(N, r, gt, ctx) * cinv(chi_multiplier(N, r, g, prec)) *
                   cpow(j, rat(-3, 2)) -
               eichler_star(N, r, tau_lower, ctx);
    Cnum rhs = cocycle_integral(N, r, rat(-g.d, g.c), tau_lower, ctx);
    return abs(lhs - rhs);
}

SlopeReport theta_limit_checks(long N, long r, const RationalPoint& p,
                               const std::vector<double>& t_list, long n0_max,
                               const PrecisionContext& ctx) {
    long prec = ctx.bits;
    auto a = asymptotic_coeffs(N, r, p, n0_max, prec);
    Rat hk = p.value();
    std::vector<std::vector<double>> err_up(static_cast<size_t>(n0_max)),
        err_dn(static_cast<size_t>(n0_max));
    std::vector<double> logt;
    for (double td : t_list) {
        Real t = Real::of(td, prec);
        logt.push_back(std::log(td));
        Cnum up = theta_plus_direct(N, r, p, t, ctx);
        Real y = t / (Real::of(2L, prec) * Real::pi(prec));
        Cnum tau_lo{Real::of(hk, prec), -y};
        Cnum dn = eichler_star(N, r, tau_lo, ctx);
        Cnum acc_up(prec), acc_dn(prec);
        for (long n0 = 1; n0 <= n0_max; ++n0) {
            Real tn = pow_si(t, n0 - 1);
            Cnum term = a[static_cast<size_t>(n0 - 1)] * Cnum{tn, Real(prec)};
            acc_up += term;
            acc_dn += ((n0 - 1) % 2 != 0) ? -term : term; // (-t)^n signs
            err_up[static_cast<size_t>(n0 - 1)].push_back(abs(up - acc_up).d());
            err_dn[static_cast<size_t>(n0 - 1)].push_back(abs(dn - acc_dn).d());
        }
    }
    auto slope = [&](const std::vector<double>& errs) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        size_t n = errs.size();
        for (size_t i = 0; i < n; ++i) {
            double lx = logt[i], ly = std::log(std::max(errs[i], 1e-300));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        double dn = static_cast<double>(n) * sxx - sx * sx;
        return (static_cast<double>(n) * sxy - sx * sy) / dn;
    };
    SlopeReport rep;
    for (long n0 = 1; n0 <= n0_max; ++n0) {
        rep.slopes_upper.push_back(slope(err_up[static_cast<size_t>(n0 - 1)]));
        rep.slopes_lower.push_back(slope(err_dn[static_cast<size_t>(n0 - 1)]));
    }
    return rep;
}

Cnum theta_radial_limit(long N, long r, const RationalPoint& p,
                        const PrecisionContext& ctx) {
    long prec = std::max(ctx.bits, 320L);
    long rr = ((r % N) + N) % N;
    Rat hk = p.value();
    std::vector<Real> nodes;
    std::vector<Cnum> vals;
    for (long j = 0; j <= 7; ++j) {
        Real t = Real::of(0.1, prec) * Real::pow2(-j, prec);
        Cnum acc(prec);
        for (long n = 0;; ++n) {
            Rat gshift = Rat(n) + rat(rr, N);
            Real coef = Real::of(gshift, prec);
            Real damp = exp(-(t * coef * coef * Real::of(N, prec) / Real::of(2L, prec)));
            if (abs(coef) * damp < ctx.tolerance * Real::of(Rat(1, 1024), prec) && n > N) break;
            if (n > 10000000) throw slow_decay("theta_radial_limit: slow tail");
            Rat angle = hk * rat(N, 2) * gshift * gshift;
            acc += Cnum{coef * damp, Real(prec)} * e_of(angle, prec);
        }
        nodes.push_back(t);
        vals.push_back(acc);
    }
    return neville(nodes, vals);
}

namespace {

// 1 - e(angle) with exact zero detection on the rational angle
Cnum one_minus_root(const Rat& angle, long prec, bool* exact_zero) {
    if (is_integer(angle)) {
        if (exact_zero) *exact_zero = true;
        return Cnum(prec);
    }
    if (exact_zero) *exact_zero = false;
    return Cnum{Real::of(1L, prec), Real(prec)} - e_of(angle, prec);
}

// Warnaar route for N/2 not dividing r: derivative trick with dual numbers,
// terminating at the first vanishing (q^{N/2}; q^N) factor.
Cnum warnaar_value(long N, long r, const RationalPoint& p, const PrecisionContext& ctx) {
    long prec = ctx.bits;
    Rat hk = rat(p.h, p.k);
    auto qang = [&](const Rat& expo) { return frac_part(hk * expo); };

    if (!p.k.fits_slong_p()) throw grid_overflow("warnaar: k too large");
    long kk = p.k.get_si();

    // side condition: (q^r; q^{N/2})_inf stays away from zero
    for (long j = 0; j <= 4 * kk; ++j)
        if (is_integer(qang(Rat(r) + rat(N, 2) * j)))
            throw route_unavailable("warnaar: (q^{2r/N})_inf side condition fails");

    // terminating index from (q^{N/2}; q^N)_n
    long nmax = -1;
    for (long j = 0; j <= 4 * kk; ++j) {
        if (is_integer(qang(rat(N, 2) * (2 * j + 1)))) {
            nmax = j;
            break;
        }
    }
    if (nmax < 0) throw route_unavailable("warnaar: series does not terminate here");

    Cnum A0 = -e_of(qang(Rat(r) - rat(N, 2)), prec);
    DualC A{A0, Cnum{Real::of(1L, prec), Real(prec)}};
    DualC sum = DualC::constant(Cnum(prec), prec);
    DualC num = DualC::constant(Cnum{Real::of(1L, prec), Real(prec)}, prec);
    for (long n = 0; n <= nmax; ++n) {
        if (n > 0) {
            bool zero = false;
            Rat ang = qang(rat(N, 2) * (2 * n - 1));
            Cnum f1 = one_minus_root(ang, prec, &zero);
            Cnum qq = e_of(ang, prec);
            DualC fac2{Cnum{Real::of(1L, prec), Real(prec)} - A.v * qq, -qq};
            num = num * DualC::constant(f1, prec) * fac2;
        }
        // (A q^{N/2})^n
        Cnum qh = e_of(qang(rat(N, 2)), prec);
        DualC Aq{A.v * qh, qh};
        DualC pw = DualC::constant(Cnum{Real::of(1L, prec), Real(prec)}, prec);
        for (long j = 0; j < n; ++j) pw = pw * Aq;
        // (-A q^{N/2}; q^{N/2})_{2n+1}
        DualC den = DualC::constant(Cnum{Real::of(1L, prec), Real(prec)}, prec);
        for (long j = 0; j <= 2 * n; ++j) {
            Cnum qj = e_of(qang(rat(N, 2) * (1 + j)), prec);
            DualC f{Cnum{Real::of(1L, prec), Real(prec)} + A.v * qj, qj};
            if (abs(f.v) < ctx.tolerance)
                throw route_unavailable("warnaar: denominator factor vanishes");
            den = den * f;
        }
        sum = sum + num * pw / den;
    }
    Cnum w = Cnum{Real::of(rat(r, N), prec), Real(prec)} * sum.v + A0 * sum.d;
    return e_of(frac_part(hk * rat(r * r, 2 * N)), prec) * w;
}

// sum-of-tails route at r = N/2: eta-quotient piece vanishes at the cusp,
// the tail piece terminates at even-order roots.
Cnum sot_value(long N, const RationalPoint& p, const PrecisionContext& ctx) {
    long prec = ctx.bits;
    Rat hk = rat(p.h, p.k);
    Rat alpha = frac_part(hk * Rat(N)); // angle of Q := q^N
    long ord = root_order(alpha);
    if (ord % 2 != 0) throw route_unavailable("sum-of-tails: even-order root required");
    Cnum acc(prec);
    Cnum num{Real::of(1L, prec), Real(prec)};
    for (long n = 0; n < ord / 2; ++n) {
        if (n > 0) {
            bool z = false;
            Cnum f = one_minus_root(frac_part(alpha * Rat(2 * n)), prec, &z);
            num = z ? Cnum(prec) : num * f;
        }
        Cnum den{Real::of(1L, prec), Real(prec)};
        for (long j = 0; j <= n; ++j) {
            bool z = false;
            Cnum f = one_minus_root(frac_part(alpha * Rat(2 * j + 1)), prec, &z);
            if (z) throw route_unavailable("sum-of-tails: denominator vanishes");
            den = den * f;
        }
        acc += num / den;
    }
    return e_of(frac_part(hk * rat(N, 8)), prec) * (-acc);
}

// terminating route at r = 0 via the alternating sum-of-tails identity
Cnum ajuo_value(long N, const RationalPoint& p, const PrecisionContext& ctx) {
    long prec = ctx.bits;
    Rat hk = rat(p.h, p.k);
    Rat alpha = frac_part(hk * rat(N, 2) + rat(1, 2)); // angle of -Q, Q := q^{N/2}
    long ord = root_order(alpha);
    if (ord % 2 == 0) throw route_unavailable("r=0 route: odd-order root required");
    Cnum acc(prec);
    Cnum num{Real::of(1L, prec), Real(prec)};
    Cnum den{Real::of(1L, prec), Real(prec)};
    for (long n = 0; n < ord; ++n) {
        if (n > 0) {
            bool z = false;
            Cnum f = one_minus_root(frac_part(alpha * Rat(n)), prec, &z);
            num = z ? Cnum(prec) : num * f;
            Cnum g = Cnum{Real::of(1L, prec), Real(prec)} + e_of(frac_part(alpha * Rat(n)), prec);
            if (abs(g) < ctx.tolerance)
                throw route_unavailable("r=0 route: denominator vanishes");
            den = den * g;
        }
        acc += num / den;
    }
    return (-acc) * Cnum{Real::of(rat(1, 4), prec), Real(prec)};
}

Cnum finite_value(long N, long r, const RationalPoint& p, const PrecisionContext& ctx,
                  RootRoute* route_out) {
    long rr = ((r % N) + N) % N;
    if (rr % (N / 2) != 0) {
        if (route_out) *route_out = RootRoute::warnaar;
        return warnaar_value(N, rr, p, ctx);
    }
    if (rr == N / 2) {
        if (route_out) *route_out = RootRoute::sum_of_tails;
        return sot_value(N, p, ctx);
    }
    if (route_out) *route_out = RootRoute::ajuo_r0;
    return ajuo_value(N, p, ctx);
}

} // namespace

RootValue root_of_unity_value(long N, long r, const RationalPoint& p,
                              const PrecisionContext& ctx) {
    long prec = ctx.bits;
    long rr = ((r % N) + N) % N;
    if (!quantum_member(N, rr, p))
        throw route_unavailable("point is outside the quantum set for this (N, r)");
    RootValue out{Cnum(prec), RootRoute::warnaar, Real(prec), Real(prec)};
    out.value = finite_value(N, rr, p, ctx, &out.route);

    Cnum limit = theta_radial_limit(N, rr, p, ctx);
    out.vs_limit = abs(out.value - limit);

    Cnum partner = (rr == 0 || rr == N / 2) ? out.value
                                            : finite_value(N, (N - rr) % N, p, ctx, nullptr);
    Cnum a0 = asymptotic_coeffs(N, rr, p, 0, prec)[0];
    out.vs_lvalue = abs(a0 - (out.value + partner));
    return out;
}

} // namespace qf
