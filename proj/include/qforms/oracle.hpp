#pragma once

#include <array>

#include "qforms/cnum.hpp"
#include "qforms/qseries.hpp"

namespace qf {

// Working precision, truncation/quadrature parameters, and the derived
// tolerance threaded through every numerical evaluation.
struct PrecisionContext {
    long bits = 256;
    long quadrature_points = 256; // power of two
    Real tolerance;               // 2^{-bits/2}
    Real pole_eps;                // minimum distance to the pole lattice

    explicit PrecisionContext(long bits_ = 256, long quad_points = 256)
        : bits(bits_),
          quadrature_points(quad_points),
          tolerance(Real::pow2(-bits_ / 2, bits_)),
          pole_eps(Real::of(Rat(1, 1L << 20), bits_)) {}

    Real r(double x) const { return Real::of(x, bits); }
    Real r(const Rat& x) const { return Real::of(x, bits); }
    Cnum c(double re, double im) const { return Cnum::of(re, im, bits); }
};

struct Mat2 {
    long a = 1, b = 0, c = 0, d = 1;
    bool unimodular() const { return a * d - b * c == 1; }
};

Cnum moebius(const Mat2& g, const Cnum& tau);

Cnum eval_eta(const Cnum& tau, const PrecisionContext& ctx);

// theta via the bilateral sum i sum (-1)^n q^{(n+1/2)^2/2} zeta^{n+1/2};
// cross-checked against the triple product on demand.
Cnum eval_theta(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);
Cnum eval_theta_product(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);

Cnum eval_phi(long M, long N, const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);

Cnum eval_crank(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);
Cnum eval_crank_star(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);
// the classical partial-fraction route (independent of the product form)
Cnum eval_crank_star_pfrac(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);
Cnum eval_rank(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);
Cnum eval_rank_star(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);

Cnum eval_FN(long N, const Cnum& z, const Cnum& u, const Cnum& tau,
             const PrecisionContext& ctx);

// D_w^k(F_N)|_{w=1}: Cauchy-circle quadrature in u, or termwise geometric
// expansion of the w^a/(1-beta w) pieces.
Cnum fn_w_derivative(long N, long k, const Cnum& z, const Cnum& tau,
                     const PrecisionContext& ctx, bool termwise);

// exact series evaluated at q = e^{2 pi i tau}
Cnum eval_qseries(const QSeries& s, const Cnum& tau, const PrecisionContext& ctx);
Cnum eval_unit_series(const UnitSeries& s, const Cnum& tau, const PrecisionContext& ctx);

// numeric bilateral theta of weight 1/2 + nu: tilde-shifted family for even N
Cnum eval_theta_tilde(long N, const Rat& r, int nu, const Cnum& tau,
                      const PrecisionContext& ctx);

// |phi_{2M,N+2M} - (-1)^{1+delta_e} sum_j D_{2j+d+1}/(2j+d)! D_w^{2j+d} F_N|
Real verify_thm13(long N, long M, const Cnum& z, const Cnum& tau,
                  const PrecisionContext& ctx);

// |2 eta^2 C*^3 - (6 Dq + Dzeta^2) R*|
Real verify_rank_crank_pde(const Cnum& z, const Cnum& tau, const PrecisionContext& ctx);

// trapezoid contour extraction of the zeta^r coefficient along Im z = Im tau / 2
Cnum fourier_quadrature(long Mphi, long Nphi, const Rat& r, const Cnum& tau,
                        const PrecisionContext& ctx);

struct Prop32Report {
    Real t_residual;
    Real s_residual;
    Real mult_residual;
};

Cnum chi_multiplier(long N, long r, const Mat2& g, long prec);

Prop32Report verify_prop32(long N, long r, const Mat2& g, const Cnum& tau,
                           const PrecisionContext& ctx);

struct Lemma31Report {
    Real elliptic_residual;  // worst case over lambda, mu in {-1,0,1,2}
    Real modular_residual;   // S-type law with psi computed from eta
    Real psi_unity_residual; // | psi^24 - 1 |
};

Lemma31Report verify_lemma31(const Cnum& z, const Cnum& tau, const Mat2& g,
                             const PrecisionContext& ctx);

// |phi_N - i^N eta^{-2N} (C*)^N| and the partial-fraction crank cross-check
struct PhiCrankReport {
    Real phi_residual;
    Real crank_pfrac_residual;
};
PhiCrankReport verify_phicrank(long N, const Cnum& z, const Cnum& tau,
                               const PrecisionContext& ctx);

} // namespace qf
