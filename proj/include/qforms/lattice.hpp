#pragma once

#include <vector>

#include "qforms/qseries.hpp"

namespace qf {

// A_{N-1} root data for sl(N): Cartan Gram matrix and the positive roots
// alpha_i + ... + alpha_j as 0/1 interval vectors.
struct RootSystem {
    long N;
    std::vector<std::vector<long>> cartan;                 // (N-1) x (N-1)
    std::vector<std::pair<long, long>> positive_roots;     // interval [i, j], 1-based

    explicit RootSystem(long n);
};

// Element of (1/N) A_{N-1} as rational coefficients over the simple roots.
using LatticeVector = std::vector<Rat>;

Rat pairing(const RootSystem& rs, const LatticeVector& t, const LatticeVector& s);
Rat norm2(const RootSystem& rs, const LatticeVector& t);

struct TrEntry {
    LatticeVector t;
    Rat exponent;   // t^2 / (2(N-1))
    Rat weight;     // prod over positive roots of (t | alpha)
};

// All t in T_r with t^2/(2(N-1)) < bound. `box_margin` enlarges the certified
// enumeration box (used by the stability test).
std::vector<TrEntry> enumerate_Tr(long N, long r, const Rat& bound, long box_margin = 1);

// d_N = prod_{j=1}^{N} j!
Int weyl_d(long N);

struct LatticeCoefficient {
    UnitSeries chi;
    long terms_enumerated;
};

// Fourier coefficient of phi_N by the root-lattice formula (N >= 2,
// r in N/2 + Z):
//   chi(N,r) = i^N sign(r-N/2) q^{-r^2/2N} eta^{-N(N+1)} / d_{N-1}
//              * sum_{t in T_{r-N/2}} prod_alpha (t|alpha) q^{t^2/(2(N-1))}
LatticeCoefficient lattice_coefficient(long N, const Rat& r, const Rat& q_order);

// N = 1 closed form: chi(1,r) = i q^{-r^2/2} eta^{-3}
//   * sum_{m>=0} (-1)^m q^{(m+|r-1/2|+1/2)^2/2},  r in 1/2 + Z.
UnitSeries n1_coefficient(const Rat& r, const Rat& q_order);

// theta_N = sum over all of (1/N)A_{N-1} of q^{t^2/(2(N-1))}.
QSeries full_lattice_theta(long N, const Rat& q_order);

} // namespace qf
