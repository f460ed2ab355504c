#pragma once

#include <map>
#include <vector>

#include "qforms/qseries.hpp"
#include "qforms/zseries.hpp"

namespace qf {

// Laurent data of phi_{M,N'} = theta(z+1/2)^M / theta(z)^{N'} at z = 0:
//   phi = sum_j D_j x^{-j},  x = 2 pi i z,  D_j = i^unit_ipow * real[j].
struct PhiLaurent {
    long M = 0;
    long Nprime = 1;
    int unit_ipow = 0;               // D_j = i^{unit_ipow} * real[j]
    std::map<long, QSeries> real;    // indexed by j (x^{-j} coefficient)

    UnitSeries D(long j) const;
};

// Laurent coefficients D_{N'}, D_{N'-2}, ..., j_max of them.
PhiLaurent phi_laurent(long M, long Nprime, long j_max, const Rat& q_order);

// phi_{M,N'} expanded about z = -1/2 (in x = 2 pi i w, w = z + 1/2).
// Real-rational for even M; even in x; vanishes to order M at w = 0.
ZSeries phi_at_minus_half(long M, long Nprime, long x_order, const Rat& q_order);

// H(zeta^r q^m) = (2*N*m + r^2) zeta^r q^m: eigenvalue of the heat operator
// on a monomial.
Rat heat_monomial_factor(long N, const Rat& r, const Rat& m);

// signless higher-order Euler numbers E^{(N)}_{2j} = d^{2j}/dv^{2j} sec^N(v) |_0
std::vector<Int> euler_numbers(long N, long j_max);

// det(E^{(N)}_{2(j+k)})_{0<=j,k<=M-1}; throws zero_determinant when zero.
Int hankel_nonvanishing(long N, long M);

struct HeatDecomposition {
    std::vector<QSeries> f;        // f_0 .. f_M with the identity normalization
    long residual_checked_through; // Taylor orders 2M..this verified zero
    Rat residual_q_order;          // q-order to which the zero check is certified
};

// Coefficients with phi_{2M, N+2M} = sum_j f_j H^j(phi_N), certified on
// Taylor coefficients at z = -1/2 through x^{2M+4}.
HeatDecomposition heat_decomposition(long N, long M, const Rat& q_order);

} // namespace qf
