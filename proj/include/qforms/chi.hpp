#pragma once

#include <vector>

#include "qforms/jacobi_taylor.hpp"
#include "qforms/qseries.hpp"

namespace qf {

// chi(2M, N+2M, r): Fourier coefficient of phi_{2M, N+2M} in the chamber
// 0 <= Im z < Im tau.  r must lie in N/2 + Z.
struct CoefficientSpec {
    long M = 0;      // phi first index is 2M
    long N = 1;      // F_N index; phi second index is N + 2M
    Rat r = 0;
    Rat q_order = 20;
};

int delta_e(long N);
Rat rho_fold(long N, const Rat& r);

UnitSeries chi_coefficient(const CoefficientSpec& spec);

struct MixedTerm {
    UnitSeries prefactor;  // (-1)^{1+d} q^{-r^2/2N} D_{2j+d+1} N^{j+d} 2^j / (2j+d)!
    long derivative_order; // j: the D_q power applied to the theta part
    QSeries theta_part;    // Theta_{1/2+d}(N, rho(r))
};

// The structured mixed-partial-theta witness: summing
// prefactor * D_q^j(theta_part) over the list reproduces chi_coefficient.
std::vector<MixedTerm> mixed_decomposition(const CoefficientSpec& spec);

UnitSeries sum_mixed(const std::vector<MixedTerm>& terms);

} // namespace qf
