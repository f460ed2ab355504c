#pragma once

#include <vector>

#include "qforms/generators.hpp"
#include "qforms/qseries.hpp"

namespace qf {

enum class ThetaVariant { full, tilde, partial, partial_plus, partial_minus };

// vartheta_{1/2+nu}(N,r;tau) and friends.
//   full:    sum_{n in Z} (-1)^{nN} (n + r/N - 1/2)^nu q^{(N/2)(n + r/N - 1/2)^2}
//   tilde:   full with r -> r + N/2 (N even)
//   partial: sum_{n>=0} (-1)^{Nn} (n + r/N)^nu q^{(N/2)(n + r/N)^2}
//   partial_plus/minus: partial(N,r) +/- partial(N,-r) at weight 3/2
struct ThetaSpec {
    long N = 1;
    Rat r = 0;
    int nu = 0; // 0: weight 1/2, 1: weight 3/2
    ThetaVariant variant = ThetaVariant::full;
};

QSeries theta_series(const ThetaSpec& spec, const Rat& order);

// (Theta^+, Theta^-) of section-6 type, N even, 0 <= r <= N-1.
std::pair<QSeries, QSeries> theta_sum_diff(long N, long r, const Rat& order);

struct KernelResult {
    std::vector<QSeries> f;  // f_0 .. f_J, top entry normalized to 1
    Rat certified_order;     // residuals vanish identically below this order
    bool degenerate = false; // N = 1, 2: relation acts on the zero vector
};

// Coefficients f_j with sum_j f_j X^j(theta-component) = 0 for all residues r,
// where X is the Serre tower for even N and D_q for odd N.
KernelResult quasimodular_kernel(long N, const Rat& order);

// The independent theta components the kernel annihilates (deduped up to sign).
std::vector<QSeries> kernel_components(long N, const Rat& order);
// X^j applied to one component (Serre tower for even N, D_q^j for odd N).
QSeries kernel_column(long N, long j, const QSeries& component);

struct TnRatioResult {
    QSeries ratio;  // det(T_N) / eta^{(N-1)(N-2)/2}
    Rat constant;   // its constant coefficient
};

// det(T_N) / eta^{(N-1)(N-2)/2}; throws nonconstant_ratio if a nonconstant
// coefficient survives below the certified order.
TnRatioResult tn_determinant_ratio(long N, const Rat& order);

// Exact determinant of a square matrix of truncated series (cofactor
// expansion; intended for small dimensions).
QSeries series_det(const std::vector<std::vector<QSeries>>& m);

// Solve A x = b over the fraction field of truncated series, pivoting on
// minimal valuation. A is n x n (rows beyond n must be checked by the caller
// through residuals). Throws singular_system when no usable pivot exists.
std::vector<QSeries> series_solve(std::vector<std::vector<QSeries>> a,
                                  std::vector<QSeries> b);

} // namespace qf
