#include "qforms/chi.hpp"

#include "qforms/theta_partial.hpp"

namespace qf {

int delta_e(long N) { return N % 2 == 0 ? 1 : 0; }

Rat rho_fold(long N, const Rat& r) {
    Rat shift = r - rat(N, 2);
    if (shift.get_den() != 1) throw not_in_coset("rho_fold: r must lie in N/2 + Z");
    return r >= rat(N, 2) ? r : Rat(N) - r;
}

std::vector<MixedTerm> mixed_decomposition(const CoefficientSpec& spec) {
    const long M = spec.M, N = spec.N;
    if (M < 0 || N < 1) throw std::invalid_argument("chi: need M >= 0, N >= 1");
    const int d = delta_e(N);
    const long jmax = (N - 1 - d) / 2 + M;
    const long Nprime = N + 2 * M;
    const Rat rho = rho_fold(N, spec.r);

    Rat qshift = -spec.r * spec.r / (2 * N);
    // Laurent coefficients carry negative valuations; pad working orders
    Rat dorder = spec.q_order - qshift + rat(Nprime * (Nprime + 1), 8) + 2;
    PhiLaurent pl = phi_laurent(2 * M, Nprime, jmax + 1, dorder);

    Rat torder = spec.q_order - qshift + rat(3 * Nprime, 8) + 2;
    QSeries theta = theta_series({N, rho, d, ThetaVariant::partial}, torder);

    std::vector<MixedTerm> out;
    for (long j = 0; j <= jmax; ++j) {
        MixedTerm term;
        term.derivative_order = j;
        term.theta_part = theta;
        Rat scale = pow_rat(Rat(N), j + d) * pow_rat(Rat(2), j) /
                    Rat(factorial(static_cast<unsigned long>(2 * j + d)));
        if (d == 0) scale = -scale; // (-1)^{1+delta_e}
        UnitSeries D = pl.D(2 * j + d + 1);
        term.prefactor = UnitSeries(D.ipow, D.s.scaled(scale).shifted(qshift));
        out.push_back(std::move(term));
    }
    return out;
}

UnitSeries sum_mixed(const std::vector<MixedTerm>& terms) {
    if (terms.empty()) throw std::invalid_argument("empty decomposition");
    int ipow = terms.front().prefactor.ipow;
    QSeries acc = QSeries::zero();
    for (auto& t : terms) {
        if (t.prefactor.ipow != ipow)
            throw std::logic_error("mixed terms carry inconsistent units");
        QSeries th = t.theta_part;
        for (long k = 0; k < t.derivative_order; ++k) th = th.dq();
        acc += t.prefactor.s * th;
    }
    return UnitSeries(ipow, acc);
}

UnitSeries chi_coefficient(const CoefficientSpec& spec) {
    UnitSeries u = sum_mixed(mixed_decomposition(spec));
    return UnitSeries(u.ipow, u.s.truncated_to(spec.q_order));
}

} // namespace qf
