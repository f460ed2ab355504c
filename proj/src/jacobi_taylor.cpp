#include "qforms/jacobi_taylor.hpp"

#include "qforms/theta_partial.hpp"

namespace qf {

UnitSeries PhiLaurent::D(long j) const {
    auto it = real.find(j);
    if (it == real.end()) throw std::out_of_range("Laurent index not computed");
    return UnitSeries(unit_ipow, it->second);
}

PhiLaurent phi_laurent(long M, long Nprime, long j_max, const Rat& q_order) {
    if (Nprime < 1) throw std::invalid_argument("phi_laurent: N >= 1 required");
    if (M < 0) throw std::invalid_argument("phi_laurent: M >= 0 required");
    long x_order = 2 * j_max + 2;
    // theta(z) = i * x * S(x) with S invertible
    ZSeries S = theta_z0_real(x_order + 1, q_order).shifted_x(-1);
    ZSeries body = S.pow(-Nprime);
    if (M > 0) body = body * theta_half(x_order, q_order).pow(M);
    // body = phi * x^{Nprime}, so D_j reads off the x^{Nprime - j} coefficient
    PhiLaurent out;
    out.M = M;
    out.Nprime = Nprime;
    out.unit_ipow = static_cast<int>(((-Nprime) % 4 + 4) % 4);
    for (long k = 0; k < j_max; ++k) {
        long j = Nprime - 2 * k;
        long pos = Nprime - j;
        if (pos >= body.xtrunc()) break;
        out.real[j] = body.coeff(pos);
    }
    return out;
}

ZSeries phi_at_minus_half(long M, long Nprime, long x_order, const Rat& q_order) {
    if (M % 2 != 0) throw std::invalid_argument("phi_at_minus_half: even M required");
    // phi(w - 1/2) = theta(w)^M * (-1)^{Nprime} theta(w+1/2)^{-Nprime}
    //             = (-1)^{M/2 + Nprime} R(w)^M B(w)^{-Nprime}
    ZSeries B = theta_half(x_order + 2, q_order);
    ZSeries body = B.pow(-Nprime);
    if (M > 0) body = body * theta_z0_real(x_order + 2, q_order).pow(M);
    Rat sign = ((M / 2 + Nprime) % 2 == 0) ? Rat(1) : Rat(-1);
    return body.scaled(sign);
}

Rat heat_monomial_factor(long N, const Rat& r, const Rat& m) {
    return Rat(2 * N) * m + r * r;
}

std::vector<Int> euler_numbers(long N, long j_max) {
    if (N < 1 || j_max < 0) throw std::invalid_argument("euler_numbers: bad arguments");
    long n = 2 * j_max + 1;
    // cos series, then sec = 1/cos, then sec^N, as plain rational vectors
    std::vector<Rat> cosv(static_cast<size_t>(n), Rat(0));
    for (long k = 0; 2 * k < n; ++k) {
        Rat c = Rat(1) / Rat(factorial(static_cast<unsigned long>(2 * k)));
        if (k % 2 == 1) c = -c;
        cosv[static_cast<size_t>(2 * k)] = c;
    }
    std::vector<Rat> sec(static_cast<size_t>(n), Rat(0));
    sec[0] = 1;
    for (long k = 1; k < n; ++k) {
        Rat s(0);
        for (long j = 1; j <= k; ++j) s += cosv[static_cast<size_t>(j)] * sec[static_cast<size_t>(k - j)];
        sec[static_cast<size_t>(k)] = -s;
    }
    std::vector<Rat> p(static_cast<size_t>(n), Rat(0));
    p[0] = 1;
    for (long e = 0; e < N; ++e) {
        std::vector<Rat> np(static_cast<size_t>(n), Rat(0));
        for (long a = 0; a < n; ++a) {
            if (p[static_cast<size_t>(a)] == 0) continue;
            for (long b = 0; a + b < n; ++b)
                np[static_cast<size_t>(a + b)] += p[static_cast<size_t>(a)] * sec[static_cast<size_t>(b)];
        }
        p = std::move(np);
    }
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(j_max + 1));
    for (long j = 0; j <= j_max; ++j) {
        Rat e = p[static_cast<size_t>(2 * j)] * Rat(factorial(static_cast<unsigned long>(2 * j)));
        if (e.get_den() != 1) throw std::logic_error("higher-order Euler number not integral");
        out.push_back(e.get_num());
    }
    return out;
}

Int hankel_nonvanishing(long N, long M) {
    if (M < 1) throw std::invalid_argument("hankel_nonvanishing: M >= 1 required");
    auto E = euler_numbers(N, 2 * (M - 1));
    // exact determinant by fraction-full Gaussian elimination over Q
    std::vector<std::vector<Rat>> m(static_cast<size_t>(M), std::vector<Rat>(static_cast<size_t>(M)));
    for (long j = 0; j < M; ++j)
        for (long k = 0; k < M; ++k) m[static_cast<size_t>(j)][static_cast<size_t>(k)] = Rat(E[static_cast<size_t>(j + k)]);
    Rat det(1);
    for (long col = 0; col < M; ++col) {
        long piv = -1;
        for (long row = col; row < M; ++row)
            if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) throw zero_determinant("Hankel determinant of higher-order Euler numbers vanished");
        if (piv != col) {
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(col)]);
            det = -det;
        }
        Rat p = m[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det *= p;
        for (long row = col + 1; row < M; ++row) {
            Rat f = m[static_cast<size_t>(row)][static_cast<size_t>(col)] / p;
            if (f == 0) continue;
            for (long k = col; k < M; ++k)
                m[static_cast<size_t>(row)][static_cast<size_t>(k)] -= f * m[static_cast<size_t>(col)][static_cast<size_t>(k)];
        }
    }
    if (det == 0 || det.get_den() != 1)
        throw zero_determinant("Hankel determinant of higher-order Euler numbers vanished");
    return det.get_num();
}

HeatDecomposition heat_decomposition(long N, long M, const Rat& q_order) {
    if (N < 1 || M < 0) throw std::invalid_argument("heat_decomposition: bad arguments");
    const long through = 2 * M + 4;
    const long x_order = through + 2 * M + 4;

    ZSeries phiN = phi_at_minus_half(0, N, x_order, q_order);
    std::vector<ZSeries> hcols;
    hcols.push_back(phiN);
    for (long j = 1; j <= M; ++j) hcols.push_back(hcols.back().heat(N));

    std::vector<QSeries> f;
    if (M == 0) {
        f.push_back(QSeries::constant(1));
    } else {
        // cancel Taylor orders 0, 2, ..., 2M-2 with f_M = 1
        std::vector<std::vector<QSeries>> T(static_cast<size_t>(M));
        std::vector<QSeries> rhs(static_cast<size_t>(M));
        for (long k = 0; k < M; ++k) {
            auto& row = T[static_cast<size_t>(k)];
            row.resize(static_cast<size_t>(M));
            for (long j = 0; j < M; ++j) row[static_cast<size_t>(j)] = hcols[static_cast<size_t>(j)].coeff(2 * k);
            rhs[static_cast<size_t>(k)] = -hcols[static_cast<size_t>(M)].coeff(2 * k);
        }
        try {
            f = series_solve(T, rhs);
        } catch (const singular_system& e) {
            throw singular_taylor_matrix(e.what());
        }
        f.push_back(QSeries::constant(1));
    }

    // normalize to the exact identity: both sides are proportional; match the
    // first surviving Taylor coefficient (order 2M)
    ZSeries lhs = phi_at_minus_half(2 * M, N + 2 * M, x_order, q_order);
    QSeries rhs2m = QSeries::zero();
    for (long j = 0; j <= M; ++j) rhs2m += f[static_cast<size_t>(j)] * hcols[static_cast<size_t>(j)].coeff(2 * M);
    QSeries c = rhs2m * lhs.coeff(2 * M).inverse();
    QSeries cinv = c.inverse();
    for (auto& fk : f) fk = fk * cinv;

    HeatDecomposition out;
    out.f = f;
    out.residual_checked_through = through;
    bool have = false;
    for (long k = 0; 2 * k <= through; ++k) {
        QSeries resid = -lhs.coeff(2 * k);
        for (long j = 0; j <= M; ++j)
            resid += f[static_cast<size_t>(j)] * hcols[static_cast<size_t>(j)].coeff(2 * k);
        if (!resid.known_zero())
            throw singular_taylor_matrix("heat decomposition residual has surviving terms");
        if (!resid.trunc_is_inf()) {
            if (!have || resid.trunc() < out.residual_q_order) out.residual_q_order = resid.trunc();
            have = true;
        }
    }
    if (!have) out.residual_q_order = q_order;
    // odd orders vanish by parity; assert on the lowest few
    for (long k = 1; k <= through; k += 2) {
        QSeries resid = -lhs.coeff(k);
        for (long j = 0; j <= M; ++j)
            resid += f[static_cast<size_t>(j)] * hcols[static_cast<size_t>(j)].coeff(k);
        if (!resid.known_zero())
            throw singular_taylor_matrix("parity violation in heat decomposition");
    }
    return out;
}

} // namespace qf
