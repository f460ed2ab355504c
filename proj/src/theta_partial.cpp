#include "qforms/theta_partial.hpp"

#include <algorithm>

namespace qf {

namespace {

// terms of sum over n of sign(n) * (n + shift)^nu * q^{(N/2)(n+shift)^2}
// restricted to n in [n0, n1] (inclusive), exponents below `order`.
QSeries lattice_sum_1d(long N, const Rat& shift, int nu, bool alt, const Int& n0,
                       const Int& n1, const Rat& order) {
    QSeries out = QSeries::zero_to(order);
    if (!n0.fits_slong_p() || !n1.fits_slong_p())
        throw grid_overflow("theta enumeration range too large");
    for (long n = n0.get_si(); n <= n1.get_si(); ++n) {
        Rat g = Rat(n) + shift;
        Rat expo = rat(N, 2) * g * g;
        if (expo >= order) continue;
        Rat c = nu == 0 ? Rat(1) : g;
        if (alt && (n % 2 != 0)) c = -c;
        if (c != 0) out.add_term(expo, c);
    }
    out.purge();
    return out;
}

} // namespace

QSeries theta_series(const ThetaSpec& spec, const Rat& order) {
    const long N = spec.N;
    if (N < 1) throw std::invalid_argument("theta_series: N must be positive");
    const bool alt = (N % 2 != 0); // (-1)^{nN} is nontrivial only for odd N

    switch (spec.variant) {
    case ThetaVariant::full:
    case ThetaVariant::tilde: {
        Rat r = spec.r;
        if (spec.variant == ThetaVariant::tilde) {
            if (N % 2 != 0) throw std::invalid_argument("tilde theta requires even N");
            r += rat(N, 2);
        }
        Rat shift = r / N - rat(1, 2);
        // |n + shift| <= sqrt(2*order/N)  =>  enumeration bounds
        Int s = sqrt_ceil(2 * order / N) + 1;
        Int lo = floor_rat(-shift) - s, hi = floor_rat(-shift) + s + 1;
        return lattice_sum_1d(N, shift, spec.nu, alt, lo, hi, order);
    }
    case ThetaVariant::partial: {
        Rat shift = spec.r / N;
        Int s = sqrt_ceil(2 * order / N) + 1;
        Int hi = floor_rat(-shift) + s + 1;
        if (hi < 0) return QSeries::zero_to(order);
        return lattice_sum_1d(N, shift, spec.nu, alt, 0, hi, order);
    }
    case ThetaVariant::partial_plus:
    case ThetaVariant::partial_minus: {
        ThetaSpec p{N, spec.r, 1, ThetaVariant::partial};
        ThetaSpec m{N, -spec.r, 1, ThetaVariant::partial};
        QSeries a = theta_series(p, order), b = theta_series(m, order);
        return spec.variant == ThetaVariant::partial_plus ? a + b : a - b;
    }
    }
    throw std::logic_error("unreachable");
}

std::pair<QSeries, QSeries> theta_sum_diff(long N, long r, const Rat& order) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("theta_sum_diff requires even N");
    if (r < 0 || r > N - 1)
        throw std::invalid_argument("theta_sum_diff: r must lie in [0, N-1]; reduce first");
    QSeries plus = theta_series({N, Rat(r), 1, ThetaVariant::partial_plus}, order);
    QSeries minus = theta_series({N, Rat(r), 1, ThetaVariant::partial_minus}, order);
    return {plus, minus};
}

std::vector<QSeries> kernel_components(long N, const Rat& order) {
    const bool even = (N % 2 == 0);
    std::vector<QSeries> comps;
    for (long r = 0; r < N; ++r) {
        ThetaSpec sp;
        sp.N = N;
        sp.r = Rat(r);
        sp.nu = even ? 1 : 0;
        sp.variant = even ? ThetaVariant::tilde : ThetaVariant::full;
        QSeries v = theta_series(sp, order);
        if (v.eq_to_order(QSeries::zero(), order)) continue;
        bool dup = false;
        for (auto& u : comps) {
            if ((u - v).eq_to_order(QSeries::zero(), order) ||
                (u + v).eq_to_order(QSeries::zero(), order)) {
                dup = true;
                break;
            }
        }
        if (!dup) comps.push_back(v);
    }
    return comps;
}

QSeries kernel_column(long N, long j, const QSeries& component) {
    if (N % 2 == 0) return serre_tower(j, component);
    QSeries r = component;
    for (long k = 0; k < j; ++k) r = r.dq();
    return r;
}

std::vector<QSeries> series_solve(std::vector<std::vector<QSeries>> a,
                                  std::vector<QSeries> b) {
    const size_t n = b.size();
    if (a.size() < n) throw std::invalid_argument("series_solve: not enough rows");
    for (size_t col = 0; col < n; ++col) {
        // pivot: nonzero entry of minimal valuation
        size_t piv = n;
        Rat best;
        for (size_t row = col; row < a.size(); ++row) {
            if (a[row][col].known_zero()) continue;
            Rat v = a[row][col].val();
            if (piv == n || v < best) {
                piv = row;
                best = v;
            }
        }
        if (piv == n)
            throw singular_system("no usable pivot: increase truncation order and retry");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        QSeries ipiv = a[col][col].inverse();
        for (size_t row = 0; row < a.size(); ++row) {
            if (row == col || a[row][col].known_zero()) continue;
            QSeries factor = a[row][col] * ipiv;
            for (size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
            b[row] -= factor * b[col];
        }
    }
    std::vector<QSeries> x(n);
    for (size_t col = 0; col < n; ++col) x[col] = b[col] * a[col][col].inverse();
    return x;
}

KernelResult quasimodular_kernel(long N, const Rat& order) {
    if (N < 1) throw std::invalid_argument("quasimodular_kernel: N >= 1 required");
    const long delta = (N % 2 == 0) ? 1 : 0;
    const long J = (N - 1 - delta) / 2;

    auto comps = kernel_components(N, order);
    if (comps.empty()) {
        // N = 1 or 2: every component vanishes identically (the relation acts
        // on the zero vector), so a single coefficient 1 works.
        KernelResult res;
        res.f.assign(static_cast<size_t>(J) + 1, QSeries::constant(1));
        res.certified_order = order;
        res.degenerate = true;
        return res;
    }
    if (static_cast<long>(comps.size()) < J)
        throw singular_system("fewer independent components than kernel rank");

    // columns X^j(v), rows = components; solve A[:,0..J-1] f' = -A[:,J]
    std::vector<std::vector<QSeries>> cols(comps.size());
    for (size_t row = 0; row < comps.size(); ++row) {
        cols[row].resize(static_cast<size_t>(J) + 1);
        for (long j = 0; j <= J; ++j)
            cols[row][static_cast<size_t>(j)] = kernel_column(N, j, comps[row]);
    }
    std::vector<std::vector<QSeries>> A(comps.size());
    std::vector<QSeries> rhs(static_cast<size_t>(J));
    for (size_t row = 0; row < comps.size(); ++row) {
        A[row].assign(cols[row].begin(), cols[row].end() - 1);
        if (row < static_cast<size_t>(J)) rhs[row] = -cols[row].back();
    }
    // use the first J rows as the square system; the rest are certified via
    // the residual check below
    std::vector<std::vector<QSeries>> Asq(A.begin(), A.begin() + J);
    auto f = series_solve(Asq, rhs);
    f.push_back(QSeries::constant(1));

    KernelResult res;
    res.f = f;
    bool have = false;
    for (size_t row = 0; row < comps.size(); ++row) {
        QSeries resid = QSeries::zero();
        for (long j = 0; j <= J; ++j)
            resid += f[static_cast<size_t>(j)] * cols[row][static_cast<size_t>(j)];
        if (!resid.trunc_is_inf()) {
            if (!have || resid.trunc() < res.certified_order) res.certified_order = resid.trunc();
            have = true;
        }
        if (!resid.known_zero())
            throw singular_system("kernel residual has surviving terms: raise order");
    }
    if (!have) res.certified_order = order;
    return res;
}

QSeries series_det(const std::vector<std::vector<QSeries>>& m) {
    const size_t n = m.size();
    if (n == 0) return QSeries::constant(1);
    if (n == 1) return m[0][0];
    QSeries det = QSeries::zero();
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<QSeries>> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<QSeries> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c)
                if (c != j) row.push_back(m[r][c]);
            minor.push_back(std::move(row));
        }
        QSeries term = m[0][j] * series_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

TnRatioResult tn_determinant_ratio(long N, const Rat& order) {
    if (N < 4 || N % 2 != 0)
        throw std::invalid_argument("tn_determinant_ratio: N must be even and >= 4");
    const long dim = N / 2 - 1;
    std::vector<std::vector<QSeries>> m(static_cast<size_t>(dim));
    for (long r = 1; r <= dim; ++r) {
        QSeries v = theta_series({N, Rat(r), 1, ThetaVariant::tilde}, order);
        auto& row = m[static_cast<size_t>(r - 1)];
        row.resize(static_cast<size_t>(dim));
        for (long j = 0; j < dim; ++j) row[static_cast<size_t>(j)] = serre_tower(j, v);
    }
    QSeries det = series_det(m);
    long p = (N - 1) * (N - 2) / 2;
    QSeries ratio = det * eta(order).pow(p).inverse();
    TnRatioResult res;
    res.constant = ratio.coeff(Rat(0));
    if (res.constant == 0) throw nonconstant_ratio("determinant ratio has zero constant term");
    QSeries rest = ratio - QSeries::constant(res.constant);
    if (!rest.known_zero())
        throw nonconstant_ratio("determinant ratio has nonconstant coefficients");
    res.ratio = ratio;
    return res;
}

} // namespace qf
