#include "qforms/lattice.hpp"

#include <functional>

#include "qforms/generators.hpp"

namespace qf {

RootSystem::RootSystem(long n) : N(n) {
    if (n < 2) throw std::invalid_argument("RootSystem needs N >= 2");
    long d = n - 1;
    cartan.assign(static_cast<size_t>(d), std::vector<long>(static_cast<size_t>(d), 0));
    for (long i = 0; i < d; ++i) {
        cartan[static_cast<size_t>(i)][static_cast<size_t>(i)] = 2;
        if (i + 1 < d) {
            cartan[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = -1;
            cartan[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = -1;
        }
    }
    for (long i = 1; i <= d; ++i)
        for (long j = i; j <= d; ++j) positive_roots.emplace_back(i, j);
}

Rat pairing(const RootSystem& rs, const LatticeVector& t, const LatticeVector& s) {
    size_t d = static_cast<size_t>(rs.N - 1);
    if (t.size() != d || s.size() != d) throw dimension_mismatch("lattice vector dimension");
    Rat acc(0);
    for (size_t i = 0; i < d; ++i) {
        if (t[i] == 0) continue;
        Rat row(0);
        for (size_t j = 0; j < d; ++j)
            if (rs.cartan[i][j] != 0) row += Rat(rs.cartan[i][j]) * s[j];
        acc += t[i] * row;
    }
    return acc;
}

Rat norm2(const RootSystem& rs, const LatticeVector& t) { return pairing(rs, t, t); }

namespace {

// (C^{-1})_{ii} for the A_{N-1} Cartan matrix: i(N-i)/N, 1-based.
Rat cartan_inv_diag(long N, long i) { return rat(i * (N - i), N); }

// weight prod_{alpha in Delta_0^+} (t | alpha) via prefix sums of (t | alpha_k)
Rat root_product(const RootSystem& rs, const LatticeVector& t) {
    long d = rs.N - 1;
    std::vector<Rat> w(static_cast<size_t>(d));
    for (long k = 0; k < d; ++k) {
        Rat acc(0);
        for (long j = 0; j < d; ++j)
            if (rs.cartan[static_cast<size_t>(k)][static_cast<size_t>(j)] != 0)
                acc += Rat(rs.cartan[static_cast<size_t>(k)][static_cast<size_t>(j)]) * t[static_cast<size_t>(j)];
        w[static_cast<size_t>(k)] = acc;
    }
    Rat prod(1);
    for (auto& [i, j] : rs.positive_roots) {
        Rat s(0);
        for (long k = i; k <= j; ++k) s += w[static_cast<size_t>(k - 1)];
        prod *= s;
        if (prod == 0) return prod;
    }
    return prod;
}

} // namespace

std::vector<TrEntry> enumerate_Tr(long N, long r, const Rat& bound, long box_margin) {
    RootSystem rs(N);
    long d = N - 1;
    // a_n = c_n + (N-1) m_n with c_n = (N-n)n/2 - rn/N; the quadratic form in m
    // is (N-1)^2 (m - m*)^T C (m - m*) with exact center m* = -c/(N-1)
    std::vector<Rat> c(static_cast<size_t>(d));
    for (long n = 1; n <= d; ++n)
        c[static_cast<size_t>(n - 1)] = rat((N - n) * n, 2) - rat(r * n, N);
    Rat B = 2 * Rat(N - 1) * bound; // t^2 <= B
    std::vector<long> lo(static_cast<size_t>(d)), hi(static_cast<size_t>(d));
    for (long i = 1; i <= d; ++i) {
        Rat center = -c[static_cast<size_t>(i - 1)] / Rat(N - 1);
        Int s = sqrt_ceil(B * cartan_inv_diag(N, i)); // >= (N-1) * half-width
        long w = (s.get_si() + (N - 1) - 1) / (N - 1) + box_margin;
        lo[static_cast<size_t>(i - 1)] = static_cast<long>(floor_rat(center).get_si()) - w;
        hi[static_cast<size_t>(i - 1)] = static_cast<long>(ceil_rat(center).get_si()) + w;
    }
    // branch constraint on m_{N-1}: r >= 0 keeps m >= 0, r < 0 keeps m <= -1.
    // (The proof's geometric-series split pairs the m >= 0 branch with the
    // coefficient labeled by +r once the zeta = z^{-1} relabeling is undone;
    // certified against the Theorem-1.4 pipeline and direct expansion.)
    if (r >= 0)
        lo[static_cast<size_t>(d - 1)] = std::max(lo[static_cast<size_t>(d - 1)], 0L);
    else
        hi[static_cast<size_t>(d - 1)] = std::min(hi[static_cast<size_t>(d - 1)], -1L);

    std::vector<TrEntry> out;
    std::vector<long> m(static_cast<size_t>(d));
    LatticeVector a(static_cast<size_t>(d));
    std::function<void(long)> rec = [&](long idx) {
        if (idx == d) {
            for (long i = 0; i < d; ++i)
                a[static_cast<size_t>(i)] = c[static_cast<size_t>(i)] + Rat(N - 1) * m[static_cast<size_t>(i)];
            Rat q2 = norm2(rs, a);
            Rat expo = q2 / (2 * Rat(N - 1));
            if (expo >= bound) return;
            TrEntry e;
            e.t = a;
            e.exponent = expo;
            e.weight = root_product(rs, a);
            out.push_back(std::move(e));
            return;
        }
        for (long v = lo[static_cast<size_t>(idx)]; v <= hi[static_cast<size_t>(idx)]; ++v) {
            m[static_cast<size_t>(idx)] = v;
            rec(idx + 1);
        }
    };
    rec(0);
    return out;
}

Int weyl_d(long N) {
    Int d(1);
    for (long j = 1; j <= N; ++j) d *= factorial(static_cast<unsigned long>(j));
    return d;
}

LatticeCoefficient lattice_coefficient(long N, const Rat& r, const Rat& q_order) {
    if (N < 2) throw std::invalid_argument("lattice_coefficient: N >= 2 required");
    Rat shift = r - rat(N, 2);
    if (shift.get_den() != 1) throw not_in_coset("r must lie in N/2 + Z");
    long rz = static_cast<long>(shift.get_num().get_si());

    Rat prefix_val = -r * r / (2 * N) - rat(N * (N + 1), 24); // valuation of q^{-r^2/2N} eta^{-N(N+1)}
    Rat sum_order = q_order - prefix_val + 1;
    auto entries = enumerate_Tr(N, rz, sum_order);
    QSeries sum = QSeries::zero_to(sum_order);
    for (auto& e : entries)
        if (e.weight != 0) sum.add_term(e.exponent, e.weight);
    sum.purge();

    QSeries etapow = eta(sum_order + rat(N * (N + 1), 24) + 1).pow(N * (N + 1)).inverse();
    int sgn = shift >= 0 ? 1 : -1;
    Rat scale = Rat(sgn) / Rat(weyl_d(N - 1));
    QSeries real = (sum * etapow).scaled(scale).shifted(-r * r / (2 * N));

    LatticeCoefficient out;
    out.chi = UnitSeries(static_cast<int>(N % 4), real.truncated_to(q_order));
    out.terms_enumerated = static_cast<long>(entries.size());
    return out;
}

UnitSeries n1_coefficient(const Rat& r, const Rat& q_order) {
    Rat k = r - rat(1, 2);
    if (k.get_den() != 1) throw not_in_coset("r must lie in 1/2 + Z");
    Rat c = abs(k) + rat(1, 2); // the tail depends on r through |r - 1/2|
    Rat prefix_val = -r * r / 2 - rat(1, 8);
    Rat sum_order = q_order - prefix_val + 1;
    QSeries tail = QSeries::zero_to(sum_order);
    for (long m = 0;; ++m) {
        Rat e = (Rat(m) + c) * (Rat(m) + c) / 2;
        if (e >= sum_order) break;
        tail.add_term(e, m % 2 == 0 ? Rat(1) : Rat(-1));
    }
    tail.purge();
    QSeries etainv3 = eta(sum_order + 1).pow(3).inverse();
    QSeries real = (tail * etainv3).shifted(-r * r / 2);
    return UnitSeries(1, real.truncated_to(q_order));
}

QSeries full_lattice_theta(long N, const Rat& q_order) {
    RootSystem rs(N);
    long d = N - 1;
    // t = v / N, v integral: exponent v^T C v / (2 (N-1) N^2)
    Rat B = q_order * 2 * (N - 1) * N * N; // v^T C v < B
    std::vector<long> hi(static_cast<size_t>(d));
    for (long i = 1; i <= d; ++i) hi[static_cast<size_t>(i - 1)] = sqrt_ceil(B * cartan_inv_diag(N, i)).get_si() + 1;
    QSeries out = QSeries::zero_to(q_order);
    std::vector<long> v(static_cast<size_t>(d));
    LatticeVector t(static_cast<size_t>(d));
    std::function<void(long)> rec = [&](long idx) {
        if (idx == d) {
            for (long i = 0; i < d; ++i) t[static_cast<size_t>(i)] = rat(v[static_cast<size_t>(i)], N);
            Rat expo = norm2(rs, t) / (2 * Rat(N - 1));
            if (expo < q_order) out.add_term(expo, Rat(1));
            return;
        }
        for (long x = -hi[static_cast<size_t>(idx)]; x <= hi[static_cast<size_t>(idx)]; ++x) {
            v[static_cast<size_t>(idx)] = x;
            rec(idx + 1);
        }
    };
    rec(0);
    out.purge();
    return out;
}

} // namespace qf
