#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qforms/generators.hpp"
#include "qforms/quantum.hpp"

using namespace qf;

namespace {

bool small(const Real& x, double bound) { return x < Real::of(bound, x.prec()); }

RationalPoint pt(long h, long k) { return RationalPoint(Int(h), Int(k)); }

// bivariate series in (A, q): coefficient of A^k is a QSeries
struct Biv {
    std::vector<QSeries> a; // size = A-truncation
    explicit Biv(size_t deg, const Rat& qord) : a(deg, QSeries::zero_to(qord)) {}
    static Biv one(size_t deg, const Rat& qord) {
        Biv b(deg, qord);
        b.a[0] = QSeries::constant(1).truncated_to(qord);
        return b;
    }
};

Biv biv_mul(const Biv& x, const Biv& y, const Rat& qord) {
    Biv r(x.a.size(), qord);
    for (size_t i = 0; i < x.a.size(); ++i)
        for (size_t j = 0; i + j < x.a.size(); ++j) {
            if (x.a[i].known_zero() || y.a[j].known_zero()) continue;
            r.a[i + j] += (x.a[i] * y.a[j]).truncated_to(qord);
        }
    return r;
}

} // namespace

TEST_CASE("quantum set membership, spec branch examples") {
    CHECK(quantum_member(2, 1, pt(1, 4)));
    CHECK(!quantum_member(2, 1, pt(1, 2)));
    CHECK(quantum_member(2, 0, pt(1, 2)));
    CHECK(!quantum_member(2, 0, pt(1, 4)));
    CHECK(quantum_member(4, 1, pt(1, 2)));
    CHECK(quantum_member(4, 3, pt(1, 2)));
    CHECK(!quantum_member(4, 1, pt(1, 4)));
}

TEST_CASE("quantum set is preserved by Gamma_1(2N)") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<long> cd(-3, 3), dd(-2, 2);
    for (long N : {2L, 4L, 6L}) {
        for (long r : {0L, 1L, N / 2}) {
            // base points in each branch where available
            std::vector<RationalPoint> pts;
            for (long k = 1; k <= 40; ++k)
                for (long h = 1; h < k; ++h)
                    if (gcd_ll(h, k) == 1 && quantum_member(N, r, pt(h, k))) pts.push_back(pt(h, k));
            REQUIRE(!pts.empty());
            long tried = 0;
            for (int it = 0; it < 200 && tried < 20; ++it) {
                long cp = cd(rng), dk = dd(rng);
                long c = 2 * N * cp;
                long d = 1 + 2 * N * dk;
                if (gcd_ll(c == 0 ? 1 : c, d) != 1 || d == 0) continue;
                // solve a d - b c = 1 with a = 1 mod 2N automatically
                long a = 0, b = 0;
                bool found = false;
                for (long bb = -40; bb <= 40 && !found; ++bb) {
                    if (c == 0) {
                        if (d == 1) { a = 1; b = bb; found = true; }
                        continue;
                    }
                    Int num = Int(1) + Int(bb) * c;
                    if (num % d == 0) {
                        a = Int(num / d).get_si();
                        b = bb;
                        found = true;
                    }
                }
                if (!found) continue;
                Mat2 g{a, b, c, d};
                if (!g.unimodular()) continue;
                auto& p = pts[static_cast<size_t>(it) % pts.size()];
                try {
                    RationalPoint q = moebius_point(g, p);
                    CHECK(quantum_member(N, r, q));
                    ++tried;
                } catch (const usage_error&) {
                    // image hit the cusp at infinity; skip
                }
            }
            CHECK(tried >= 10);
        }
    }
}

TEST_CASE("Q_{a,b} membership for the weight-1/2 family") {
    // a=1, b=2: h/k with 2|2h (always), 2∤h (h odd), k odd >= 1
    CHECK(for_quantum_member(1, 2, pt(1, 3)));
    CHECK(!for_quantum_member(1, 2, pt(2, 3)));
    CHECK(!for_quantum_member(1, 2, pt(-1, 3)));
}

TEST_CASE("Gauss sums, direct values") {
    long prec = 256;
    CHECK(small(abs(gauss_sum(1, 0, 2, prec)), 1e-70));
    CHECK(small(abs(gauss_sum(1, 1, 4, prec)), 1e-70));
    CHECK(gauss_vanishing(1, 1, 4) == GaussCase::case2);
    Cnum g1 = gauss_sum(1, 0, 1, prec);
    CHECK(small(abs(g1 - Cnum::of(Rat(1), prec)), 1e-70));
    CHECK(gauss_vanishing(2, 1, 6) == GaussCase::case1);
    CHECK(gauss_vanishing(1, 0, 6) == GaussCase::case3);
}

TEST_CASE("classifier soundness against direct summation, c <= 60") {
    long prec = 192;
    for (long c = 1; c <= 60; ++c) {
        for (long a = 0; a < c; ++a) {
            for (long b = 0; b < c; ++b) {
                if (gauss_vanishing(a, b, c) != GaussCase::none) {
                    CHECK(small(abs(gauss_sum(a, b, c, prec)), 1e-25));
                }
            }
        }
    }
}

TEST_CASE("gamma sequence: periodicity data, parity, mean zero") {
    long prec = 256;
    auto g1 = gamma_seq(2, 1, pt(1, 4), prec);
    CHECK(g1.period == 16);
    CHECK(g1.even_parity(Real::pow2(-200, prec)));
    CHECK(small(abs(g1.mean_value()), 1e-70));
    auto g0 = gamma_seq(2, 0, pt(1, 2), prec);
    CHECK(small(abs(g0.mean_value()), 1e-70));
    // r = 0 entries carry factor 2
    CHECK(small(abs(g0.at(0) - Cnum::of(Rat(2), prec)), 1e-70));
    CHECK(small(abs(g0.at(2) - Cnum{Real::of(2L, prec), Real(prec)} * e_of(rat(4, 8), prec)), 1e-70));
}

TEST_CASE("mean nonzero triggers the guard off-quantum-set") {
    // 1/2 is not in Q-hat_{2,1}; gamma mean is generally nonzero there but the
    // guard only fires for claimed members, so construct directly
    long prec = 200;
    auto g = gamma_seq(2, 1, pt(1, 3), prec); // 1/3: k odd, not in the set; no assert
    CHECK(g.period == 12);
}

TEST_CASE("L(-1, (1,-1)) = 1/4 via Bernoulli and via Abel") {
    long prec = 320;
    PeriodicSeq chi;
    chi.period = 2;
    chi.values = {Cnum::of(Rat(-1), prec), Cnum::of(Rat(1), prec)}; // chi(1)=1, chi(2)=-1
    Cnum b = l_value_bernoulli(1, chi);
    CHECK(small(abs(b - Cnum::of(rat(1, 4), prec)), 1e-70));
    Cnum a = l_value_abel(1, chi);
    CHECK(small(abs(a - Cnum::of(rat(1, 4), prec)), 1e-25));
    // L(0, (1,-1)) = 1/2 by Abel summation of 1 - 1 + 1 - ...
    Cnum z = l_value_abel(0, chi);
    CHECK(small(abs(z - Cnum::of(rat(1, 2), prec)), 1e-25));
    Cnum zb = l_value_bernoulli(0, chi);
    CHECK(small(abs(zb - Cnum::of(rat(1, 2), prec)), 1e-70));
}

TEST_CASE("L(-2n, chi) = 0 for even mean-zero chi") {
    long prec = 256;
    auto g = gamma_seq(2, 1, pt(1, 4), prec);
    for (long n = 1; n <= 4; ++n) CHECK(small(abs(l_value_bernoulli(2 * n, g)), 1e-60));
}

TEST_CASE("Bernoulli and Abel L-values agree on random mean-zero sequences") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> per(2, 8);
    std::uniform_real_distribution<double> uv(-2.0, 2.0);
    long prec = 320;
    for (int it = 0; it < 20; ++it) {
        PeriodicSeq chi;
        chi.period = per(rng);
        Cnum sum(prec);
        for (long j = 0; j < chi.period - 1; ++j) {
            Cnum v = Cnum::of(uv(rng), uv(rng), prec);
            chi.values.push_back(v);
            sum += v;
        }
        chi.values.push_back(-sum); // force mean zero
        long m = static_cast<long>(it % 4);
        Cnum b = l_value_bernoulli(m, chi);
        Cnum a = l_value_abel(m, chi);
        CHECK(small(abs(a - b), 1e-15));
    }
}

TEST_CASE("Gamma(-1/2; x) asymptotics") {
    long prec = 256;
    for (double x : {30.0, 60.0, 120.0}) {
        Real xx = Real::of(x, prec);
        Real lhs = gamma_m12(xx);
        Real rhs = exp(-xx) * pow_si(xx, -1) / sqrt(xx); // x^{-3/2} e^{-x}
        Real ratio = lhs / rhs;
        CHECK(small(abs(ratio - Real::of(1L, prec)), 0.06));
    }
}

TEST_CASE("asymptotic coefficients are finite and a_0 = L(-1,gamma)/N") {
    long prec = 256;
    auto a = asymptotic_coeffs(2, 1, pt(1, 4), 6, prec);
    CHECK(a.size() == 7);
    auto g = gamma_seq(2, 1, pt(1, 4), prec);
    Cnum expect = l_value_bernoulli(1, g) * Cnum::of(rat(1, 2), prec);
    CHECK(small(abs(a[0] - expect), 1e-60));
}

TEST_CASE("upper and lower expansions share coefficients (slopes)") {
    PrecisionContext ctx(192);
    auto rep = theta_limit_checks(2, 1, pt(1, 4), {0.2, 0.1, 0.05, 0.025}, 2, ctx);
    CHECK(std::abs(rep.slopes_upper[0] - 1.0) < 0.2);
    CHECK(std::abs(rep.slopes_upper[1] - 2.0) < 0.2);
    CHECK(std::abs(rep.slopes_lower[0] - 1.0) < 0.2);
    CHECK(std::abs(rep.slopes_lower[1] - 2.0) < 0.2);
}

TEST_CASE("Eichler integral: series vs direct quadrature") {
    PrecisionContext ctx(192);
    Cnum tau = ctx.c(0.3, -0.8);
    Cnum a = eichler_star(4, 1, tau, ctx);
    Cnum b = eichler_star_integral(4, 1, tau, ctx);
    CHECK(small(abs(a - b), 1e-20));
}

TEST_CASE("Warnaar identity as an exact bivariate series, order q^30 A^10") {
    const Rat qord(31);
    const size_t adeg = 11;
    Biv lhs(adeg, qord);
    for (long n = 0; n <= 10; ++n) {
        // (q; q^2)_n (scalar in A)
        QSeries qs = pochhammer(Rat(1), Rat(1), Rat(2), n, qord);
        Biv term = Biv::one(adeg, qord);
        term.a[0] = qs;
        // (A q; q^2)_n = prod_j (1 - A q^{1+2j})
        for (long j = 0; j < n; ++j) {
            Biv f = Biv::one(adeg, qord);
            f.a[1] = QSeries::monomial(Rat(-1), Rat(1 + 2 * j)).truncated_to(qord);
            term = biv_mul(term, f, qord);
        }
        // (Aq)^n
        {
            Biv f(adeg, qord);
            if (static_cast<size_t>(n) < adeg)
                f.a[static_cast<size_t>(n)] = QSeries::monomial(Rat(1), Rat(n)).truncated_to(qord);
            term = biv_mul(term, f, qord);
        }
        // 1/(-Aq; q)_{2n+1} = prod_{j=0}^{2n} sum_m (-A)^m q^{(1+j)m}
        for (long j = 0; j <= 2 * n; ++j) {
            Biv f(adeg, qord);
            for (size_t m = 0; m < adeg; ++m) {
                Rat ex = Rat(1 + j) * static_cast<long>(m);
                if (ex < qord)
                    f.a[m] = QSeries::monomial(m % 2 == 0 ? Rat(1) : Rat(-1), ex).truncated_to(qord);
                else
                    f.a[m] = QSeries::zero_to(qord);
            }
            term = biv_mul(term, f, qord);
        }
        for (size_t i = 0; i < adeg; ++i) lhs.a[i] += term.a[i];
    }
    Biv rhs(adeg, qord);
    for (long n = 0; static_cast<size_t>(n) < adeg; ++n) {
        Rat ex = Rat(n * (n + 1));
        if (ex < qord)
            rhs.a[static_cast<size_t>(n)] =
                QSeries::monomial(n % 2 == 0 ? Rat(1) : Rat(-1), ex).truncated_to(qord);
    }
    for (size_t i = 0; i < adeg; ++i) CHECK(lhs.a[i].eq_to_order(rhs.a[i], Rat(30)));
}

TEST_CASE("sum-of-tails identity (3.11) as exact q-series to order 30") {
    const Rat ord(31);
    QSeries lhs = QSeries::zero_to(ord);
    for (long n = 1; rat(n * n + n, 2) < ord; ++n) lhs.add_term(rat(n * n + n, 2), Rat(n));
    lhs.purge();

    QSeries p_even = pochhammer(Rat(1), Rat(2), Rat(2), -1, ord);  // (q^2; q^2)_inf
    QSeries p_odd = pochhammer(Rat(1), Rat(1), Rat(2), -1, ord);   // (q; q^2)_inf
    QSeries P = p_even * p_odd.inverse();
    QSeries lambert = QSeries::zero_to(ord);
    for (long n = 1; Rat(n) < ord; ++n)
        for (long m = 1; Rat(n * m) < ord; ++m)
            lambert.add_term(Rat(n * m), n % 2 == 0 ? Rat(1) : Rat(-1));
    lambert.purge();
    QSeries rhs = P * lambert;
    for (long n = 0; n <= 40; ++n) {
        QSeries fin = pochhammer(Rat(1), Rat(2), Rat(2), n, ord) *
                      pochhammer(Rat(1), Rat(1), Rat(2), n + 1, ord).inverse();
        rhs += P - fin;
    }
    CHECK(lhs.eq_to_order(rhs, Rat(30)));
}

TEST_CASE("alternating sum-of-tails identity (3.8) as exact q-series to order 30") {
    const Rat ord(31);
    QSeries lhs = QSeries::zero_to(ord);
    for (long n = 1; Rat(n * n) < ord; ++n)
        lhs.add_term(Rat(n * n), n % 2 == 0 ? Rat(4 * n) : Rat(-4 * n));
    lhs.purge();

    QSeries pq = pochhammer_q(ord);                                  // (q;q)_inf
    QSeries pneg = pochhammer(Rat(-1), Rat(1), Rat(1), -1, ord);     // (-q;q)_inf
    QSeries P = pq * pneg.inverse();
    QSeries lambert = QSeries::zero_to(ord);
    for (long n = 1; Rat(n) < ord; ++n)
        for (long m = 0; Rat(n * (2 * m + 1)) < ord; ++m)
            lambert.add_term(Rat(n * (2 * m + 1)), Rat(1));
    lambert.purge();
    QSeries rhs = P.scaled(Rat(-2)) * lambert;
    for (long n = 0; n <= 40; ++n) {
        QSeries fin = pochhammer_q(ord).truncated_to(ord); // placeholder replaced below
        fin = pochhammer(Rat(1), Rat(1), Rat(1), n, ord) *
              pochhammer(Rat(-1), Rat(1), Rat(1), n, ord).inverse();
        rhs += P - fin;
    }
    CHECK(lhs.eq_to_order(rhs, Rat(30)));
}

TEST_CASE("three-way root-of-unity agreement at (2,1,1/4)") {
    PrecisionContext ctx(256);
    auto rv = root_of_unity_value(2, 1, pt(1, 4), ctx);
    CHECK(rv.route == RootRoute::sum_of_tails);
    CHECK(small(rv.vs_limit, 1e-10));
    CHECK(small(rv.vs_lvalue, 1e-10));
}

TEST_CASE("three-way root-of-unity agreement at (2,0,1/2) and (4,1,1/2)") {
    PrecisionContext ctx(256);
    auto r0 = root_of_unity_value(2, 0, pt(1, 2), ctx);
    CHECK(r0.route == RootRoute::ajuo_r0);
    CHECK(small(r0.vs_limit, 1e-10));
    CHECK(small(r0.vs_lvalue, 1e-10));
    auto rw = root_of_unity_value(4, 1, pt(1, 2), ctx);
    CHECK(rw.route == RootRoute::warnaar);
    CHECK(small(rw.vs_limit, 1e-10));
    CHECK(small(rw.vs_lvalue, 1e-10));
}

TEST_CASE("cocycle identity residual (smoke)") {
    PrecisionContext ctx(160);
    Cnum tau = ctx.c(0.3, -0.8);
    Mat2 g{1, 0, 8, 1};
    Real res = cocycle_residual(4, 1, g, tau, ctx);
    CHECK(small(res, 1e-15));
}
