#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qforms/theta_partial.hpp"

using namespace qf;

namespace {

QSeries tilde(long N, long r, int nu, const Rat& order) {
    return theta_series({N, Rat(r), nu, ThetaVariant::tilde}, order);
}

QSeries partial(long N, const Rat& r, int nu, const Rat& order) {
    return theta_series({N, r, nu, ThetaVariant::partial}, order);
}

} // namespace

TEST_CASE("special vanishing thetas") {
    QSeries a = theta_series({1, Rat(0), 0, ThetaVariant::full}, Rat(30));
    CHECK(a.eq_to_order(QSeries::zero(), Rat(30)));
    for (long r = 0; r <= 3; ++r) {
        QSeries b = tilde(2, r, 1, Rat(30));
        CHECK(b.eq_to_order(QSeries::zero(), Rat(30)));
    }
}

TEST_CASE("partial theta leading terms for N=2, r=1") {
    QSeries t = partial(2, Rat(1), 1, Rat(8));
    CHECK(t.coeff(Rat(1, 4)) == Rat(1, 2));
    CHECK(t.coeff(Rat(9, 4)) == Rat(3, 2));
    CHECK(t.coeff(Rat(25, 4)) == Rat(5, 2));
    CHECK(t.terms().size() == 3);
}

TEST_CASE("shift and negation identities to order 30") {
    for (long N = 2; N <= 8; N += 2) {
        for (long r = -2 * N; r <= 2 * N; ++r) {
            for (int nu = 0; nu <= 1; ++nu) {
                QSeries a = tilde(N, r + N, nu, Rat(30));
                QSeries b = tilde(N, r, nu, Rat(30));
                CHECK(a.eq_to_order(b, Rat(30)));
                QSeries c = tilde(N, -r, nu, Rat(30));
                QSeries d = nu == 1 ? -b : b;
                CHECK(c.eq_to_order(d, Rat(30)));
            }
        }
    }
}

TEST_CASE("theta sum and difference") {
    for (long N = 2; N <= 6; N += 2) {
        for (long r = 0; r < N; ++r) {
            auto [plus, minus] = theta_sum_diff(N, r, Rat(25));
            QSeries vt = tilde(N, r, 1, Rat(25));
            QSeries corr = QSeries::monomial(rat(r, N), rat(r * r, 2 * N));
            CHECK((minus - vt).eq_to_order(corr, Rat(25)));
        }
        // every summand counted twice at r = 0
        auto [plus0, minus0] = theta_sum_diff(N, 0, Rat(25));
        CHECK(plus0.eq_to_order(partial(N, Rat(0), 1, Rat(25)).scaled(Rat(2)), Rat(25)));
        CHECK(minus0.eq_to_order(QSeries::zero(), Rat(25)));
    }
}

TEST_CASE("Theta^+ matches the two-branch bilateral fold (N=2, r=1)") {
    // (1/N) sum over n >= -r, n = +-r mod N of n q^{n^2/2N}, branch by branch
    Rat order(12);
    QSeries brute = QSeries::zero_to(order);
    for (long start : {1L, -1L}) { // n = r + Nk resp. n = -r + Nk, k >= 0
        for (long n = start; rat(n * n, 4) < order || n <= 0; n += 2)
            if (rat(n * n, 4) < order) brute.add_term(rat(n * n, 4), rat(n, 2));
    }
    brute.purge();
    auto [plus, minus] = theta_sum_diff(2, 1, order);
    CHECK(plus.eq_to_order(brute, order));
    CHECK(plus.coeff(Rat(1, 4)) == Rat(1, 2));
    CHECK(plus.coeff(Rat(9, 4)) == 3);
}

TEST_CASE("theta_sum_diff rejects out-of-range r") {
    CHECK_THROWS(theta_sum_diff(4, 4, Rat(10)));
    CHECK_THROWS(theta_sum_diff(4, -1, Rat(10)));
}

TEST_CASE("quasimodular kernel, degenerate N") {
    auto k1 = quasimodular_kernel(1, Rat(20));
    CHECK(k1.degenerate);
    CHECK(k1.f.size() == 1);
    auto k2 = quasimodular_kernel(2, Rat(20));
    CHECK(k2.degenerate);
    CHECK(k2.f.size() == 1);
    CHECK(k2.f[0].identical(QSeries::constant(1)));
}

TEST_CASE("quasimodular kernel annihilates all residues (even and odd N)") {
    for (long N : {3L, 4L, 5L, 6L}) {
        Rat order(26);
        auto ker = quasimodular_kernel(N, order);
        long delta = (N % 2 == 0) ? 1 : 0;
        CHECK(static_cast<long>(ker.f.size()) == (N - 1 - delta) / 2 + 1);
        CHECK(ker.f.back().identical(QSeries::constant(1)));
        CHECK(ker.certified_order >= Rat(20));
        // apply the relation to every residue class directly
        for (long r = 0; r < N; ++r) {
            ThetaSpec sp;
            sp.N = N;
            sp.r = Rat(r);
            sp.nu = static_cast<int>(delta);
            sp.variant = (N % 2 == 0) ? ThetaVariant::tilde : ThetaVariant::full;
            QSeries v = theta_series(sp, order);
            QSeries resid = QSeries::zero();
            for (size_t j = 0; j < ker.f.size(); ++j)
                resid += ker.f[j] * kernel_column(N, static_cast<long>(j), v);
            CHECK(resid.known_zero());
            if (!resid.trunc_is_inf()) CHECK(resid.trunc() >= Rat(20));
        }
    }
}

TEST_CASE("N=4 kernel has 2 entries, residual certified past q^25") {
    auto ker = quasimodular_kernel(4, Rat(32));
    CHECK(ker.f.size() == 2);
    QSeries v = tilde(4, 1, 1, Rat(32));
    QSeries resid = ker.f[0] * v + serre_tower(1, v);
    CHECK(resid.known_zero());
    CHECK(resid.trunc() >= Rat(25));
}

TEST_CASE("N=3 odd kernel certified past q^25") {
    auto ker = quasimodular_kernel(3, Rat(32));
    CHECK(ker.f.size() == 2);
    for (long r = 0; r < 3; ++r) {
        QSeries v = theta_series({3, Rat(r), 0, ThetaVariant::full}, Rat(32));
        QSeries resid = ker.f[0] * v + ker.f[1] * v.dq();
        CHECK(resid.known_zero());
        if (!resid.trunc_is_inf()) CHECK(resid.trunc() >= Rat(25));
    }
}

TEST_CASE("determinant ratio is a nonzero constant with the Vandermonde value") {
    for (long N : {4L, 6L}) {
        auto res = tn_determinant_ratio(N, Rat(26));
        Rat alpha(1);
        long dim = N / 2 - 1;
        for (long m = 1; m <= dim; ++m) alpha *= rat(m, N);
        for (long k = 1; k <= dim; ++k)
            for (long m = k + 1; m <= dim; ++m) alpha *= rat(m * m - k * k, 2 * N);
        CHECK(res.constant == alpha);
    }
}

TEST_CASE("determinant valuation self-consistency") {
    for (long N : {4L, 6L, 8L}) {
        long dim = N / 2 - 1;
        std::vector<std::vector<QSeries>> m(static_cast<size_t>(dim));
        for (long r = 1; r <= dim; ++r) {
            QSeries v = tilde(N, r, 1, Rat(24));
            auto& row = m[static_cast<size_t>(r - 1)];
            for (long j = 0; j < dim; ++j) row.push_back(serre_tower(j, v));
        }
        QSeries det = series_det(m);
        Rat expect(0);
        for (long j = 1; j <= dim; ++j) expect += rat(j * j, 2 * N);
        CHECK(det.val() == expect);
        CHECK(expect == rat((N - 1) * (N - 2), 48)); // eta-power valuation
    }
}
