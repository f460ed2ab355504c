#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qforms/chi.hpp"
#include "qforms/lattice.hpp"

using namespace qf;

TEST_CASE("delta_e and rho_fold") {
    CHECK(delta_e(3) == 0);
    CHECK(delta_e(4) == 1);
    CHECK(rho_fold(2, Rat(1)) == 1);       // boundary r = N/2 takes the first branch
    CHECK(rho_fold(3, rat(1, 2)) == rat(5, 2));
    CHECK(rho_fold(4, Rat(5)) == 5);
    CHECK(rho_fold(4, Rat(-1)) == 5);
    CHECK_THROWS_AS((void)rho_fold(3, Rat(1)), not_in_coset);
}

TEST_CASE("term count of the mixed decomposition") {
    for (long N : {1L, 2L, 3L, 4L, 5L}) {
        for (long M : {0L, 1L}) {
            CoefficientSpec spec;
            spec.M = M;
            spec.N = N;
            spec.r = rat(N, 2) + 1;
            spec.q_order = Rat(6);
            auto terms = mixed_decomposition(spec);
            CHECK(static_cast<long>(terms.size()) == (N - 1 - delta_e(N)) / 2 + M + 1);
        }
    }
}

TEST_CASE("decomposition sums back to the coefficient bit-exactly") {
    CoefficientSpec spec;
    spec.M = 0;
    spec.N = 4;
    spec.r = Rat(2);
    spec.q_order = Rat(10);
    auto terms = mixed_decomposition(spec);
    CHECK(terms.size() == 2); // j = 0, 1 with delta_e = 1
    UnitSeries direct = chi_coefficient(spec);
    UnitSeries summed = sum_mixed(terms);
    CHECK(summed.eq_to_order(direct, Rat(10)));
}

TEST_CASE("(0,1,r): Theorem-1.4 pipeline equals the closed N=1 formula") {
    for (long k = -2; k <= 3; ++k) {
        Rat r = rat(2 * k + 1, 2); // r in 1/2 + Z
        CoefficientSpec spec;
        spec.M = 0;
        spec.N = 1;
        spec.r = r;
        spec.q_order = Rat(20);
        UnitSeries a = chi_coefficient(spec);
        UnitSeries b = n1_coefficient(r, Rat(20));
        CHECK(a.eq_to_order(b, Rat(20)));
    }
}

TEST_CASE("(0,2,1): Theorem-1.4 pipeline equals the lattice formula") {
    CoefficientSpec spec;
    spec.M = 0;
    spec.N = 2;
    spec.r = Rat(1);
    spec.q_order = Rat(20);
    UnitSeries a = chi_coefficient(spec);
    auto lc = lattice_coefficient(2, Rat(1), Rat(20));
    CHECK(a.eq_to_order(lc.chi, Rat(20)));
}

TEST_CASE("cross-theorem equality for small N and a window of r") {
    for (long N : {2L, 3L}) {
        for (long j = -1; j <= 1; ++j) {
            Rat r = rat(N, 2) + j;
            CoefficientSpec spec;
            spec.M = 0;
            spec.N = N;
            spec.r = r;
            spec.q_order = Rat(12);
            UnitSeries a = chi_coefficient(spec);
            auto lc = lattice_coefficient(N, r, Rat(12));
            CHECK(a.eq_to_order(lc.chi, Rat(12)));
        }
    }
}

TEST_CASE("sign factor flips consistently across r = N/2") {
    // both pipelines agree for r above and below N/2 (folding rho(r))
    for (long j : {-2L, -1L, 0L, 1L, 2L}) {
        Rat r = Rat(1) + j; // N = 2: integers around N/2 = 1
        CoefficientSpec spec;
        spec.M = 0;
        spec.N = 2;
        spec.r = r;
        spec.q_order = Rat(10);
        UnitSeries a = chi_coefficient(spec);
        auto lc = lattice_coefficient(2, r, Rat(10));
        CHECK(a.eq_to_order(lc.chi, Rat(10)));
    }
}

TEST_CASE("odd phi-index is rejected upstream of the CLI") {
    CoefficientSpec spec;
    spec.M = -1;
    CHECK_THROWS(mixed_decomposition(spec));
}
