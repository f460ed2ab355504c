#include "qforms/generators.hpp"

namespace qf {

QSeries pochhammer_q(const Rat& order) {
    QSeries r = QSeries::constant(1).truncated_to(order);
    Int nmax = ceil_rat(order);
    for (long n = 1; Rat(n) < order && n <= nmax; ++n) {
        QSeries f = QSeries::constant(1);
        f.add_term(Rat(n), Rat(-1));
        f.purge();
        r = r * f;
    }
    return r;
}

QSeries pochhammer(const Rat& a, const Rat& s, const Rat& step, long count, const Rat& order) {
    if (step <= 0 && count < 0)
        throw std::invalid_argument("unbounded pochhammer needs positive step");
    QSeries r = QSeries::constant(1).truncated_to(order);
    Rat e = s;
    long j = 0;
    while (count < 0 ? e < order : j < count) {
        QSeries f = QSeries::constant(1);
        f.add_term(e, -a);
        f.purge();
        r = r * f;
        e += step;
        ++j;
    }
    return r;
}

QSeries eta(const Rat& order) {
    if (order <= Rat(1, 24)) throw std::invalid_argument("eta order must exceed 1/24");
    return pochhammer_q(order - Rat(1, 24)).shifted(Rat(1, 24));
}

QSeries eisenstein(long k, const Rat& order) {
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("eisenstein needs even k >= 2");
    auto B = bernoulli_numbers(static_cast<unsigned long>(k));
    QSeries r = QSeries::constant(-B[static_cast<size_t>(k)] / Rat(2 * k)).truncated_to(order);
    Int nmax = ceil_rat(order);
    for (long n = 1; Rat(n) < order && n <= nmax; ++n) {
        Rat sigma(0);
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) sigma += pow_rat(Rat(d), k - 1);
        r.add_term(Rat(n), sigma);
    }
    r.purge();
    return r;
}

QSeries e2(const Rat& order) { return eisenstein(2, order).scaled(Rat(-24)); }

QSeries serre(const Rat& k, const QSeries& a) {
    std::optional<Rat> t = a.trunc_opt();
    Rat ord = t ? *t : Rat(40); // exact input: pick a default working order
    return a.dq() - e2(ord).scaled(k / 12) * a;
}

QSeries serre_tower(long n, const QSeries& a) {
    QSeries r = a;
    for (long j = 0; j < n; ++j) r = serre(rat(4 * j + 3, 2), r);
    return r;
}

} // namespace qf
