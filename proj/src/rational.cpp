#include "qforms/rational.hpp"

#include <cctype>

namespace qf {

std::vector<Rat> bernoulli_numbers(unsigned long n) {
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    std::vector<Rat> b(n + 1);
    b[0] = 1;
    for (unsigned long m = 1; m <= n; ++m) {
        Rat s(0);
        for (unsigned long j = 0; j < m; ++j) s += Rat(binomial(m + 1, j)) * b[j];
        b[m] = -s / Rat(Int(m) + 1);
    }
    return b;
}

Rat bernoulli_poly(unsigned long m, const Rat& x) {
    auto B = bernoulli_numbers(m);
    Rat r(0);
    Rat xp(1);
    // B_m(x) = sum_k C(m,k) B_{m-k} x^k
    for (unsigned long k = 0; k <= m; ++k) {
        r += Rat(binomial(m, k)) * B[m - k] * xp;
        xp *= x;
    }
    return r;
}

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw usage_error("empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '/' || ch == '-' || ch == '+'))
            throw usage_error("rational literal must be p or p/q, got '" + s + "'");
    }
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw usage_error("cannot parse rational '" + s + "'");
    if (r.get_den() == 0) throw usage_error("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string rat_str(const Rat& x) { return x.get_str(); }

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

} // namespace qf
