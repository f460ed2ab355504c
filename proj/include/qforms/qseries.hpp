#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qforms/rational.hpp"

namespace qf {

// Exact truncated Puiseux series in q with rational coefficients.
//
// A value represents  sum_n  c_n q^(n/grid) + O(q^trunc) : every stored
// exponent satisfies n/grid < trunc, no zero coefficients are stored, and
// coefficients at exponents >= trunc are unspecified.  trunc == nullopt
// means the series is exact (a Laurent polynomial in q^(1/grid)).
class QSeries {
public:
    QSeries() = default;

    static QSeries zero() { return QSeries(); }
    static QSeries zero_to(const Rat& order);
    static QSeries constant(const Rat& c);
    static QSeries monomial(const Rat& c, const Rat& expo);

    // Builder: accumulate c * q^expo. Does not purge; call purge() when done.
    void add_term(const Rat& expo, const Rat& c);

    long grid() const { return grid_; }
    const std::map<long, Rat>& terms() const { return terms_; }

    bool trunc_is_inf() const { return !trunc_.has_value(); }
    const Rat& trunc() const;
    std::optional<Rat> trunc_opt() const { return trunc_; }
    void set_trunc(std::optional<Rat> t);

    bool known_zero() const { return terms_.empty(); }

    // Lowest stored exponent; for an empty truncated series this is trunc
    // (the conservative valuation bound). Throws for the exact zero series.
    Rat val() const;

    Rat coeff(const Rat& expo) const;
    Rat exponent_of(long key) const { return rat(key, grid_); }

    // Removes zero coefficients and terms at/above trunc; shrinks the grid to
    // the coarsest one representing the support and the truncation.
    QSeries& purge();

    // Re-express on a finer grid g (g must be a multiple of a compatible grid).
    QSeries regridded(long g) const;

    QSeries truncated_to(const Rat& order) const;

    QSeries operator-() const;
    QSeries& operator+=(const QSeries& b);
    QSeries& operator-=(const QSeries& b);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries& operator*=(const QSeries& b) { return *this = *this * b; }

    QSeries scaled(const Rat& c) const;
    QSeries shifted(const Rat& expo) const; // multiply by q^expo

    // Multiplicative inverse. Requires a nonzero leading coefficient and a
    // finite truncation; result is valid to order trunc - 2*val.
    QSeries inverse() const;

    QSeries pow(long e) const;

    // q d/dq : multiplies each coefficient by its exponent.
    QSeries dq() const;

    bool eq_to_order(const QSeries& b, const Rat& order) const;
    bool identical(const QSeries& b) const;

    std::string str(int max_terms = 12) const;

private:
    long grid_ = 1;
    std::map<long, Rat> terms_;
    std::optional<Rat> trunc_;

    void regrid_inplace(long g);
    static long common_grid(const QSeries& a, const QSeries& b);
};

// min of two truncation bounds (nullopt = +infinity)
std::optional<Rat> trunc_min(const std::optional<Rat>& a, const std::optional<Rat>& b);

// i^ipow * series with real rational coefficients; canonical form keeps
// ipow in {0,1} by folding i^2 = -1 into the series sign.
struct UnitSeries {
    int ipow = 0;
    QSeries s;

    UnitSeries() = default;
    UnitSeries(int k, QSeries v) : ipow(k), s(std::move(v)) { normalize(); }

    void normalize();
    UnitSeries operator*(const UnitSeries& b) const;
    UnitSeries operator-() const { return UnitSeries(ipow + 2, s); }
    UnitSeries scaled(const Rat& c) const { return UnitSeries(ipow, s.scaled(c)); }
    bool eq_to_order(const UnitSeries& b, const Rat& order) const;
    std::string str(int max_terms = 12) const;
};

} // namespace qf
