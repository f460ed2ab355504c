#include "qforms/zseries.hpp"

#include <algorithm>

#include "qforms/generators.hpp"

namespace qf {

const QSeries& ZSeries::zero_series() {
    static const QSeries z = QSeries::zero();
    return z;
}

ZSeries::ZSeries(long lead, std::vector<QSeries> coeffs, long xtrunc)
    : lead_(lead), c_(std::move(coeffs)), xtrunc_(xtrunc) {
    if (lead_ + static_cast<long>(c_.size()) > xtrunc_)
        c_.resize(static_cast<size_t>(std::max(xtrunc_ - lead_, 0L)));
    normalize();
}

ZSeries ZSeries::constant(const QSeries& c, long xtrunc) {
    return ZSeries(0, {c}, xtrunc);
}

ZSeries ZSeries::x_power(long k, long xtrunc) {
    return ZSeries(k, {QSeries::constant(1)}, xtrunc);
}

const QSeries& ZSeries::coeff(long j) const {
    if (j >= xtrunc_) throw std::out_of_range("x-coefficient beyond truncation");
    if (j < lead_ || j >= lead_ + static_cast<long>(c_.size())) return zero_series();
    return c_[static_cast<size_t>(j - lead_)];
}

ZSeries& ZSeries::normalize() {
    while (!c_.empty() && c_.front().known_zero() && c_.front().trunc_is_inf()) {
        c_.erase(c_.begin());
        ++lead_;
    }
    if (c_.empty()) lead_ = 0;
    return *this;
}

ZSeries ZSeries::operator-() const {
    ZSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
    long xt = std::min(a.xtrunc_, b.xtrunc_);
    if (a.c_.empty()) return ZSeries(b.lead_, b.c_, xt);
    if (b.c_.empty()) return ZSeries(a.lead_, a.c_, xt);
    long lead = std::min(a.lead_, b.lead_);
    std::vector<QSeries> c(static_cast<size_t>(std::max(xt - lead, 0L)));
    for (long j = lead; j < xt; ++j) {
        QSeries s = QSeries::zero();
        if (j >= a.lead_ && j < a.lead_ + static_cast<long>(a.c_.size()))
            s += a.c_[static_cast<size_t>(j - a.lead_)];
        if (j >= b.lead_ && j < b.lead_ + static_cast<long>(b.c_.size()))
            s += b.c_[static_cast<size_t>(j - b.lead_)];
        c[static_cast<size_t>(j - lead)] = s;
    }
    return ZSeries(lead, std::move(c), xt);
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) { return a + (-b); }

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
    if (a.c_.empty() || b.c_.empty()) {
        long xt = std::min(a.xtrunc_ + b.lead_, b.xtrunc_ + a.lead_);
        return ZSeries::zero_to(xt);
    }
    long lead = a.lead_ + b.lead_;
    long xt = std::min(a.xtrunc_ + b.lead_, b.xtrunc_ + a.lead_);
    std::vector<QSeries> c(static_cast<size_t>(std::max(xt - lead, 0L)));
    for (auto& s : c) s = QSeries::zero();
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].known_zero() && a.c_[i].trunc_is_inf()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            long pos = a.lead_ + static_cast<long>(i) + b.lead_ + static_cast<long>(j);
            if (pos >= xt) break;
            c[static_cast<size_t>(pos - lead)] += a.c_[i] * b.c_[j];
        }
    }
    return ZSeries(lead, std::move(c), xt);
}

ZSeries ZSeries::scaled(const QSeries& c) const {
    ZSeries r = *this;
    for (auto& s : r.c_) s = s * c;
    return r.normalize();
}

ZSeries ZSeries::scaled(const Rat& c) const {
    ZSeries r = *this;
    for (auto& s : r.c_) s = s.scaled(c);
    return r.normalize();
}

ZSeries ZSeries::shifted_x(long k) const {
    ZSeries r = *this;
    r.lead_ += k;
    r.xtrunc_ += k;
    return r;
}

ZSeries ZSeries::inverse() const {
    if (c_.empty()) throw not_invertible("ZSeries inverse: no known coefficients");
    long span = xtrunc_ - lead_;
    std::vector<QSeries> d(static_cast<size_t>(span));
    QSeries ic0 = c_[0].inverse();
    d[0] = ic0;
    for (long k = 1; k < span; ++k) {
        QSeries s = QSeries::zero();
        for (long j = 1; j <= k; ++j) {
            const QSeries& aj =
                j < static_cast<long>(c_.size()) ? c_[static_cast<size_t>(j)] : zero_series();
            if (aj.known_zero() && aj.trunc_is_inf()) continue;
            s += aj * d[static_cast<size_t>(k - j)];
        }
        d[static_cast<size_t>(k)] = -(s * ic0);
    }
    return ZSeries(-lead_, std::move(d), span - lead_);
}

ZSeries ZSeries::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    if (e == 0) return ZSeries(0, {QSeries::constant(1)}, xtrunc_ - lead_);
    ZSeries base = *this;
    ZSeries acc;
    bool first = true;
    long k = e;
    while (k) {
        if (k & 1) {
            acc = first ? base : acc * base;
            first = false;
        }
        if (k >>= 1) base = base * base;
    }
    return acc;
}

ZSeries ZSeries::dx() const {
    std::vector<QSeries> c;
    c.reserve(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        long j = lead_ + static_cast<long>(i);
        c.push_back(c_[i].scaled(Rat(j)));
    }
    return ZSeries(lead_ - 1, std::move(c), xtrunc_ - 1);
}

ZSeries ZSeries::dq() const {
    std::vector<QSeries> c;
    c.reserve(c_.size());
    for (auto& s : c_) c.push_back(s.dq());
    return ZSeries(lead_, std::move(c), xtrunc_);
}

ZSeries ZSeries::heat(long n_index) const {
    return dq().scaled(Rat(2 * n_index)) + dx().dx();
}

bool ZSeries::even_in_x(const Rat& q_order) const {
    for (size_t i = 0; i < c_.size(); ++i) {
        long j = lead_ + static_cast<long>(i);
        if (j % 2 != 0 && !c_[i].eq_to_order(QSeries::zero(), q_order)) return false;
    }
    return true;
}

bool ZSeries::odd_in_x(const Rat& q_order) const {
    for (size_t i = 0; i < c_.size(); ++i) {
        long j = lead_ + static_cast<long>(i);
        if (j % 2 == 0 && !c_[i].eq_to_order(QSeries::zero(), q_order)) return false;
    }
    return true;
}

ZSeries theta_z0_real(long x_order, const Rat& q_order) {
    // x eta^3 exp(-2 sum_{k>=1} G_{2k} x^{2k} / (2k)!)
    std::vector<QSeries> arg(static_cast<size_t>(x_order + 1));
    for (auto& s : arg) s = QSeries::zero();
    for (long k = 1; 2 * k <= x_order; ++k) {
        Rat f = Rat(-2) / Rat(factorial(static_cast<unsigned long>(2 * k)));
        arg[static_cast<size_t>(2 * k)] = eisenstein(2 * k, q_order).scaled(f);
    }
    ZSeries A(0, std::move(arg), x_order + 1);
    ZSeries expA(0, {QSeries::constant(1).truncated_to(q_order)}, x_order + 1);
    ZSeries term(0, {QSeries::constant(1)}, x_order + 1);
    for (long m = 1; 2 * m <= x_order; ++m) {
        term = term * A;
        expA = expA + term.scaled(Rat(1) / Rat(factorial(static_cast<unsigned long>(m))));
    }
    QSeries eta3 = eta(q_order).pow(3);
    return expA.scaled(eta3).shifted_x(1);
}

namespace {

// series of exp(a x) to the given x order, exact coefficients
ZSeries exp_x(const Rat& a, long x_order, const std::optional<Rat>& q_trunc) {
    std::vector<QSeries> c(static_cast<size_t>(x_order + 1));
    Rat p(1);
    for (long j = 0; j <= x_order; ++j) {
        QSeries s = QSeries::constant(p / Rat(factorial(static_cast<unsigned long>(j))));
        if (q_trunc) s = s.truncated_to(*q_trunc);
        c[static_cast<size_t>(j)] = s;
        p *= a;
    }
    return ZSeries(0, std::move(c), x_order + 1);
}

} // namespace

ZSeries theta_half(long x_order, const Rat& q_order) {
    // -zeta^{-1/2} q^{1/8} (q)_inf (-zeta)_inf (-zeta^{-1} q)_inf, zeta = e^x
    ZSeries prod = exp_x(rat(-1, 2), x_order, q_order)
                       .scaled(QSeries::monomial(Rat(-1), rat(1, 8)));
    prod = prod.scaled(pochhammer_q(q_order));
    Int nmax = ceil_rat(q_order) + 1;
    ZSeries one = ZSeries::constant(QSeries::constant(1), x_order + 1);
    for (long j = 0; Rat(j) < q_order && j <= nmax.get_si(); ++j) {
        ZSeries f1 = exp_x(Rat(1), x_order, q_order).scaled(QSeries::monomial(Rat(1), Rat(j)));
        prod = prod * (one + f1);
        ZSeries f2 =
            exp_x(Rat(-1), x_order, q_order).scaled(QSeries::monomial(Rat(1), Rat(j + 1)));
        prod = prod * (one + f2);
    }
    return prod;
}

namespace {

ZSeries bilateral(long x_order, const Rat& q_order, bool alternate, const Rat& global) {
    // global * sum_n (+-1)^n q^{(n+1/2)^2/2} e^{x(n+1/2)}
    std::vector<QSeries> c(static_cast<size_t>(x_order + 1));
    for (auto& s : c) s = QSeries::zero_to(q_order);
    Int b = sqrt_ceil(2 * q_order) + 1;
    for (long n = -b.get_si() - 1; n <= b.get_si(); ++n) {
        Rat h = Rat(n) + rat(1, 2);
        Rat expo = h * h / 2;
        if (expo >= q_order) continue;
        Rat sign = (alternate && (n % 2 != 0)) ? Rat(-1) : Rat(1);
        Rat p(1);
        for (long j = 0; j <= x_order; ++j) {
            c[static_cast<size_t>(j)].add_term(
                expo, global * sign * p / Rat(factorial(static_cast<unsigned long>(j))));
            p *= h;
        }
    }
    for (auto& s : c) s.purge();
    return ZSeries(0, std::move(c), x_order + 1);
}

} // namespace

ZSeries theta_z0_real_bilateral(long x_order, const Rat& q_order) {
    return bilateral(x_order, q_order, true, Rat(1));
}

ZSeries theta_half_bilateral(long x_order, const Rat& q_order) {
    return bilateral(x_order, q_order, false, Rat(-1));
}

} // namespace qf
