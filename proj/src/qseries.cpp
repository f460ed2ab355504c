#include "qforms/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace qf {

namespace {
constexpr long kGridBound = 1LL << 24;
}

std::optional<Rat> trunc_min(const std::optional<Rat>& a, const std::optional<Rat>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
}

QSeries QSeries::zero_to(const Rat& order) {
    QSeries s;
    s.set_trunc(order);
    return s;
}

QSeries QSeries::constant(const Rat& c) {
    QSeries s;
    if (c != 0) s.terms_[0] = c;
    return s;
}

QSeries QSeries::monomial(const Rat& c, const Rat& expo) {
    QSeries s;
    s.add_term(expo, c);
    s.purge();
    return s;
}

void QSeries::add_term(const Rat& expo, const Rat& c) {
    Rat e = expo;
    e.canonicalize();
    long den = e.get_den().fits_slong_p() ? e.get_den().get_si() : 0;
    if (den == 0) throw grid_overflow("exponent denominator too large");
    long g = lcm_ll(grid_, den);
    if (g > kGridBound) throw grid_overflow("exponent grid exceeds configured bound");
    regrid_inplace(g);
    Rat scaled_num = e * g;
    if (!scaled_num.get_num().fits_slong_p())
        throw grid_overflow("exponent numerator too large for grid");
    terms_[scaled_num.get_num().get_si()] += c;
}

const Rat& QSeries::trunc() const {
    if (!trunc_) throw std::logic_error("trunc() on exact series");
    return *trunc_;
}

void QSeries::set_trunc(std::optional<Rat> t) {
    trunc_ = std::move(t);
    if (trunc_) {
        // drop unspecified terms
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (rat(it->first, grid_) >= *trunc_)
                it = terms_.erase(it);
            else
                ++it;
        }
    }
}

Rat QSeries::val() const {
    if (!terms_.empty()) return rat(terms_.begin()->first, grid_);
    if (trunc_) return *trunc_;
    throw std::logic_error("val() of exact zero series");
}

Rat QSeries::coeff(const Rat& expo) const {
    Rat e = expo;
    e.canonicalize();
    Rat k = e * grid_;
    if (k.get_den() != 1) return Rat(0);
    if (!k.get_num().fits_slong_p()) return Rat(0);
    auto it = terms_.find(k.get_num().get_si());
    return it == terms_.end() ? Rat(0) : it->second;
}

QSeries& QSeries::purge() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || (trunc_ && rat(it->first, grid_) >= *trunc_))
            it = terms_.erase(it);
        else
            ++it;
    }
    // coarsen the grid as far as the support allows (trunc is an exact
    // rational independent of the grid)
    long g = 0;
    for (auto& [n, c] : terms_) g = gcd_ll(g, n < 0 ? -n : n);
    if (g == 0) g = grid_;
    long keep = gcd_ll(g, grid_);
    if (keep > 1 && grid_ % keep == 0) {
        long ng = grid_ / keep;
        std::map<long, Rat> nt;
        for (auto& [n, c] : terms_) nt[n / keep] = c;
        grid_ = ng;
        terms_ = std::move(nt);
    }
    if (terms_.empty()) grid_ = 1;
    return *this;
}

void QSeries::regrid_inplace(long g) {
    if (g == grid_) return;
    if (g % grid_ != 0) throw std::logic_error("regrid to incompatible grid");
    long f = g / grid_;
    std::map<long, Rat> nt;
    for (auto& [n, c] : terms_) nt[n * f] = c;
    grid_ = g;
    terms_ = std::move(nt);
}

QSeries QSeries::regridded(long g) const {
    QSeries r = *this;
    long l = lcm_ll(grid_, g);
    if (l > kGridBound) throw grid_overflow("exponent grid exceeds configured bound");
    r.regrid_inplace(l);
    return r;
}

QSeries QSeries::truncated_to(const Rat& order) const {
    QSeries r = *this;
    auto t = trunc_min(r.trunc_, order);
    r.set_trunc(t);
    return r;
}

long QSeries::common_grid(const QSeries& a, const QSeries& b) {
    long g = lcm_ll(a.grid_, b.grid_);
    if (g > kGridBound) throw grid_overflow("exponent grid exceeds configured bound");
    return g;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& [n, c] : r.terms_) c = -c;
    return r;
}

QSeries& QSeries::operator+=(const QSeries& b) {
    long g = common_grid(*this, b);
    regrid_inplace(g);
    QSeries bb = b;
    bb.regrid_inplace(g);
    for (auto& [n, c] : bb.terms_) terms_[n] += c;
    trunc_ = trunc_min(trunc_, bb.trunc_);
    purge();
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& b) { return *this += -b; }

QSeries operator*(const QSeries& a, const QSeries& b) {
    // exact zero absorbs everything
    if (a.known_zero() && a.trunc_is_inf()) return QSeries::zero();
    if (b.known_zero() && b.trunc_is_inf()) return QSeries::zero();

    std::optional<Rat> t;
    if (!a.trunc_is_inf()) {
        Rat bound = a.trunc() + b.val();
        t = trunc_min(t, bound);
    }
    if (!b.trunc_is_inf()) {
        Rat bound = b.trunc() + a.val();
        t = trunc_min(t, bound);
    }

    long g = lcm_ll(a.grid(), b.grid());
    QSeries aa = a.regridded(g), bb = b.regridded(g);
    std::optional<long> cutoff;
    if (t) {
        Rat k = *t * g;
        cutoff = ceil_rat(k).fits_slong_p() ? std::optional<long>(ceil_rat(k).get_si())
                                            : std::nullopt;
    }
    std::vector<std::pair<long, Rat>> av(aa.terms().begin(), aa.terms().end());
    std::vector<std::pair<long, Rat>> bv(bb.terms().begin(), bb.terms().end());
    std::map<long, Rat> acc;
    for (auto& [na, ca] : av) {
        for (auto& [nb, cb] : bv) {
            long n = na + nb;
            if (cutoff && n >= *cutoff && Rat(n, g) >= *t) break; // bv sorted ascending
            acc[n] += ca * cb;
        }
    }
    QSeries out;
    out = QSeries();
    out.grid_ = g;
    out.terms_ = std::move(acc);
    out.trunc_ = t;
    out.purge();
    return out;
}

QSeries QSeries::scaled(const Rat& c) const {
    if (c == 0) {
        QSeries r = zero();
        r.trunc_ = trunc_;
        return r;
    }
    QSeries r = *this;
    for (auto& [n, v] : r.terms_) v *= c;
    return r;
}

QSeries QSeries::shifted(const Rat& expo) const {
    Rat e = expo;
    e.canonicalize();
    long den = e.get_den().fits_slong_p() ? e.get_den().get_si() : 0;
    if (den == 0) throw grid_overflow("shift exponent denominator too large");
    long g = lcm_ll(grid_, den);
    if (g > kGridBound) throw grid_overflow("exponent grid exceeds configured bound");
    QSeries r = regridded(g);
    Rat k = e * g;
    long dk = k.get_num().get_si();
    std::map<long, Rat> nt;
    for (auto& [n, c] : r.terms_) nt[n + dk] = c;
    r.terms_ = std::move(nt);
    if (r.trunc_) *r.trunc_ += e;
    r.purge();
    return r;
}

QSeries QSeries::inverse() const {
    if (terms_.empty()) throw not_invertible("cannot invert a series with no known terms");
    if (!trunc_) throw not_invertible("inverse requires a finite truncation; truncate first");
    Rat v = val();
    Rat rel_order = *trunc_ - v; // validity span of the shifted series
    if (rel_order <= 0) throw not_invertible("truncation too low to invert");

    QSeries A = shifted(-v); // val 0, constant coefficient nonzero
    A.purge();
    // dense long division on the lattice generated by the support
    long g = A.grid_;
    long step = 0;
    for (auto& [n, c] : A.terms_) step = gcd_ll(step, n);
    if (step == 0) step = 1;
    // span in units of step
    Rat span_r = rel_order * g / step;
    Int span_i = ceil_rat(span_r);
    if (!span_i.fits_slong_p() || span_i.get_si() > 4'000'000)
        throw grid_overflow("inverse: dense span too large");
    long m = span_i.get_si();
    std::vector<Rat> Ad(static_cast<size_t>(m), Rat(0));
    for (auto& [n, c] : A.terms_) {
        long k = n / step;
        if (k < m) Ad[static_cast<size_t>(k)] = c;
    }
    const Rat c0 = Ad[0];
    if (c0 == 0) throw not_invertible("leading coefficient is zero");
    std::vector<Rat> B(static_cast<size_t>(m), Rat(0));
    Rat ic0 = 1 / c0;
    B[0] = ic0;
    for (long k = 1; k < m; ++k) {
        Rat s(0);
        for (long j = 1; j <= k; ++j) {
            if (Ad[static_cast<size_t>(j)] != 0 && B[static_cast<size_t>(k - j)] != 0)
                s += Ad[static_cast<size_t>(j)] * B[static_cast<size_t>(k - j)];
        }
        if (s != 0) B[static_cast<size_t>(k)] = -s * ic0;
    }
    QSeries out;
    out.grid_ = g;
    for (long k = 0; k < m; ++k) {
        if (B[static_cast<size_t>(k)] != 0) out.terms_[k * step] = B[static_cast<size_t>(k)];
    }
    out.trunc_ = rel_order;
    out.purge();
    return out.shifted(-v); // total trunc: rel_order - v = trunc - 2*val
}

QSeries QSeries::pow(long e) const {
    if (e == 0) return constant(1);
    if (e < 0) return inverse().pow(-e);
    QSeries base = *this;
    QSeries r = constant(1);
    long k = e;
    while (k) {
        if (k & 1) r = r * base;
        if (k >>= 1) base = base * base;
    }
    return r;
}

QSeries QSeries::dq() const {
    QSeries r = *this;
    for (auto& [n, c] : r.terms_) c *= rat(n, grid_);
    r.purge();
    return r;
}

bool QSeries::eq_to_order(const QSeries& b, const Rat& order) const {
    if (trunc_ && *trunc_ < order) return false;
    if (!b.trunc_is_inf() && b.trunc() < order) return false;
    QSeries d = *this - b;
    for (auto& [n, c] : d.terms_) {
        if (rat(n, d.grid()) < order && c != 0) return false;
    }
    return true;
}

bool QSeries::identical(const QSeries& b) const {
    if (trunc_.has_value() != b.trunc_.has_value()) return false;
    if (trunc_ && *trunc_ != *b.trunc_) return false;
    long g = lcm_ll(grid_, b.grid_);
    QSeries aa = regridded(g), bb = b.regridded(g);
    return aa.terms_ == bb.terms_;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream os;
    int k = 0;
    if (terms_.empty()) os << "0";
    for (auto& [n, c] : terms_) {
        if (k++ >= max_terms) {
            os << " + ...";
            break;
        }
        if (k > 1) os << " + ";
        os << "(" << c.get_str() << ")q^(" << rat(n, grid_).get_str() << ")";
    }
    if (trunc_) os << " + O(q^(" << trunc_->get_str() << "))";
    return os.str();
}

void UnitSeries::normalize() {
    ipow %= 4;
    if (ipow < 0) ipow += 4;
    if (ipow >= 2) {
        ipow -= 2;
        s = -s;
    }
}

UnitSeries UnitSeries::operator*(const UnitSeries& b) const {
    return UnitSeries(ipow + b.ipow, s * b.s);
}

bool UnitSeries::eq_to_order(const UnitSeries& b, const Rat& order) const {
    if (ipow == b.ipow) return s.eq_to_order(b.s, order);
    // units differ: both must be zero to that order
    return s.eq_to_order(QSeries::zero(), order) && b.s.eq_to_order(QSeries::zero(), order);
}

std::string UnitSeries::str(int max_terms) const {
    std::string u = ipow == 0 ? "" : "i * ";
    return u + s.str(max_terms);
}

} // namespace qf
