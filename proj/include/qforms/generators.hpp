#pragma once

#include "qforms/qseries.hpp"

namespace qf {

// (q;q)_infinity = prod_{n>=1} (1 - q^n), truncated at the given order.
QSeries pochhammer_q(const Rat& order);

// Generic finite/truncated q-Pochhammer (a q^s; q^step)_count with rational
// shift s: prod_{j=0}^{count-1} (1 - a q^(s + j*step)). count < 0 means
// "until the factor exponent exceeds order".
QSeries pochhammer(const Rat& a, const Rat& s, const Rat& step, long count, const Rat& order);

// Dedekind eta q^(1/24) prod (1-q^n). Requires order > 1/24.
QSeries eta(const Rat& order);

// Eisenstein series G_k = -B_k/(2k) + sum sigma_{k-1}(n) q^n  (k even >= 2).
QSeries eisenstein(long k, const Rat& order);

// E_2 = -24 G_2 = 1 - 24 sum sigma_1(n) q^n.
QSeries e2(const Rat& order);

// Ramanujan-Serre derivative of weight k (k rational): D_q - (k/12) E_2 * .
QSeries serre(const Rat& k, const QSeries& a);

// Iterated tower starting at weight 3/2: E_{2n-1/2} o ... o E_{7/2} o E_{3/2}.
QSeries serre_tower(long n, const QSeries& a);

} // namespace qf
