#pragma once

// Validated rational interval arithmetic: every real quantity is carried as
// an exact pair [lo, hi] of rationals with lo <= x <= hi.  Rational powers
// a^{p/q} are enclosed by outward-rounded integer q-th roots at a chosen
// decimal precision, so strict inequalities can be certified exactly.

#include "m24rh/exactnum.hpp"

namespace m24rh {

struct QInterval {
    Rat lo, hi;

    QInterval() = default;
    explicit QInterval(const Rat& exact) : lo(exact), hi(exact) {}
    QInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw ExactError("inverted interval");
    }

    bool exact() const { return lo == hi; }

    QInterval operator+(const QInterval& o) const { return {lo + o.lo, hi + o.hi}; }
    QInterval operator-(const QInterval& o) const { return {lo - o.hi, hi - o.lo}; }
    QInterval operator*(const QInterval& o) const;
    QInterval operator-() const { return {-hi, -lo}; }

    // certified comparisons: true only when the intervals separate
    bool certainly_greater(const QInterval& o) const { return lo > o.hi; }
    bool certainly_less(const QInterval& o) const { return hi < o.lo; }
};

// floor of the q-th root of a nonnegative integer
Int floor_nth_root(const Int& value, unsigned q);

// base^{p/q} for rational base > 0 and exponent p/q (q >= 1), enclosed with
// roughly `digits` decimal digits; exact when the exponent is an integer.
QInterval qpow_interval(const Rat& base, const Int& p, unsigned q, unsigned digits);
QInterval qpow_interval(const Rat& base, const Rat& exponent, unsigned digits);

Rat rat_pow(const Rat& base, const Int& e);

}  // namespace m24rh
