#include "m24rh/qinterval.hpp"

#include <algorithm>

namespace m24rh {

QInterval QInterval::operator*(const QInterval& o) const {
    Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
}

Int floor_nth_root(const Int& value, unsigned q) {
    if (value < 0) throw ExactError("nth root of negative value");
    if (q == 0) throw ExactError("0th root");
    if (value == 0 || value == 1 || q == 1) return value;
    // initial guess from bit length, then Newton, then exact correction
    unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(value)) + 1;
    Int x = Int(1) << (bits / q + 1);
    for (;;) {
        // x_{k+1} = ((q-1)x + v / x^{q-1}) / q
        Int xprev = boost::multiprecision::pow(x, q - 1);
        Int nx = (Int(q - 1) * x + value / xprev) / q;
        if (nx >= x) break;
        x = nx;
    }
    while (boost::multiprecision::pow(x, q) > value) --x;
    while (boost::multiprecision::pow(x + 1, q) <= value) ++x;
    return x;
}

Rat rat_pow(const Rat& base, const Int& e) {
    if (e == 0) return Rat(1);
    Int num = rat_num(base), den = rat_den(base);
    unsigned ue = static_cast<unsigned>(boost::multiprecision::abs(e).convert_to<unsigned long>());
    Rat p(boost::multiprecision::pow(num, ue), boost::multiprecision::pow(den, ue));
    if (e < 0) {
        if (num == 0) throw ExactError("negative power of zero");
        p = Rat(1) / p;
    }
    return p;
}

QInterval qpow_interval(const Rat& base, const Int& p, unsigned q, unsigned digits) {
    if (base <= 0) throw ExactError("interval power requires positive base");
    if (q == 0) throw ExactError("zero root index");
    Rat bp = rat_pow(base, p);
    if (q == 1) return QInterval(bp);
    // lo = floor(S * bp^{1/q}) / S with S = 10^digits, hi = lo + 1/S
    Int S = boost::multiprecision::pow(Int(10), digits);
    Int Sq = boost::multiprecision::pow(S, q);
    Int scaled = rat_num(bp) * Sq / rat_den(bp);  // floor(bp * S^q)
    Int root = floor_nth_root(scaled, q);
    return {Rat(root, S), Rat(root + 1, S)};
}

QInterval qpow_interval(const Rat& base, const Rat& exponent, unsigned digits) {
    Int q = rat_den(exponent);
    if (q > 64) throw ExactError("unexpectedly large root index");
    return qpow_interval(base, rat_num(exponent), q.convert_to<unsigned>(), digits);
}

}  // namespace m24rh
