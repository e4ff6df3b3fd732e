#pragma once

// One-variable truncated power/Laurent series over a coefficient ring, plus
// the plethystic rank extraction: the unique exponents e_j with
//   f = prod_{j>0} (1 - (-x)^j)^{(-1)^j e_j} + O(x^{N+1}).

#include <limits>
#include <string>
#include <vector>

#include "m24rh/exactnum.hpp"

namespace m24rh {

struct SeriesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Rat ring_inv(const Rat& x) {
    if (x == 0) throw SeriesError("reciprocal: leading coefficient is zero");
    return Rat(1) / x;
}

inline Rat ring_div_int(const Rat& x, long k) { return x / Rat(k); }

inline MultiQuad ring_inv(const MultiQuad& x) { return x.inverse(); }

inline MultiQuad ring_div_int(const MultiQuad& x, long k) { return x.div_int(Int(k)); }

template <class R>
class TruncatedSeries {
public:
    // Zero series, everything unknown past `order`.
    explicit TruncatedSeries(int order = 0) : order_(order) {}

    // coef[k] is the coefficient of x^{lowest+k}.
    TruncatedSeries(int lowest, std::vector<R> coef, int order)
        : lo_(lowest), coef_(std::move(coef)), order_(order) {
        normalize();
    }

    static TruncatedSeries constant(R value, int order) {
        return TruncatedSeries(0, {std::move(value)}, order);
    }
    static TruncatedSeries monomial(R value, int exponent, int order) {
        return TruncatedSeries(exponent, {std::move(value)}, order);
    }

    int order() const { return order_; }
    int lowest() const { return lo_; }
    bool known_zero() const { return coef_.empty(); }
    // First exponent that could carry a nonzero coefficient.
    int valuation_bound() const { return coef_.empty() ? order_ + 1 : lo_; }

    R coeff(int exponent) const {
        if (exponent > order_)
            throw SeriesError("coefficient beyond truncation order requested");
        long k = static_cast<long>(exponent) - lo_;
        if (k < 0 || k >= static_cast<long>(coef_.size())) return R(0);
        return coef_[static_cast<size_t>(k)];
    }

    TruncatedSeries truncated(int order) const {
        TruncatedSeries r = *this;
        if (order < r.order_) {
            r.order_ = order;
            r.normalize();
        }
        return r;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const { return combined(o, false); }
    TruncatedSeries operator-(const TruncatedSeries& o) const { return combined(o, true); }

    TruncatedSeries operator-() const {
        TruncatedSeries r = *this;
        for (auto& c : r.coef_) c = R(0) - c;
        return r;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        long ord = std::min<long>(static_cast<long>(order_) + o.valuation_bound(),
                                  static_cast<long>(o.order_) + valuation_bound());
        ord = std::min<long>(ord, kMaxOrder);
        if (coef_.empty() || o.coef_.empty())
            return TruncatedSeries(static_cast<int>(ord));
        int lo = lo_ + o.lo_;
        std::vector<R> out(static_cast<size_t>(std::max<long>(0, ord - lo + 1)), R(0));
        for (size_t a = 0; a < coef_.size(); ++a) {
            if (coef_[a] == R(0)) continue;
            long ea = lo_ + static_cast<long>(a);
            for (size_t b = 0; b < o.coef_.size(); ++b) {
                long e = ea + o.lo_ + static_cast<long>(b);
                if (e > ord) break;
                out[static_cast<size_t>(e - lo)] += coef_[a] * o.coef_[b];
            }
        }
        return TruncatedSeries(lo, std::move(out), static_cast<int>(ord));
    }

    bool operator==(const TruncatedSeries& o) const {
        int ord = std::min(order_, o.order_);
        int lo = std::min(valuation_bound(), o.valuation_bound());
        for (int e = lo; e <= ord; ++e)
            if (coeff(e) != o.coeff(e)) return false;
        return true;
    }

    std::string str(const std::string& var = "x") const;

private:
    static constexpr long kMaxOrder = std::numeric_limits<int>::max() / 4;

    TruncatedSeries combined(const TruncatedSeries& o, bool subtract) const {
        int ord = std::min(order_, o.order_);
        int lo = std::min(valuation_bound(), o.valuation_bound());
        if (lo > ord) return TruncatedSeries(ord);
        std::vector<R> out(static_cast<size_t>(ord - lo + 1), R(0));
        for (int e = lo; e <= ord; ++e)
            out[static_cast<size_t>(e - lo)] =
                subtract ? coeff(e) - o.coeff(e) : coeff(e) + o.coeff(e);
        return TruncatedSeries(lo, std::move(out), ord);
    }

    void normalize() {
        long drop = 0;
        while (drop < static_cast<long>(coef_.size()) && coef_[static_cast<size_t>(drop)] == R(0))
            ++drop;
        if (drop > 0) {
            coef_.erase(coef_.begin(), coef_.begin() + drop);
            lo_ += static_cast<int>(drop);
        }
        while (!coef_.empty() &&
               (coef_.back() == R(0) || lo_ + static_cast<long>(coef_.size()) - 1 > order_))
            coef_.pop_back();
        if (coef_.empty()) lo_ = 0;
    }

    int lo_ = 0;
    std::vector<R> coef_;
    int order_ = 0;
};

// b with a*b = 1 + O(x^{N+1}); needs an invertible leading coefficient.
template <class R>
TruncatedSeries<R> ts_reciprocal(const TruncatedSeries<R>& a, int N) {
    if (a.known_zero()) throw SeriesError("reciprocal of zero series");
    int v = a.lowest();
    R lead_inv = ring_inv(a.coeff(v));
    int attainable = a.order() - 2 * v;
    int n = std::min(N, attainable);
    if (n < -v) throw SeriesError("reciprocal: insufficient known terms");
    long len = static_cast<long>(n) + v + 1;  // exponents -v .. n
    std::vector<R> out(static_cast<size_t>(std::max<long>(len, 1)), R(0));
    out[0] = lead_inv;
    for (long k = 1; k < len; ++k) {
        R s(0);
        for (long i = 1; i <= k; ++i) {
            R ai = a.coeff(static_cast<int>(v + i));
            if (ai == R(0)) continue;
            s += ai * out[static_cast<size_t>(k - i)];
        }
        out[static_cast<size_t>(k)] = R(0) - lead_inv * s;
    }
    return TruncatedSeries<R>(-v, std::move(out), n);
}

// log(a) = sum_{k>=1} (-1)^{k+1} (a-1)^k / k, truncated at N; a(0) must be 1.
template <class R>
TruncatedSeries<R> ts_log(const TruncatedSeries<R>& a, int N) {
    if (a.valuation_bound() < 0 || !(a.coeff(0) == R(1)))
        throw SeriesError("log requires constant term 1");
    int n = std::min(N, a.order());
    TruncatedSeries<R> u = a - TruncatedSeries<R>::constant(R(1), n);
    if (u.valuation_bound() < 1) throw SeriesError("log requires constant term 1");
    TruncatedSeries<R> acc(n), upow = TruncatedSeries<R>::constant(R(1), n);
    for (long k = 1; k <= n; ++k) {
        upow = upow * u;
        if (upow.known_zero()) break;
        TruncatedSeries<R> term = upow;
        std::vector<R> c;
        for (int e = term.valuation_bound(); e <= term.order(); ++e)
            c.push_back(ring_div_int((k % 2 == 1) ? term.coeff(e) : R(0) - term.coeff(e), k));
        acc = acc + TruncatedSeries<R>(term.valuation_bound(), std::move(c), n);
    }
    return acc;
}

// (1 + c x^j)^E over the rationals, E any integer, via the binomial series.
TruncatedSeries<Rat> binomial_factor_pow(int j, const Rat& c, const Int& E, int N);

// The exponents e_1..e_N of the plethystic factorization of f (constant term
// 1, integer coefficients); throws if some exponent fails to be an integer.
std::vector<Int> plethystic_ranks(const TruncatedSeries<Rat>& f, int N);

// Rebuilds prod_{j<=N} (1-(-x)^j)^{(-1)^j e_j} to order N (test oracle aid).
TruncatedSeries<Rat> plethystic_product(const std::vector<Int>& e, int N);

template <class R>
std::string TruncatedSeries<R>::str(const std::string& var) const {
    std::string out;
    for (int e = valuation_bound(); e <= order_; ++e) {
        R c = coeff(e);
        if (c == R(0)) continue;
        if (!out.empty()) out += " + ";
        if constexpr (std::is_same_v<R, Rat>) out += rat_str(c);
        else out += c.str();
        if (e != 0) out += "*" + var + "^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    out += " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
    return out;
}

}  // namespace m24rh
