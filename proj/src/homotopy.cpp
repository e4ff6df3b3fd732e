#include "m24rh/homotopy.hpp"

namespace m24rh::homotopy {

int mobius(long n) {
    if (n <= 0) throw SeriesError("mobius undefined for n <= 0");
    int r = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            r = -r;
        }
    }
    if (n > 1) r = -r;
    return r;
}

Int euler_char_ci(const CompleteIntersection& X) {
    const int n = X.dimension;
    if (n < 1) throw SeriesError("dimension must be >= 1");
    if (X.degrees.empty()) throw SeriesError("at least one degree required");
    // (1-x)^{-2} = sum (k+1) x^k
    std::vector<Rat> base;
    base.reserve(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) base.emplace_back(k + 1);
    TruncatedSeries<Rat> s(0, std::move(base), n);
    for (int a : X.degrees) {
        if (a < 1) throw SeriesError("degrees must be >= 1");
        // a/(1+(a-1)x) = a * sum (1-a)^k x^k
        std::vector<Rat> f;
        Rat t(a);
        for (int k = 0; k <= n; ++k) {
            f.push_back(t);
            t *= Rat(1 - a);
        }
        s = s * TruncatedSeries<Rat>(0, std::move(f), n);
    }
    Rat chi = s.coeff(n);
    if (!rat_is_int(chi)) throw SeriesError("Euler characteristic came out non-integral");
    return rat_num(chi);
}

Int euler_char_hypersurface(int n, int d) {
    if (d < 1) throw SeriesError("degree must be >= 1");
    Int t = 1 - d;
    Int p = boost::multiprecision::pow(t, static_cast<unsigned>(n + 2));
    Int num = p + Int(d) * (n + 2) - 1;
    if (num % d != 0) throw SeriesError("hypersurface Euler characteristic non-integral");
    return num / d;
}

Int ell_invariant(int n, const Int& chi) {
    Int v = chi - n - 1;
    return (n % 2 == 0) ? v : -v;
}

namespace {

TruncatedSeries<Rat> one_plus_x(int N) {
    return TruncatedSeries<Rat>(0, {Rat(1), Rat(1)}, N);
}

TruncatedSeries<Rat> loop_denominator(int n, const Int& ell, int N) {
    if (ell == 0) {
        std::vector<Rat> den(static_cast<size_t>(std::max(N, 2 * n)) + 1, Rat(0));
        den[0] = 1;
        den[static_cast<size_t>(2 * n)] = -1;
        return TruncatedSeries<Rat>(0, std::move(den), std::max(N, 2 * n));
    }
    int deg = 2 * n - 1;
    std::vector<Rat> den(static_cast<size_t>(std::max(N, deg)) + 1, Rat(0));
    den[0] = 1;
    den[static_cast<size_t>(n - 1)] += Rat(-ell);
    den[static_cast<size_t>(n)] += Rat(-ell);
    den[static_cast<size_t>(deg)] += 1;
    return TruncatedSeries<Rat>(0, std::move(den), std::max(N, deg));
}

}  // namespace

TruncatedSeries<Rat> loop_poincare(int n, const Int& ell, int N) {
    if (n < 1) throw SeriesError("dimension must be >= 1");
    return (one_plus_x(N) * ts_reciprocal(loop_denominator(n, ell, N), N)).truncated(N);
}

TruncatedSeries<Rat> space_poincare(int n, const Int& ell, int N) {
    if (n < 1) throw SeriesError("dimension must be >= 1");
    int deg = 2 * n + 2;
    int work = std::max(N, deg);
    std::vector<Rat> num(static_cast<size_t>(deg) + 1, Rat(0));
    num[0] = 1;
    num[static_cast<size_t>(n)] += Rat(ell);
    num[static_cast<size_t>(n + 2)] += Rat(-ell);
    num[static_cast<size_t>(deg)] += -1;
    TruncatedSeries<Rat> numerator(0, std::move(num), work);
    TruncatedSeries<Rat> inv_den =
        ts_reciprocal(TruncatedSeries<Rat>(0, {Rat(1), Rat(0), Rat(-1)}, work), work);
    TruncatedSeries<Rat> p = numerator * inv_den;
    for (int e = 2 * n + 1; e <= p.order(); ++e)
        if (p.coeff(e) != 0) throw SeriesError("space Poincare series is not a degree-2n polynomial");
    return p.truncated(N);
}

std::vector<Int> ranks_via_roots(int n, const Int& ell, const Int& chi, int N) {
    if (n < 1) throw SeriesError("dimension must be >= 1");
    std::vector<Int> out(static_cast<size_t>(N), Int(0));
    if (chi == Int(n) + 1) {
        if (1 <= N) out[0] = 1;
        if (2 * n <= N) out[static_cast<size_t>(2 * n) - 1] += 1;
        return out;
    }
    // Q(z) = 1 - ell z^{n-1} - ell z^n + z^{2n-1} = (z+1) R(z); R is monic of
    // degree 2n-2 with constant term 1.  Power sums of the roots of the
    // reversed polynomial R* are the s_{-k} of the rank formula.
    const int deg = 2 * n - 1;
    std::vector<Int> q(static_cast<size_t>(deg) + 1, Int(0));
    q[0] = 1;
    q[static_cast<size_t>(n - 1)] += -ell;
    q[static_cast<size_t>(n)] += -ell;
    q[static_cast<size_t>(deg)] += 1;
    // synthetic division by (z+1)
    std::vector<Int> r(static_cast<size_t>(deg), Int(0));
    Int carry = q[static_cast<size_t>(deg)];
    for (int i = deg - 1; i >= 0; --i) {
        r[static_cast<size_t>(i)] = carry;
        carry = q[static_cast<size_t>(i)] - carry;
    }
    if (carry != 0) throw SeriesError("z = -1 is not a root; bad ell");
    const int m = deg - 1;  // degree of R
    std::vector<Rat> p(static_cast<size_t>(N) + 1, Rat(0));  // p[k] = s_{-k}
    if (m > 0) {
        if (r[static_cast<size_t>(m)] != 1 || r[0] != 1)
            throw SeriesError("cofactor polynomial is not monic-palindromic as expected");
        // reversed polynomial R*(z) = z^m R(1/z); monic coefficients c_1..c_m
        std::vector<Int> c(static_cast<size_t>(m));
        for (int i = 1; i <= m; ++i) c[static_cast<size_t>(i - 1)] = r[static_cast<size_t>(m - i)];
        for (int k = 1; k <= N; ++k) {
            Rat v(0);
            if (k <= m) {
                v = Rat(-k) * Rat(c[static_cast<size_t>(k - 1)]);
                for (int i = 1; i < k; ++i)
                    v -= Rat(c[static_cast<size_t>(i - 1)]) * p[static_cast<size_t>(k - i)];
            } else {
                for (int i = 1; i <= m; ++i)
                    v -= Rat(c[static_cast<size_t>(i - 1)]) * p[static_cast<size_t>(k - i)];
            }
            p[static_cast<size_t>(k)] = v;
        }
    }
    for (int j = 1; j <= N; ++j) {
        Rat acc(0);
        for (int k = 1; k <= j; ++k) {
            if (j % k != 0) continue;
            int mu = mobius(j / k);
            if (mu == 0) continue;
            Rat term = Rat(mu) * p[static_cast<size_t>(k)];
            acc += (k % 2 == 0) ? term : -term;
        }
        Rat v = acc / j;
        if (j % 2 == 1) v = -v;
        if (!rat_is_int(v)) throw SeriesError("rank came out non-integral at j=" + std::to_string(j));
        out[static_cast<size_t>(j - 1)] = rat_num(v);
    }
    return out;
}

std::vector<Int> ranks_via_plethysm(int n, const Int& ell, int N) {
    // the reciprocal needs the loop series a bit past N
    TruncatedSeries<Rat> loop = loop_poincare(n, ell, N + 2);
    return plethystic_ranks(ts_reciprocal(loop, N), N);
}

HomotopyProfile profile(const CompleteIntersection& X, int N) {
    HomotopyProfile hp;
    hp.chi = euler_char_ci(X);
    hp.ell = ell_invariant(X.dimension, hp.chi);
    hp.ranks = ranks_via_roots(X.dimension, hp.ell, hp.chi, N);
    return hp;
}

}  // namespace m24rh::homotopy
