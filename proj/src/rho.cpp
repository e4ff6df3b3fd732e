#include "m24rh/rho.hpp"

#include <algorithm>
#include <numeric>

#include "m24rh/homotopy.hpp"

namespace m24rh::rho {

namespace {

std::vector<int> divisors(int m) {
    std::vector<int> out;
    for (int d = 1; d <= m; ++d)
        if (m % d == 0) out.push_back(d);
    return out;
}

int largest_coprime_divisor(int m, int o) {
    int n = m;
    int g = std::gcd(n, o);
    while (g > 1) {
        while (n % g == 0) n /= g;
        g = std::gcd(n, o);
    }
    return n;
}

std::vector<int> prime_divisors(int s) {
    std::vector<int> out;
    for (int p : kTablePrimes)
        if (s % p == 0) out.push_back(p);
    int rest = s;
    for (int p : out)
        while (rest % p == 0) rest /= p;
    if (rest != 1) throw DataError("exponent with prime factor outside the table primes");
    return out;
}

struct ClosedFormContext {
    const CharacterTable& t;
    std::vector<std::vector<Int>> a;  // per class, 0..mmax

    ClosedFormContext(const CharacterTable& tab, int mmax) : t(tab) {
        for (int ci = 0; ci < kNumClasses; ++ci) a.push_back(a_seq(tab, ci, mmax));
    }
};

// sum over P subset of Pi(s) of (-1)^{#P + ds/pi(P)} a(g^{pi(P)}, ds/pi(P)),
// with a(.,r) := 0 when r is not an integer.
Int subset_term(const ClosedFormContext& cx, int ci, int ds, const std::vector<int>& sprimes) {
    Int total = 0;
    const size_t np = sprimes.size();
    for (size_t mask = 0; mask < (size_t{1} << np); ++mask) {
        long pi = 1;
        int popcount = 0;
        for (size_t b = 0; b < np; ++b)
            if (mask & (size_t{1} << b)) {
                pi *= sprimes[b];
                ++popcount;
            }
        if (ds % pi != 0) continue;
        long arg = ds / pi;
        int target = cx.t.power_class(ci, Int(pi));
        Int term = cx.a[static_cast<size_t>(target)][static_cast<size_t>(arg)];
        if ((popcount + arg) % 2 != 0) term = -term;
        total += term;
    }
    return total;
}

Int closed_eval(const ClosedFormContext& cx, int ci, int m) {
    const int o = cx.t.cls(ci).element_order;
    const int n = largest_coprime_divisor(m, o);
    const int s = m / n;
    const auto sprimes = prime_divisors(s);
    Int total = 0;
    for (int d : divisors(n)) {
        int mu = homotopy::mobius(n / d);
        if (mu == 0) continue;
        total += Int(mu) * subset_term(cx, ci, d * s, sprimes);
    }
    if (m % 2 != 0) total = -total;
    if (total % m != 0)
        throw DataError("closed form non-integral at " + cx.t.cls(ci).label + ", m=" + std::to_string(m));
    return total / m;
}

}  // namespace

Int rho1(const CharacterTable& t, int ci) {
    MultiQuad v = t.irreducible(1).at(ci) - t.irreducible(0).at(ci);
    return v.as_integer();
}

std::vector<Int> a_seq(const CharacterTable& t, int ci, int M) {
    std::vector<Int> a;
    a.reserve(static_cast<size_t>(M) + 1);
    a.push_back(2);
    if (M >= 1) a.push_back(rho1(t, ci));
    for (int m = 2; m <= M; ++m)
        a.push_back(a[1] * a[static_cast<size_t>(m - 1)] - a[static_cast<size_t>(m - 2)]);
    return a;
}

std::vector<std::vector<Int>> rho_series(const CharacterTable& t, int jmax) {
    std::vector<std::vector<Int>> rho(kNumClasses);
    std::vector<std::vector<Int>> a;
    for (int ci = 0; ci < kNumClasses; ++ci) a.push_back(a_seq(t, ci, jmax));
    for (int m = 1; m <= jmax; ++m) {
        for (int ci = 0; ci < kNumClasses; ++ci) {
            Int acc = a[static_cast<size_t>(ci)][static_cast<size_t>(m)];
            if (m % 2 != 0) acc = -acc;
            for (int d : divisors(m)) {
                if (d == m) continue;
                int target = t.power_class(ci, Int(m / d));
                Int term = Int(d) * rho[static_cast<size_t>(target)][static_cast<size_t>(d - 1)];
                if (d % 2 != 0) term = -term;
                acc -= term;
            }
            // remaining term: (-1)^m m rho_m(g)
            if (m % 2 != 0) acc = -acc;
            if (acc % m != 0)
                throw DataError("rho recursion non-integral at " + t.cls(ci).label +
                                ", m=" + std::to_string(m));
            rho[static_cast<size_t>(ci)].push_back(acc / m);
        }
    }
    return rho;
}

Int rho_closed_coprime(const CharacterTable& t, int ci, int m) {
    if (std::gcd(m, t.cls(ci).element_order) != 1)
        throw DataError("rho_closed_coprime requires gcd(m, o(g)) = 1");
    ClosedFormContext cx(t, m);
    Int total = 0;
    const auto& a = cx.a[static_cast<size_t>(ci)];
    for (int d : divisors(m)) {
        int mu = homotopy::mobius(m / d);
        if (mu == 0) continue;
        Int term = a[static_cast<size_t>(d)];
        if (d % 2 != 0) term = -term;
        total += Int(mu) * term;
    }
    if (m % 2 != 0) total = -total;
    if (total % m != 0) throw DataError("coprime closed form non-integral");
    return total / m;
}

Int rho_closed_primepower(const CharacterTable& t, int ci, int m) {
    const int o = t.cls(ci).element_order;
    if (prime_divisors(o).size() != 1)
        throw DataError("rho_closed_primepower requires prime power order");
    return closed_eval(ClosedFormContext(t, m), ci, m);
}

Int rho_closed_twoprimes(const CharacterTable& t, int ci, int m) {
    const int o = t.cls(ci).element_order;
    if (prime_divisors(o).size() != 2)
        throw DataError("rho_closed_twoprimes requires order with exactly two primes");
    return closed_eval(ClosedFormContext(t, m), ci, m);
}

Int rho_closed_general(const CharacterTable& t, int ci, int m) {
    return closed_eval(ClosedFormContext(t, m), ci, m);
}

RhoTable multiplicity_table(const CharacterTable& t, int jmax) {
    RhoTable out;
    out.jmax = jmax;
    out.ranks = rho_series(t, jmax);
    for (int j = 1; j <= jmax; ++j) {
        std::array<MultiQuad, kNumClasses> vals;
        for (int ci = 0; ci < kNumClasses; ++ci)
            vals[static_cast<size_t>(ci)] =
                MultiQuad(out.ranks[static_cast<size_t>(ci)][static_cast<size_t>(j - 1)]);
        bool integral = false;
        auto mult = t.decompose(ClassFunction(std::move(vals)), &integral);
        if (!integral)
            throw DataError("multiplicity non-integral at j=" + std::to_string(j));
        std::array<Int, kNumClasses> row;
        for (int i = 0; i < kNumClasses; ++i) {
            row[static_cast<size_t>(i)] = mult[static_cast<size_t>(i)].as_integer();
            if (j > 1 && row[static_cast<size_t>(i)] < 0)
                throw DataError("negative multiplicity at j=" + std::to_string(j) +
                                ", chi_" + std::to_string(i + 1));
        }
        out.mults.push_back(row);
    }
    return out;
}

QInterval bound_A(const Rat& x, unsigned digits) {
    if (x <= 0) throw ExactError("bound_A requires x > 0");
    QInterval p481 = qpow_interval(Rat(481, 482), x, digits);
    QInterval p483 = qpow_interval(Rat(1, 483), x, digits);
    QInterval p22 = qpow_interval(Rat(22), x, digits);
    QInterval p22h = qpow_interval(Rat(22), x / 2, digits);
    QInterval invx(Rat(1) / x);
    return invx * p22 * (p481 + p483) - p22h;
}

QInterval bound_B(const Rat& x, unsigned digits) {
    if (x <= 0) throw ExactError("bound_B requires x > 0");
    QInterval invx(Rat(1) / x);
    return invx * qpow_interval(Rat(6), x, digits) + invx * qpow_interval(Rat(22), x / 2, digits) +
           qpow_interval(Rat(6), x / 3, digits) + qpow_interval(Rat(22), x / 6, digits);
}

namespace {

// strict comparison with adaptive refinement; fn(digits) must return the
// two sides as intervals
template <class F>
bool certify_greater(F&& sides) {
    for (unsigned digits : {24u, 48u, 96u, 192u, 384u}) {
        auto [lhs, rhs] = sides(digits);
        if (lhs.certainly_greater(rhs)) return true;
        if (lhs.certainly_less(rhs)) return false;
        if (lhs.exact() && rhs.exact()) return lhs.lo > rhs.lo;
    }
    return false;
}

}  // namespace

std::vector<BoundCheck> verify_bounds(const CharacterTable& t, const BoundsOptions& opt) {
    std::vector<BoundCheck> out;
    const int amax = std::max({opt.sandwich_mmax, opt.lb_mmax, opt.ub_mmax, opt.crude_jmax});
    auto rho = rho_series(t, amax);

    // Sandwich bounds on a(g,m) for the three growing classes, |a| <= 2 rest.
    {
        BoundCheck c{"sandwich a(g,m) bounds", true, ""};
        for (int ci = 0; ci < kNumClasses; ++ci) {
            const std::string& lbl = t.cls(ci).label;
            auto a = a_seq(t, ci, opt.sandwich_mmax);
            Int x = rho1(t, ci);
            if (lbl == "1A" || lbl == "2A" || lbl == "3A") {
                Int x2 = x * x;
                for (int m = 1; m <= opt.sandwich_mmax; ++m) {
                    Rat xm = rat_pow(Rat(x), m);
                    Rat lo = xm * (rat_pow(Rat(x2 - 3, x2 - 2), m) + rat_pow(Rat(1) / Rat(x2 - 1), m));
                    Rat hi = xm * (rat_pow(Rat(x2 - 2, x2 - 1), m) + rat_pow(Rat(1) / Rat(x2 - 2), m));
                    Rat av(a[static_cast<size_t>(m)]);
                    if (!(lo < av && av < hi)) {
                        c.pass = false;
                        c.detail += " " + lbl + ":m=" + std::to_string(m);
                    }
                }
            } else {
                for (int m = 0; m <= opt.sandwich_mmax; ++m) {
                    Int av = a[static_cast<size_t>(m)];
                    if (av > 2 || av < -2) {
                        c.pass = false;
                        c.detail += " " + lbl + ":m=" + std::to_string(m);
                    }
                }
            }
        }
        out.push_back(std::move(c));
    }

    // rho_m(e) > A(m) for m >= 4
    {
        BoundCheck c{"rho_m(e) > A(m), 4 <= m <= " + std::to_string(opt.lb_mmax), true, ""};
        for (int m = 4; m <= opt.lb_mmax; ++m) {
            QInterval lhs(Rat(rho[0][static_cast<size_t>(m - 1)]));
            bool okm = certify_greater([&](unsigned digits) {
                return std::pair<QInterval, QInterval>(lhs, bound_A(Rat(m), digits));
            });
            if (!okm) {
                c.pass = false;
                c.detail += " m=" + std::to_string(m);
            }
        }
        out.push_back(std::move(c));
    }

    // |rho_m(g)| < B(m) for g != e, m >= 12
    {
        BoundCheck c{"|rho_m(g)| < B(m), g != e, 12 <= m <= " + std::to_string(opt.ub_mmax), true, ""};
        for (int m = 12; m <= opt.ub_mmax; ++m) {
            Int worst = 0;
            for (int ci = 1; ci < kNumClasses; ++ci) {
                Int v = rho[static_cast<size_t>(ci)][static_cast<size_t>(m - 1)];
                if (v < 0) v = -v;
                worst = std::max(worst, v);
            }
            bool okm = certify_greater([&](unsigned digits) {
                return std::pair<QInterval, QInterval>(bound_B(Rat(m), digits),
                                                       QInterval(Rat(worst)));
            });
            if (!okm) {
                c.pass = false;
                c.detail += " m=" + std::to_string(m);
            }
        }
        out.push_back(std::move(c));
    }

    // crude inequality: rho_j(e) >= sum_{[g] != [e]} #[g] |rho_j(g)|
    {
        BoundCheck c{"rho_j(e) >= sum #[g]|rho_j(g)|, " + std::to_string(opt.crude_jmin) + " <= j <= " +
                         std::to_string(opt.crude_jmax),
                     true, ""};
        for (int j = opt.crude_jmin; j <= opt.crude_jmax; ++j) {
            Int rhs = 0;
            for (int ci = 1; ci < kNumClasses; ++ci) {
                Int v = rho[static_cast<size_t>(ci)][static_cast<size_t>(j - 1)];
                if (v < 0) v = -v;
                rhs += t.class_size(ci) * v;
            }
            if (rho[0][static_cast<size_t>(j - 1)] < rhs) {
                c.pass = false;
                c.detail += " j=" + std::to_string(j);
            }
        }
        out.push_back(std::move(c));
    }

    // A(x) > #M24 B(x) for x >= 16, interval-separated
    {
        BoundCheck c{"A(x) > #M24 B(x), 16 <= x <= " + std::to_string(opt.ab_xmax), true, ""};
        QInterval order(Rat(t.group_order()));
        for (int x = 16; x <= opt.ab_xmax; ++x) {
            bool okx = certify_greater([&](unsigned digits) {
                return std::pair<QInterval, QInterval>(bound_A(Rat(x), digits),
                                                       order * bound_B(Rat(x), digits));
            });
            if (!okx) {
                c.pass = false;
                c.detail += " x=" + std::to_string(x);
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace m24rh::rho
