#include <doctest.h>

#include <random>

#include "m24rh/series.hpp"

using namespace m24rh;
using TS = TruncatedSeries<Rat>;

namespace {

TS poly(std::vector<long> c, int order) {
    std::vector<Rat> r(c.begin(), c.end());
    return TS(0, std::move(r), order);
}

// independent long-division oracle for reciprocals
std::vector<Rat> long_division_recip(const std::vector<Rat>& a, int N) {
    std::vector<Rat> b(static_cast<size_t>(N) + 1, Rat(0));
    b[0] = Rat(1) / a[0];
    for (int k = 1; k <= N; ++k) {
        Rat s(0);
        for (int i = 1; i <= k; ++i)
            if (i < static_cast<int>(a.size())) s += a[static_cast<size_t>(i)] * b[static_cast<size_t>(k - i)];
        b[static_cast<size_t>(k)] = -s / a[0];
    }
    return b;
}

TS random_unit_series(std::mt19937& rng, int N) {
    std::uniform_int_distribution<long> d(-4, 4);
    std::vector<Rat> c{Rat(1)};
    for (int k = 1; k <= N; ++k) c.emplace_back(d(rng));
    return TS(0, std::move(c), N);
}

}  // namespace

TEST_CASE("products") {
    CHECK(poly({1, 1}, 4) * poly({1, -1}, 4) == poly({1, 0, -1}, 4));
    // Laurent shift: x^{-1} * x = 1
    TS xinv = TS::monomial(Rat(1), -1, 4);
    TS x = TS::monomial(Rat(1), 1, 4);
    CHECK(xinv * x == TS::constant(Rat(1), 3));
    // truncation orders combine through valuations
    CHECK((xinv * x).order() == 3);
}

TEST_CASE("reciprocal") {
    TS k3 = poly({1, -22, 1}, 8);
    TS r = ts_reciprocal(k3, 6);
    auto oracle = long_division_recip({Rat(1), Rat(-22), Rat(1)}, 6);
    for (int e = 0; e <= 6; ++e) CHECK(r.coeff(e) == oracle[static_cast<size_t>(e)]);
    CHECK(r.coeff(1) == 22);
    CHECK(r.coeff(2) == 483);
    CHECK(r.coeff(3) == 10604);
    CHECK(k3 * r == TS::constant(Rat(1), 6));

    CHECK(ts_reciprocal(TS::constant(Rat(1), 5), 5) == TS::constant(Rat(1), 5));
    TS geo = ts_reciprocal(poly({1, 1}, 6), 6);
    for (int e = 0; e <= 6; ++e) CHECK(geo.coeff(e) == Rat(e % 2 == 0 ? 1 : -1));

    CHECK_THROWS_AS(ts_reciprocal(TS(4), 4), SeriesError);
    std::mt19937 rng(5);
    for (int t = 0; t < 20; ++t) {
        TS f = random_unit_series(rng, 8);
        CHECK(ts_reciprocal(ts_reciprocal(f, 8), 8) == f);
    }
}

TEST_CASE("logarithm") {
    CHECK(ts_log(TS::constant(Rat(1), 5), 5) == TS(5));
    TS geo = ts_reciprocal(poly({1, -1}, 6), 6);
    TS lg = ts_log(geo, 6);
    for (int e = 1; e <= 6; ++e) CHECK(lg.coeff(e) == Rat(1, e));
    // log(1-22x+x^2): coefficient of x^m is -a(e,m)/m with
    // a = 2, 22, 482, 10582, ...
    TS lk3 = ts_log(poly({1, -22, 1}, 6), 6);
    std::vector<Int> a{2, 22, 482};
    for (int m = 3; m <= 6; ++m) a.push_back(22 * a[static_cast<size_t>(m - 1)] - a[static_cast<size_t>(m - 2)]);
    for (int m = 1; m <= 6; ++m) CHECK(lk3.coeff(m) == -Rat(a[static_cast<size_t>(m)], m));
    CHECK(lk3.coeff(1) == -22);
    CHECK(lk3.coeff(2) == Rat(-482, 2));
    CHECK_THROWS_AS(ts_log(poly({2, 1}, 3), 3), SeriesError);
    // additivity on random unit series
    std::mt19937 rng(17);
    for (int t = 0; t < 12; ++t) {
        TS f = random_unit_series(rng, 7), g = random_unit_series(rng, 7);
        CHECK(ts_log(f * g, 7) == ts_log(f, 7) + ts_log(g, 7));
    }
}

TEST_CASE("plethystic ranks") {
    auto e = plethystic_ranks(poly({1, -22, 1}, 5), 5);
    CHECK(e == std::vector<Int>({22, 252, 3520, 57960, 1020096}));
    CHECK(plethystic_ranks(TS::constant(Rat(1), 4), 4) == std::vector<Int>({0, 0, 0, 0}));
    // exponents read off the defining product (1+x)^{-(-1)} (1-x^2)^{(+1)}
    CHECK(plethystic_ranks(poly({1, 1, -1, -1}, 4), 4) == std::vector<Int>({-1, 1, 0, 0}));
    CHECK(plethystic_ranks(poly({1, -1}, 4), 4) == std::vector<Int>({1, 1, 0, 0}));
    CHECK_THROWS_AS(plethystic_ranks(TS(0, {Rat(1), Rat(1, 2)}, 3), 3), SeriesError);

    // round trip on random integer unit series
    std::mt19937 rng(23);
    for (int t = 0; t < 25; ++t) {
        TS f = random_unit_series(rng, 9);
        auto ranks = plethystic_ranks(f, 9);
        CHECK(plethystic_product(ranks, 9) == f);
    }
}
