#include <doctest.h>

#include "m24rh/homotopy.hpp"

using namespace m24rh;
namespace ho = m24rh::homotopy;
using TS = TruncatedSeries<Rat>;

TEST_CASE("euler characteristics") {
    CHECK(ho::euler_char_ci({2, {4}}) == Int(24));
    CHECK(ho::euler_char_ci({1, {1}}) == Int(2));
    CHECK(ho::euler_char_ci({3, {5}}) == Int(-200));
    CHECK(ho::euler_char_hypersurface(2, 4) == Int(24));
    CHECK(ho::euler_char_hypersurface(1, 1) == Int(2));
    CHECK(ho::euler_char_hypersurface(2, 1) == Int(3));  // projective plane
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 8; ++d)
            CHECK(ho::euler_char_hypersurface(n, d) == ho::euler_char_ci({n, {d}}));
    // degree-1 hypersurfaces are hyperplanes
    CHECK(ho::euler_char_ci({3, {2, 3}}) == ho::euler_char_ci({3, {2, 3, 1}}));
}

TEST_CASE("ell invariant") {
    CHECK(ho::ell_invariant(2, Int(24)) == Int(21));
    CHECK(ho::ell_invariant(3, Int(-200)) == Int(204));
    CHECK(ho::ell_invariant(1, Int(2)) == Int(0));
}

TEST_CASE("loop space Poincare series") {
    TS k3 = ho::loop_poincare(2, Int(21), 6);
    CHECK(ts_reciprocal(k3, 4) == TS(0, {Rat(1), Rat(-22), Rat(1)}, 4));
    // n=1, ell=0: (1+x)/(1-x^2) = 1/(1-x)
    TS line = ho::loop_poincare(1, Int(0), 5);
    for (int e = 0; e <= 5; ++e) CHECK(line.coeff(e) == 1);
    // n=2, ell=0: (1+x)/(1-x^4); reciprocal is (1-x^4)/(1+x)
    TS n2 = ho::loop_poincare(2, Int(0), 7);
    TS expect = TS(0, {Rat(1), Rat(1)}, 7) * ts_reciprocal(TS(0, {Rat(1), Rat(0), Rat(0), Rat(0), Rat(-1)}, 9), 7);
    CHECK(n2 == expect);
}

TEST_CASE("space Poincare series") {
    CHECK(ho::space_poincare(2, Int(21), 6) == TS(0, {Rat(1), Rat(0), Rat(22), Rat(0), Rat(1)}, 4));
    CHECK(ho::space_poincare(1, Int(0), 4) == TS(0, {Rat(1), Rat(0), Rat(1)}, 2));
    TS quintic = ho::space_poincare(3, Int(204), 8);
    CHECK(quintic ==
          TS(0, {Rat(1), Rat(0), Rat(1), Rat(204), Rat(1), Rat(0), Rat(1)}, 6));
    // palindromic of degree 2n
    for (int n = 1; n <= 4; ++n) {
        TS p = ho::space_poincare(n, Int(13), 2 * n + 2);
        for (int e = 0; e <= 2 * n; ++e) CHECK(p.coeff(e) == p.coeff(2 * n - e));
    }
}

TEST_CASE("ranks via roots") {
    auto k3 = ho::ranks_via_roots(2, Int(21), Int(24), 5);
    CHECK(k3 == std::vector<Int>({22, 252, 3520, 57960, 1020096}));
    auto line = ho::ranks_via_roots(1, Int(0), Int(2), 4);
    CHECK(line == std::vector<Int>({1, 1, 0, 0}));
    auto p2 = ho::ranks_via_roots(2, Int(0), Int(3), 6);
    CHECK(p2 == std::vector<Int>({1, 0, 0, 1, 0, 0}));
}

TEST_CASE("ranks via plethysm and cross-route agreement") {
    CHECK(ho::ranks_via_plethysm(2, Int(21), 5) ==
          std::vector<Int>({22, 252, 3520, 57960, 1020096}));
    CHECK(ho::ranks_via_plethysm(1, Int(0), 4) == std::vector<Int>({1, 1, 0, 0}));
    auto roots = ho::ranks_via_roots(3, Int(204), Int(-200), 6);
    CHECK(ho::ranks_via_plethysm(3, Int(204), 6) == roots);
    CHECK(roots == std::vector<Int>({1, 204, 204, 20706, 41615, 2850730}));
    // a few more complete intersections
    for (auto [n, degs] : std::vector<std::pair<int, std::vector<int>>>{
             {2, {2, 2}}, {2, {3}}, {3, {2, 2}}, {4, {3}}, {2, {5}}}) {
        Int chi = ho::euler_char_ci({n, degs});
        Int ell = ho::ell_invariant(n, chi);
        CHECK(ho::ranks_via_roots(n, ell, chi, 12) == ho::ranks_via_plethysm(n, ell, 12));
    }
}

TEST_CASE("profile") {
    auto hp = ho::profile({2, {4}}, 5);
    CHECK(hp.chi == Int(24));
    CHECK(hp.ell == Int(21));
    CHECK(hp.ranks[0] == Int(22));
}
