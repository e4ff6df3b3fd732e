#include <doctest.h>

#include <numeric>

#include "m24rh/data.hpp"
#include "m24rh/homotopy.hpp"
#include "m24rh/rho.hpp"

using namespace m24rh;
namespace ro = m24rh::rho;

namespace {
const CharacterTable& table() { return data::builtin_table(); }
}  // namespace

TEST_CASE("rho1 and a-sequences") {
    const auto& t = table();
    CHECK(ro::rho1(t, t.class_index("1A")) == Int(22));
    CHECK(ro::rho1(t, t.class_index("2A")) == Int(6));
    CHECK(ro::rho1(t, t.class_index("12B")) == Int(-2));
    CHECK(ro::a_seq(t, t.class_index("1A"), 2) == std::vector<Int>({2, 22, 482}));
    CHECK(ro::a_seq(t, t.class_index("2A"), 1) == std::vector<Int>({2, 6}));
    CHECK(ro::a_seq(t, t.class_index("3A"), 3) == std::vector<Int>({2, 4, 14, 52}));
}

TEST_CASE("rho series grid") {
    const auto& t = table();
    auto grid = ro::rho_series(t, 6);
    CHECK(grid[0] == std::vector<Int>({22, 252, 3520, 57960, 1020096, 18664800}));
    int c2a = t.class_index("2A");
    CHECK(grid[static_cast<size_t>(c2a)][1] == Int(28));
    CHECK(grid[static_cast<size_t>(c2a)][2] == Int(64));
    // rho_1 row equals chi_2 - chi_1 valuewise
    for (int c = 0; c < kNumClasses; ++c)
        CHECK(grid[static_cast<size_t>(c)][0] == ro::rho1(t, c));
}

TEST_CASE("closed forms against the divisor recursion") {
    const auto& t = table();
    const int mmax = 24;
    auto grid = ro::rho_series(t, mmax);
    CHECK(ro::rho_closed_coprime(t, 0, 2) == Int(252));
    CHECK(ro::rho_closed_coprime(t, t.class_index("2A"), 3) == Int(64));
    CHECK(ro::rho_closed_primepower(t, t.class_index("2A"), 2) == Int(28));
    CHECK(ro::rho_closed_primepower(t, t.class_index("2A"), 3) == Int(64));
    for (int c = 0; c < kNumClasses; ++c) {
        int o = t.cls(c).element_order;
        int nprimes = 0;
        for (int p : kTablePrimes) nprimes += (o % p == 0) ? 1 : 0;
        for (int m = 1; m <= mmax; ++m) {
            const Int& want = grid[static_cast<size_t>(c)][static_cast<size_t>(m - 1)];
            CHECK(ro::rho_closed_general(t, c, m) == want);
            if (std::gcd(m, o) == 1) CHECK(ro::rho_closed_coprime(t, c, m) == want);
            if (nprimes == 1) CHECK(ro::rho_closed_primepower(t, c, m) == want);
            if (nprimes == 2) CHECK(ro::rho_closed_twoprimes(t, c, m) == want);
        }
    }
    CHECK_THROWS_AS(ro::rho_closed_coprime(t, t.class_index("2A"), 2), DataError);
    CHECK_THROWS_AS(ro::rho_closed_primepower(t, t.class_index("6A"), 2), DataError);
    CHECK_THROWS_AS(ro::rho_closed_twoprimes(t, t.class_index("8A"), 2), DataError);
}

TEST_CASE("multiplicities") {
    const auto& t = table();
    auto rt = ro::multiplicity_table(t, 19);
    // j=2: only chi_7
    for (int i = 0; i < kNumClasses; ++i)
        CHECK(rt.mults[1][static_cast<size_t>(i)] == Int(i == 6 ? 1 : 0));
    CHECK(rt.mults[0][0] == Int(-1));
    CHECK(rt.mults[0][1] == Int(1));
    CHECK(rt.mults[18][25] == Int("68888655803361851310"));
    CHECK(rt.mults[9][9] == Int(8179718));
    // degree identity
    for (int j = 1; j <= 19; ++j) {
        Int s = 0;
        for (int i = 0; i < kNumClasses; ++i)
            s += rt.mults[static_cast<size_t>(j - 1)][static_cast<size_t>(i)] * t.irreducible_degree(i);
        CHECK(s == rt.ranks[0][static_cast<size_t>(j - 1)]);
    }
    // identity column matches the homotopy ranks
    auto k3 = homotopy::ranks_via_roots(2, Int(21), Int(24), 19);
    CHECK(rt.ranks[0] == k3);
}

TEST_CASE("golden fixtures") {
    const auto& t = table();
    auto fixtures = data::parse_multiplicity_fixtures(data::embedded_multiplicity_fixtures());
    REQUIRE(fixtures.size() == 19);
    auto rt = ro::multiplicity_table(t, 19);
    for (int j = 1; j <= 19; ++j)
        for (int i = 0; i < kNumClasses; ++i)
            CHECK(rt.mults[static_cast<size_t>(j - 1)][static_cast<size_t>(i)] ==
                  fixtures[static_cast<size_t>(j - 1)][static_cast<size_t>(i)]);
}

TEST_CASE("bound functions") {
    const auto& t = table();
    auto B12 = ro::bound_B(Rat(12), 30);
    CHECK(B12.lo > 0);
    auto A16 = ro::bound_A(Rat(16), 30);
    CHECK(A16.lo > 0);
    // A(16) > #M24 B(16) with separated intervals
    auto B16 = ro::bound_B(Rat(16), 30);
    QInterval rhs = QInterval(Rat(t.group_order())) * B16;
    CHECK(A16.certainly_greater(rhs));
    // exactness at even integers: x=16 makes A exact
    CHECK(A16.exact());
    CHECK_FALSE(ro::bound_A(Rat(17), 30).exact());
}

TEST_CASE("bounds suite at reduced ranges") {
    const auto& t = table();
    ro::BoundsOptions opt;
    opt.sandwich_mmax = 32;
    opt.lb_mmax = 32;
    opt.ub_mmax = 32;
    opt.crude_jmin = 16;
    opt.crude_jmax = 20;
    opt.ab_xmax = 32;
    auto checks = ro::verify_bounds(t, opt);
    for (const auto& c : checks) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
