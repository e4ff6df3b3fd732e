#include <doctest.h>

#include <random>

#include "m24rh/data.hpp"
#include "m24rh/repring.hpp"
#include "m24rh/rho.hpp"

using namespace m24rh;
namespace rr = m24rh::repring;

namespace {

const CharacterTable& table() { return data::builtin_table(); }

rr::VirtualCharacter random_vc(std::mt19937& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::array<Int, kNumClasses> m{};
    for (auto& x : m) x = d(rng);
    return rr::VirtualCharacter::from_multiplicities(table(), std::move(m));
}

}  // namespace

TEST_CASE("adams operations") {
    const auto& t = table();
    auto triv = rr::VirtualCharacter::trivial(t);
    for (int k : {1, 2, 3, 5, 12}) CHECK(rr::adams(triv, k) == triv);
    auto chi2 = rr::VirtualCharacter::irreducible(t, 1);
    CHECK(rr::adams(chi2, 1) == chi2);
    // psi^2(chi_2) at 2A is chi_2(1A) = 23
    CHECK(rr::adams(chi2, 2).values().at(t.class_index("2A")) == MultiQuad(23L));
    std::mt19937 rng(2);
    for (int trial = 0; trial < 10; ++trial) {
        auto U = random_vc(rng);
        CHECK(rr::adams(U, 1) == U);
        // psi^a psi^b = psi^{ab}
        CHECK(rr::adams(rr::adams(U, 2), 3) == rr::adams(U, 6));
    }
}

TEST_CASE("lambda and sigma series") {
    const auto& t = table();
    auto triv = rr::VirtualCharacter::trivial(t);
    auto L = rr::lambda_series(triv, 4);
    CHECK(L.coeff(0) == triv);
    CHECK(L.coeff(1) == triv);
    CHECK(L.coeff(2).is_zero());
    auto S = rr::sigma_series(triv, 4);
    for (int k = 0; k <= 4; ++k) CHECK(S.coeff(k) == triv);
    // Lambda of -trivial alternates sign
    auto Lm = rr::lambda_series(-triv, 4);
    for (int k = 0; k <= 4; ++k)
        CHECK(Lm.coeff(k) == (k % 2 == 0 ? triv : -triv));

    std::mt19937 rng(9);
    for (int trial = 0; trial < 8; ++trial) {
        auto U = random_vc(rng);
        // dimension specializations
        Int d = U.dimension();
        CHECK(rr::lambda_series(U, 6).dimensions() == binomial_factor_pow(1, Rat(1), d, 6));
        CHECK(rr::sigma_series(U, 6).dimensions() == binomial_factor_pow(1, Rat(-1), -d, 6));
        // duality
        CHECK(rr::lambda_series(U, 6) * rr::sigma_series(U, 6).substituted_negx() ==
              rr::RSeries::unit(t, 6));
        // additivity of Lambda_x
        auto V = random_vc(rng);
        CHECK(rr::lambda_series(U + V, 5) == rr::lambda_series(U, 5) * rr::lambda_series(V, 5));
    }
}

TEST_CASE("factor_sigma") {
    const auto& t = table();
    const int N = 6;
    auto chi7 = rr::VirtualCharacter::irreducible(t, 6);
    auto f = rr::sigma_product(t, {chi7}, N);
    auto U = rr::factor_sigma(f);
    CHECK(U[0] == chi7);
    for (size_t k = 1; k < U.size(); ++k) CHECK(U[k].is_zero());

    // f = 1 - x*chi_1: U_1 = -chi_1 since S_x(-chi_1) = 1 - x
    rr::RSeries g = rr::RSeries::unit(t, N);
    g.set_coeff(1, -rr::VirtualCharacter::trivial(t));
    auto V = rr::factor_sigma(g);
    CHECK(V[0] == -rr::VirtualCharacter::trivial(t));
    for (size_t k = 1; k < V.size(); ++k) CHECK(V[k].is_zero());

    // general round trip
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        rr::RSeries f2 = rr::RSeries::unit(t, N);
        f2.set_coeff(1, rr::VirtualCharacter::irreducible(t, 1));
        f2.set_coeff(2, rr::VirtualCharacter::irreducible(t, 2) - random_vc(rng));
        f2.set_coeff(3, random_vc(rng));
        CHECK(rr::sigma_product(t, rr::factor_sigma(f2), N) == f2);
    }
}

TEST_CASE("factor_alternating reproduces the rho class functions") {
    const auto& t = table();
    const int N = 6;
    auto U1 = rr::VirtualCharacter::irreducible(t, 1) - rr::VirtualCharacter::trivial(t);
    rr::RSeries quad = rr::RSeries::unit(t, N);
    quad.set_coeff(1, -U1);
    quad.set_coeff(2, rr::VirtualCharacter::trivial(t));
    auto factors = rr::factor_alternating(quad.reciprocal());
    CHECK(rr::alternating_product(t, factors, N) == quad.reciprocal());
    auto grid = rho::rho_series(t, N);
    std::vector<Int> dims{22, 252, 3520, 57960, 1020096};
    for (int j = 1; j <= 5; ++j) CHECK(factors[static_cast<size_t>(j - 1)].dimension() == dims[static_cast<size_t>(j - 1)]);
    for (int j = 1; j <= N; ++j)
        for (int c = 0; c < kNumClasses; ++c)
            CHECK(factors[static_cast<size_t>(j - 1)].values().at(c) ==
                  MultiQuad(grid[static_cast<size_t>(c)][static_cast<size_t>(j - 1)]));
}

TEST_CASE("integrality is enforced") {
    const auto& t = table();
    // chi_2 / 2 is not a virtual character
    ClassFunction half = t.irreducible(1).div_int(Int(2));
    CHECK_THROWS_AS(rr::VirtualCharacter::from_values(t, half), DataError);
}
