#pragma once

// The twined rank sequences rho_j(g): the divisor recursion coming from
// log P_g(x)^{-1}, the Moebius-inverted closed forms for coprime, prime
// power, two-prime and general element orders, the multiplicity tables, and
// the growth bounds (A/B functions, sandwich bounds, crude inequality) that
// back the positivity argument.

#include <optional>
#include <string>
#include <vector>

#include "m24rh/m24.hpp"
#include "m24rh/qinterval.hpp"

namespace m24rh::rho {

// rho'_1(g) = chi_2(g) - chi_1(g)
Int rho1(const CharacterTable& t, int ci);

// a(g,m) = alpha(g)^m + alpha(g)^{-m} as exact integers, m = 0..M, via the
// recurrence a(m) = rho'_1 a(m-1) - a(m-2) with a(0)=2.
std::vector<Int> a_seq(const CharacterTable& t, int ci, int M);

// full rank grid: result[ci][m-1] = rho_m(class ci), m = 1..jmax, solving
// (-1)^m a(g,m) = sum_{d|m} (-1)^d d rho_d(g^{m/d}) ascending in m.
std::vector<std::vector<Int>> rho_series(const CharacterTable& t, int jmax);

// closed forms; each checks its stated domain
Int rho_closed_coprime(const CharacterTable& t, int ci, int m);
Int rho_closed_primepower(const CharacterTable& t, int ci, int m);
Int rho_closed_twoprimes(const CharacterTable& t, int ci, int m);
Int rho_closed_general(const CharacterTable& t, int ci, int m);

struct RhoTable {
    int jmax = 0;
    std::vector<std::vector<Int>> ranks;                  // [ci][j-1]
    std::vector<std::array<Int, kNumClasses>> mults;      // [j-1][chi index]
};

// ranks plus multiplicities <rho_j, chi_i>; integrality is asserted, and
// non-negativity for j > 1.
RhoTable multiplicity_table(const CharacterTable& t, int jmax);

// A(x) = (1/x) 22^x (481^x/482^x + 1/483^x) - 22^{x/2}
// B(x) = (1/x) 6^x + (1/x) 22^{x/2} + 6^{x/3} + 22^{x/6}
QInterval bound_A(const Rat& x, unsigned digits);
QInterval bound_B(const Rat& x, unsigned digits);

struct BoundCheck {
    std::string name;
    bool pass = false;
    std::string detail;  // witness on failure
};

struct BoundsOptions {
    int sandwich_mmax = 64;   // sandwich + |a|<=2 range
    int lb_mmax = 64;         // rho_m(e) > A(m) for 4 <= m
    int ub_mmax = 64;         // |rho_m(g)| < B(m) for 12 <= m, g != e
    int crude_jmin = 16;      // rho_j(e) >= sum #[g] |rho_j(g)|
    int crude_jmax = 24;
    int ab_xmax = 64;         // A(x) > #M24 B(x) for 16 <= x
};

std::vector<BoundCheck> verify_bounds(const CharacterTable& t, const BoundsOptions& opt);

}  // namespace m24rh::rho
