#pragma once

// Rational homotopy ranks of smooth complete intersections: Euler
// characteristics, the invariant l(X) = (-1)^n (chi - n - 1), Poincare
// series of X and of its loop space, and the rank sequence computed two
// independent ways (root power sums via Newton's identities, and plethystic
// peeling of the loop-space series).

#include <vector>

#include "m24rh/series.hpp"

namespace m24rh::homotopy {

struct CompleteIntersection {
    int dimension = 1;                // n >= 1
    std::vector<int> degrees;         // all >= 1, nonempty
};

struct HomotopyProfile {
    Int chi;
    Int ell;                          // (-1)^n (chi - n - 1)
    std::vector<Int> ranks;           // rho_1..rho_N
};

// coefficient of x^n in (1-x)^{-2} prod a_i/(1+(a_i-1)x)
Int euler_char_ci(const CompleteIntersection& X);

// (1/d)((1-d)^{n+2} + d(n+2) - 1)
Int euler_char_hypersurface(int n, int d);

Int ell_invariant(int n, const Int& chi);

// P_{Omega X}: (1+x)/(1-x^{2n}) when ell = 0, else
// (1+x)/(1 - ell x^{n-1} - ell x^n + x^{2n-1})
TruncatedSeries<Rat> loop_poincare(int n, const Int& ell, int N);

// P_X = (1 + ell x^n - ell x^{n+2} - x^{2n+2})/(1-x^2); a polynomial of
// degree 2n
TruncatedSeries<Rat> space_poincare(int n, const Int& ell, int N);

// Babenko's formula: chi = n+1 branch, else Moebius sums of exact power
// sums of the inverse roots of 1 - ell z^{n-1} - ell z^n + z^{2n-1} after
// removing the root z = -1 (Newton's identities; no floating point).
std::vector<Int> ranks_via_roots(int n, const Int& ell, const Int& chi, int N);

// plethystic_ranks of the reciprocal loop-space series
std::vector<Int> ranks_via_plethysm(int n, const Int& ell, int N);

HomotopyProfile profile(const CompleteIntersection& X, int N);

int mobius(long n);

}  // namespace m24rh::homotopy
