#pragma once

// The representation ring R of M24 and R[[x]]: Adams operations, the
// generating series of alternating and symmetric powers, and the two
// factorization algorithms (every unit-constant series is a product of
// S_{x^n}(U_n), resp. of alternating Lambda/S factors).

#include <optional>
#include <vector>

#include "m24rh/m24.hpp"
#include "m24rh/series.hpp"

namespace m24rh::repring {

// Integer combination of the 26 irreducibles, with cached class-function
// values.  Immutable after construction.  For elements created inside
// product chains the multiplicities are materialized on first request (the
// values determine them uniquely); from_values checks integrality eagerly.
class VirtualCharacter {
public:
    VirtualCharacter() = default;

    static VirtualCharacter zero(const CharacterTable& t);
    static VirtualCharacter irreducible(const CharacterTable& t, int i);
    static VirtualCharacter trivial(const CharacterTable& t) { return irreducible(t, 0); }
    static VirtualCharacter from_multiplicities(const CharacterTable& t,
                                                std::array<Int, kNumClasses> m);
    // decomposes the values; throws unless every multiplicity is a rational
    // integer
    static VirtualCharacter from_values(const CharacterTable& t, ClassFunction values);
    // defers the decomposition; for values already known to lie in R
    static VirtualCharacter from_values_lazy(const CharacterTable& t, ClassFunction values);

    const CharacterTable& table() const;
    const std::array<Int, kNumClasses>& multiplicities() const;
    const ClassFunction& values() const { return values_; }
    Int dimension() const { return values_.at(0).as_integer(); }
    bool is_zero() const { return values_.is_zero(); }

    VirtualCharacter operator+(const VirtualCharacter& o) const;
    VirtualCharacter operator-(const VirtualCharacter& o) const;
    VirtualCharacter operator-() const;
    VirtualCharacter operator*(const VirtualCharacter& o) const;  // tensor product
    bool operator==(const VirtualCharacter& o) const { return values_ == o.values_; }

private:
    const CharacterTable* t_ = nullptr;
    mutable std::optional<std::array<Int, kNumClasses>> mult_;
    ClassFunction values_;
};

// psi^k(U): g -> U(g^k), re-expressed over the irreducibles
VirtualCharacter adams(const VirtualCharacter& U, int k);

// Element of R[[x]] truncated at x^N.
class RSeries {
public:
    RSeries(const CharacterTable& t, int order);
    static RSeries unit(const CharacterTable& t, int order);

    int order() const { return order_; }
    const CharacterTable& table() const { return *t_; }
    const VirtualCharacter& coeff(int k) const;
    void set_coeff(int k, VirtualCharacter v);

    RSeries operator*(const RSeries& o) const;
    RSeries operator+(const RSeries& o) const;
    RSeries operator-(const RSeries& o) const;
    bool operator==(const RSeries& o) const;

    RSeries truncated(int order) const;
    RSeries substituted_negx() const;            // x -> -x
    RSeries substituted_power(int n) const;      // x -> x^n
    RSeries reciprocal() const;                  // needs unit constant term

    // dimension specialization: the integer series dim applied per
    // coefficient
    TruncatedSeries<Rat> dimensions() const;

private:
    const CharacterTable* t_;
    std::vector<VirtualCharacter> coef_;  // index = exponent, 0..order_
    int order_;
};

// Lambda_x(U) = sum Lambda^k(U) x^k and S_x(U) = sum S^k(U) x^k via the
// Adams-operation recurrences; every coefficient's integrality is asserted.
RSeries lambda_series(const VirtualCharacter& U, int N);
RSeries sigma_series(const VirtualCharacter& U, int N);

// U_1..U_N with f = prod_{n>0} S_{x^n}(U_n) + O(x^{N+1})
std::vector<VirtualCharacter> factor_sigma(const RSeries& f);
// U_1..U_N with f = prod_j Lambda_{x^{2j-1}}(U_{2j-1}) S_{x^{2j}}(U_{2j})
std::vector<VirtualCharacter> factor_alternating(const RSeries& f);

// reconstruction helpers (round-trip oracles)
RSeries sigma_product(const CharacterTable& t, const std::vector<VirtualCharacter>& U, int N);
RSeries alternating_product(const CharacterTable& t, const std::vector<VirtualCharacter>& U, int N);

}  // namespace m24rh::repring
