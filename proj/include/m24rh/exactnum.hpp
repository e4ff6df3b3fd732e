#pragma once

// Exact arithmetic for the whole library: arbitrary-precision integers and
// rationals, plus the 16-dimensional rational algebra Q(i, s7, s15, s23)
// that houses the irrational character values and the twining constants.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace m24rh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool rat_is_int(const Rat& r) { return rat_den(r) == 1; }

struct ExactError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Element of the commutative algebra with basis {prod_{s in S} s : S subset
// of {i, s7, s15, s23}}, where i^2 = -1 and sN^2 = N.  Coordinates are
// indexed by the bitmask of S (bit 0 = i, bit 1 = s7, bit 2 = s15,
// bit 3 = s23).  Values are immutable in spirit: all operations return new
// elements.
class MultiQuad {
public:
    static constexpr int kDim = 16;

    MultiQuad() = default;
    MultiQuad(long v) { c_[0] = v; }  // NOLINT(google-explicit-constructor)
    MultiQuad(Int v) { c_[0] = Rat(std::move(v)); }  // NOLINT
    MultiQuad(Rat v) { c_[0] = std::move(v); }       // NOLINT

    static MultiQuad unit(int mask);
    static MultiQuad i() { return unit(1); }
    static MultiQuad sqrt7() { return unit(2); }
    static MultiQuad sqrt15() { return unit(4); }
    static MultiQuad sqrt23() { return unit(8); }
    // ATLAS-style bN = (-1 + i*sqrt(N))/2 for N in {7, 15, 23}
    static MultiQuad b(int n);

    const Rat& coord(int mask) const { return c_.at(static_cast<size_t>(mask)); }

    MultiQuad operator+(const MultiQuad& o) const;
    MultiQuad operator-(const MultiQuad& o) const;
    MultiQuad operator-() const;
    MultiQuad operator*(const MultiQuad& o) const;
    MultiQuad& operator+=(const MultiQuad& o) { return *this = *this + o; }
    MultiQuad& operator-=(const MultiQuad& o) { return *this = *this - o; }
    MultiQuad& operator*=(const MultiQuad& o) { return *this = *this * o; }
    bool operator==(const MultiQuad& o) const { return c_ == o.c_; }
    bool operator!=(const MultiQuad& o) const { return !(*this == o); }

    // Complex conjugation: negates every coordinate whose basis set contains
    // i; sqrt7, sqrt15, sqrt23 are real and stay fixed.
    MultiQuad conj() const;

    // The Galois automorphism flipping the sign of the generators selected
    // by flip_mask (bit 0 = i, ...); conj() is automorph(1).
    MultiQuad automorph(int flip_mask) const;

    // Exact inverse in the multiquadratic field; throws on zero.
    MultiQuad inverse() const;

    MultiQuad div_int(const Int& k) const;  // exact division by a nonzero integer
    MultiQuad div_rat(const Rat& k) const;

    bool is_zero() const;
    bool is_rational() const;
    bool is_rational_integer() const;
    const Rat& rational_part() const { return c_[0]; }
    // The rational value, throwing if any irrational coordinate is nonzero.
    Rat as_rational() const;
    Int as_integer() const;

    // |z|^2 = z * conj(z); rationality is the caller's concern.
    MultiQuad norm2() const { return *this * conj(); }

    double to_double() const;

    // Canonical rendering: "a/b" for rationals, otherwise a parenthesized
    // sum of nonzero coordinates with tokens i, s7, s15, s23 and their
    // '*'-joined products.
    std::string str() const;
    // Parses the rendering above (also bare products like "3*s7*i").
    static MultiQuad parse(const std::string& text);

private:
    std::array<Rat, kDim> c_{};
};

std::string rat_str(const Rat& r);

}  // namespace m24rh
