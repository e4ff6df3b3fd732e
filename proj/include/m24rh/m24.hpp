#pragma once

// The M24 character table as structured, validated data: 26 conjugacy
// classes with cycle shapes and prime power maps, 26 irreducible characters
// over MultiQuad, centralizer orders derived from column orthogonality, and
// the class-function algebra (inner products, decomposition).

#include <array>
#include <map>
#include <string>
#include <vector>

#include "m24rh/exactnum.hpp"

namespace m24rh {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kNumClasses = 26;
inline constexpr int kTablePrimes[6] = {2, 3, 5, 7, 11, 23};

// Multiset of cycle lengths of a permutation of 24 points.
class CycleShape {
public:
    CycleShape() = default;
    explicit CycleShape(std::vector<std::pair<int, int>> factors);

    // Parses "1^8.2^8", "2.4.6.12", "1.23", ...
    static CycleShape parse(const std::string& text);

    const std::vector<std::pair<int, int>>& factors() const { return factors_; }
    int total_points() const;   // sum of length*multiplicity
    int cycle_count() const;    // number of cycles
    int fixed_points() const;   // multiplicity of length 1
    int even_cycle_count() const;
    int order() const;          // lcm of lengths
    std::string str() const;

private:
    std::vector<std::pair<int, int>> factors_;  // (length, multiplicity), ascending
};

struct ConjClass {
    std::string label;
    int element_order = 1;
    CycleShape cycle_shape;
    std::map<int, int> power_images;  // prime -> class index
};

class CharacterTable;

// A 26-entry value assignment on the conjugacy classes.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(std::array<MultiQuad, kNumClasses> v) : v_(std::move(v)) {}
    static ClassFunction constant(const MultiQuad& x);

    const MultiQuad& at(int ci) const { return v_.at(static_cast<size_t>(ci)); }
    MultiQuad& at(int ci) { return v_.at(static_cast<size_t>(ci)); }

    ClassFunction operator+(const ClassFunction& o) const;
    ClassFunction operator-(const ClassFunction& o) const;
    ClassFunction operator*(const ClassFunction& o) const;  // pointwise
    ClassFunction operator-() const;
    bool operator==(const ClassFunction& o) const { return v_ == o.v_; }
    ClassFunction conj() const;
    ClassFunction div_int(const Int& k) const;
    ClassFunction scaled(const MultiQuad& x) const;
    bool is_zero() const;

private:
    std::array<MultiQuad, kNumClasses> v_{};
};

// pointwise inverse; usable whenever every value is nonzero
ClassFunction ring_inv(const ClassFunction& f);
inline ClassFunction ring_div_int(const ClassFunction& f, long k) { return f.div_int(Int(k)); }

class CharacterTable {
public:
    // Parses and validates the table text; any invariant failure throws a
    // DataError naming the identity that failed.
    static CharacterTable load(const std::string& text);

    int class_index(const std::string& label) const;
    const ConjClass& cls(int ci) const { return classes_.at(static_cast<size_t>(ci)); }
    const std::vector<ConjClass>& classes() const { return classes_; }
    const ClassFunction& irreducible(int i) const { return irr_.at(static_cast<size_t>(i)); }
    char fs_indicator(int i) const { return fs_.at(static_cast<size_t>(i)); }
    const Int& centralizer_order(int ci) const { return centralizer_.at(static_cast<size_t>(ci)); }
    const Int& group_order() const { return group_order_; }
    Int class_size(int ci) const { return group_order_ / centralizer_.at(static_cast<size_t>(ci)); }
    Int irreducible_degree(int i) const { return irr_.at(static_cast<size_t>(i)).at(0).as_integer(); }

    // Class of g^k for g in class ci; composed from the stored prime maps.
    int power_class(int ci, const Int& k) const;

    // <f, h> = sum_g f(g) conj(h(g)) / #C(g)
    MultiQuad inner_product(const ClassFunction& f, const ClassFunction& h) const;

    // Multiplicities <f, chi_i>; *all_integral reports whether every entry
    // is a rational integer.
    std::array<MultiQuad, kNumClasses> decompose(const ClassFunction& f,
                                                 bool* all_integral = nullptr) const;

    int perm_fixed_points(int ci) const { return cls(ci).cycle_shape.fixed_points(); }

private:
    std::vector<ConjClass> classes_;
    std::vector<ClassFunction> irr_;
    std::vector<char> fs_;
    std::vector<Int> centralizer_;
    std::vector<ClassFunction> decomp_;  // conj(chi_i(c)) / #C(c), cached
    Int group_order_ = 0;
    std::map<std::string, int> index_;

    void validate();
};

}  // namespace m24rh
