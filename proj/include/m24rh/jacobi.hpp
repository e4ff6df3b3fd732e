#pragma once

// Exact q,y(,v)-expansions: Dedekind eta and eta products driven by cycle
// shapes, the four Jacobi theta functions as truncated product expansions,
// the twined weak Jacobi forms phi_g, the two-elliptic-variable form H, and
// the eigenvalue-magnitude checks for the C/D constants.
//
// Exponent grid: q-exponents live on (1/48)Z (eta(tau/2) contributes
// q^{1/48}), y- and v-exponents on (1/2)Z (theta_1/theta_2 prefactors).
// Keys store q in 1/48 units and y, v in 1/2 units.

#include <map>
#include <string>
#include <vector>

#include "m24rh/m24.hpp"

namespace m24rh::jacobi {

struct JetKey {
    int q48 = 0;
    int y2 = 0;
    int v2 = 0;
    auto operator<=>(const JetKey&) const = default;
};

class QYJet {
public:
    explicit QYJet(int trunc48 = 0) : trunc48_(trunc48) {}
    static QYJet constant(const MultiQuad& c, int trunc48);
    static QYJet monomial(const MultiQuad& c, JetKey k, int trunc48);

    int trunc48() const { return trunc48_; }
    const std::map<JetKey, MultiQuad>& terms() const { return t_; }
    bool known_zero() const { return t_.empty(); }
    int valuation_bound() const { return t_.empty() ? trunc48_ + 1 : t_.begin()->first.q48; }
    MultiQuad coeff(const JetKey& k) const;

    void add_term(const JetKey& k, const MultiQuad& c);

    QYJet operator+(const QYJet& o) const;
    QYJet operator-(const QYJet& o) const;
    QYJet operator-() const;
    QYJet operator*(const QYJet& o) const;
    QYJet scaled(const MultiQuad& c) const;
    QYJet truncated(int trunc48) const;
    bool equal_up_to(const QYJet& o, int trunc48) const;

    bool pure_q() const;        // no y or v dependence
    QYJet reciprocal() const;   // pure-q jets with invertible leading term

    QYJet specialize_v_to_y() const;
    QYJet specialize_v_to_one() const;
    QYJet q0_slice() const;
    QYJet substitute_y_inverse() const;

    // all q-exponents integral (48 | q48) and y-, v-exponents integral
    bool integral_exponents() const;

private:
    std::map<JetKey, MultiQuad> t_;
    int trunc48_;
};

// eta((scale2/2) tau) up to q^N: q^{scale2/48} prod_{n>0}(1 - q^{scale2 n/2})
QYJet eta_qexp(int scale2, int N);

// Finite multiset of eta scales with integer exponents.
class EtaProduct {
public:
    EtaProduct() = default;
    static EtaProduct from_shape(const CycleShape& shape);
    // replaces eta(k tau)^m by (eta(2k tau)/eta(k tau))^m for odd k
    EtaProduct minus_g() const;
    // evaluates at tau (half=false) or tau/2 (half=true), exact to q^N
    QYJet eval(bool half, int N) const;
    const std::map<int, int>& factors() const { return f_; }

private:
    std::map<int, int> f_;  // scale k -> exponent
};

// prod_k eta((k or k/2) tau)^{m_k} for the given cycle shape
QYJet eta_g(const CycleShape& shape, bool half, int N);
// same with eta(k tau) -> eta(2k tau)/eta(k tau) for odd k
QYJet eta_minus_g(const CycleShape& shape, bool half, int N);

// theta_index with elliptic argument given by Y = y^{ay} v^{av}; the public
// z_multiplier form uses (ay, av) = (z_mult, 0).
QYJet theta_general(int index, int ay, int av, int N);
QYJet theta_qexp(int index, int z_multiplier, int N);
QYJet theta_zero_arg(int index, int N);  // theta_index(tau, 0)

struct ClassFormData {
    std::string label;
    CycleShape shape;
    MultiQuad C;  // C_{-g}
    MultiQuad D;  // D_g
};

// Parses the per-class data file; validates the vanishing patterns of C
// and D against the cycle shapes.
std::map<std::string, ClassFormData> load_class_form_data(const std::string& text);

// Caches the theta ratios so the 26 phi_g assemblies share work.
class FormContext {
public:
    FormContext(std::map<std::string, ClassFormData> data, int N);

    int order() const { return N_; }
    const std::map<std::string, ClassFormData>& data() const { return data_; }
    const ClassFormData& form_data(const std::string& label) const;

    // four-term eta/theta assembly; throws if any fractional exponent
    // survives.
    QYJet phi_g(const std::string& label) const;
    // the level-one form assembled from the explicit eta-power expression
    QYJet phi_identity() const;
    // the two-elliptic-variable form H(tau, z, w) with y from z, v from w
    QYJet h_threevar() const;

private:
    std::map<std::string, ClassFormData> data_;
    int N_;
    int work48_;
    QYJet t4_ratio_, t3_ratio_, t2_ratio_, t1_over_eta3_;

    QYJet finish(QYJet sum, const std::string& what) const;
};

struct CdMagnitude {
    Int c_squared;       // computed |C_{-g}|^2 from the eigenvalue pairs
    Int d_squared;       // computed |D_g|^2
    bool pass = false;   // matches the tabulated values
};

// Pairs the 24 permutation eigenvalues (lambda with lambda^{-1}, repeated
// +-1 among themselves, one lambda=1 pair designated), then evaluates
// |C|^2 = prod (2 + lambda + lambda^{-1}) and |D|^2 over the rest, exactly,
// via integer cyclotomic-norm polynomial evaluations.
CdMagnitude cd_magnitude_check(const ClassFormData& data);

}  // namespace m24rh::jacobi
