#include "m24rh/jacobi.hpp"

#include <sstream>

namespace m24rh::jacobi {

QYJet QYJet::constant(const MultiQuad& c, int trunc48) {
    QYJet j(trunc48);
    j.add_term({0, 0, 0}, c);
    return j;
}

QYJet QYJet::monomial(const MultiQuad& c, JetKey k, int trunc48) {
    QYJet j(trunc48);
    j.add_term(k, c);
    return j;
}

MultiQuad QYJet::coeff(const JetKey& k) const {
    if (k.q48 > trunc48_) throw ExactError("jet coefficient beyond truncation");
    auto it = t_.find(k);
    return it == t_.end() ? MultiQuad() : it->second;
}

void QYJet::add_term(const JetKey& k, const MultiQuad& c) {
    if (k.q48 > trunc48_ || c.is_zero()) return;
    auto [it, inserted] = t_.emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

QYJet QYJet::operator+(const QYJet& o) const {
    QYJet r(std::min(trunc48_, o.trunc48_));
    for (const auto& [k, c] : t_) r.add_term(k, c);
    for (const auto& [k, c] : o.t_) r.add_term(k, c);
    return r;
}

QYJet QYJet::operator-(const QYJet& o) const {
    QYJet r(std::min(trunc48_, o.trunc48_));
    for (const auto& [k, c] : t_) r.add_term(k, c);
    for (const auto& [k, c] : o.t_) r.add_term(k, -c);
    return r;
}

QYJet QYJet::operator-() const {
    QYJet r(trunc48_);
    for (const auto& [k, c] : t_) r.t_.emplace(k, -c);
    return r;
}

QYJet QYJet::operator*(const QYJet& o) const {
    long tr = std::min<long>(static_cast<long>(trunc48_) + o.valuation_bound(),
                             static_cast<long>(o.trunc48_) + valuation_bound());
    tr = std::min<long>(tr, 1L << 28);
    QYJet r(static_cast<int>(tr));
    for (const auto& [ka, ca] : t_) {
        for (const auto& [kb, cb] : o.t_) {
            if (static_cast<long>(ka.q48) + kb.q48 > tr) break;  // keys sorted by q48 first
            r.add_term({ka.q48 + kb.q48, ka.y2 + kb.y2, ka.v2 + kb.v2}, ca * cb);
        }
    }
    return r;
}

QYJet QYJet::scaled(const MultiQuad& c) const {
    QYJet r(trunc48_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.add_term(k, v * c);
    return r;
}

QYJet QYJet::truncated(int trunc48) const {
    QYJet r(std::min(trunc48, trunc48_));
    for (const auto& [k, c] : t_) r.add_term(k, c);
    return r;
}

bool QYJet::equal_up_to(const QYJet& o, int trunc48) const {
    if (trunc48_ < trunc48 || o.trunc48_ < trunc48)
        throw ExactError("jet comparison beyond a truncation order");
    auto ia = t_.begin();
    auto ib = o.t_.begin();
    while (ia != t_.end() && ia->first.q48 <= trunc48 && ib != o.t_.end() && ib->first.q48 <= trunc48) {
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        ++ia;
        ++ib;
    }
    auto tail_empty = [trunc48](auto it, auto end) {
        return it == end || it->first.q48 > trunc48;
    };
    return tail_empty(ia, t_.end()) && tail_empty(ib, o.t_.end());
}

bool QYJet::pure_q() const {
    for (const auto& [k, c] : t_)
        if (k.y2 != 0 || k.v2 != 0) return false;
    return true;
}

QYJet QYJet::reciprocal() const {
    if (!pure_q()) throw ExactError("jet reciprocal implemented for q-series only");
    if (t_.empty()) throw ExactError("reciprocal of zero jet");
    const int v = t_.begin()->first.q48;
    const MultiQuad lead_inv = t_.begin()->second.inverse();
    const int out_trunc = trunc48_ - 2 * v;
    const int limit = out_trunc + v;  // largest offset exponent needed
    std::vector<std::pair<int, MultiQuad>> a;  // positive offsets of the input
    for (const auto& [k, c] : t_)
        if (k.q48 != v) a.emplace_back(k.q48 - v, c);
    std::map<int, MultiQuad> b;  // offset -> coefficient, zeros omitted
    b.emplace(0, lead_inv);
    for (int e = 1; e <= limit; ++e) {
        MultiQuad s;
        for (const auto& [d, c] : a) {
            if (d > e) break;
            auto itb = b.find(e - d);
            if (itb != b.end()) s += c * itb->second;
        }
        if (!s.is_zero()) b.emplace(e, -(lead_inv * s));
    }
    QYJet r(out_trunc);
    for (const auto& [e, c] : b) r.add_term({e - v, 0, 0}, c);
    return r;
}

QYJet QYJet::specialize_v_to_y() const {
    QYJet r(trunc48_);
    for (const auto& [k, c] : t_) r.add_term({k.q48, k.y2 + k.v2, 0}, c);
    return r;
}

QYJet QYJet::specialize_v_to_one() const {
    QYJet r(trunc48_);
    for (const auto& [k, c] : t_) r.add_term({k.q48, k.y2, 0}, c);
    return r;
}

QYJet QYJet::q0_slice() const {
    QYJet r(trunc48_);
    for (const auto& [k, c] : t_) {
        if (k.q48 > 0) break;
        if (k.q48 == 0) r.add_term(k, c);
    }
    return r;
}

QYJet QYJet::substitute_y_inverse() const {
    QYJet r(trunc48_);
    for (const auto& [k, c] : t_) r.add_term({k.q48, -k.y2, k.v2}, c);
    return r;
}

bool QYJet::integral_exponents() const {
    for (const auto& [k, c] : t_)
        if (k.q48 % 48 != 0 || k.y2 % 2 != 0 || k.v2 % 2 != 0) return false;
    return true;
}

QYJet eta_qexp(int scale2, int N) {
    if (scale2 <= 0) throw ExactError("eta scale must be a positive multiple of 1/2");
    const int trunc = 48 * N;
    QYJet f = QYJet::constant(MultiQuad(1L), trunc);
    for (long n = 1; 24 * static_cast<long>(scale2) * n <= trunc; ++n) {
        QYJet fac = QYJet::constant(MultiQuad(1L), trunc);
        fac.add_term({static_cast<int>(24 * scale2 * n), 0, 0}, MultiQuad(-1L));
        f = f * fac;
    }
    QYJet pre = QYJet::monomial(MultiQuad(1L), {scale2, 0, 0}, trunc);
    return (pre * f).truncated(trunc);
}

EtaProduct EtaProduct::from_shape(const CycleShape& shape) {
    EtaProduct e;
    for (const auto& [k, m] : shape.factors()) e.f_[k] += m;
    return e;
}

EtaProduct EtaProduct::minus_g() const {
    EtaProduct e;
    for (const auto& [k, m] : f_) {
        if (k % 2 == 1) {
            e.f_[2 * k] += m;
            e.f_[k] -= m;
        } else {
            e.f_[k] += m;
        }
    }
    for (auto it = e.f_.begin(); it != e.f_.end();)
        it = (it->second == 0) ? e.f_.erase(it) : std::next(it);
    return e;
}

QYJet EtaProduct::eval(bool half, int N) const {
    QYJet out = QYJet::constant(MultiQuad(1L), 48 * N);
    for (const auto& [k, m] : f_) {
        if (m == 0) continue;
        QYJet base = eta_qexp(half ? k : 2 * k, N);
        if (m < 0) base = base.reciprocal();
        for (int i = 0; i < std::abs(m); ++i) out = out * base;
    }
    return out;
}

QYJet eta_g(const CycleShape& shape, bool half, int N) {
    if (shape.total_points() != 24) throw ExactError("cycle shape must sum to 24");
    return EtaProduct::from_shape(shape).eval(half, N);
}

QYJet eta_minus_g(const CycleShape& shape, bool half, int N) {
    if (shape.total_points() != 24) throw ExactError("cycle shape must sum to 24");
    return EtaProduct::from_shape(shape).minus_g().eval(half, N);
}

QYJet theta_general(int index, int ay, int av, int N) {
    if (index < 1 || index > 4) throw ExactError("theta index must be 1..4");
    const int trunc = 48 * N;
    const bool plus = (index == 2 || index == 3);
    QYJet f = QYJet::constant(MultiQuad(1L), trunc);
    auto elliptic_factor = [&](int q48, int sgn) {
        QYJet fac = QYJet::constant(MultiQuad(1L), trunc);
        fac.add_term({q48, 2 * ay * sgn, 2 * av * sgn}, MultiQuad(plus ? 1L : -1L));
        return fac;
    };
    if (index == 1 || index == 2) {
        for (long n = 1; 48 * n <= trunc; ++n) f = f * elliptic_factor(static_cast<int>(48 * n), 1);
        for (long n = 1; 48 * (n - 1) <= trunc; ++n)
            f = f * elliptic_factor(static_cast<int>(48 * (n - 1)), -1);
        for (long n = 1; 48 * n <= trunc; ++n) {
            QYJet fac = QYJet::constant(MultiQuad(1L), trunc);
            fac.add_term({static_cast<int>(48 * n), 0, 0}, MultiQuad(-1L));
            f = f * fac;
        }
        QYJet pre = QYJet::monomial(MultiQuad(1L), {6, ay, av}, trunc);  // q^{1/8} Y^{1/2}
        f = pre * f;
        if (index == 1) f = f.scaled(-MultiQuad::i());
    } else {
        for (long n = 1; 48 * n - 24 <= trunc; ++n) {
            f = f * elliptic_factor(static_cast<int>(48 * n - 24), 1);
            f = f * elliptic_factor(static_cast<int>(48 * n - 24), -1);
        }
        for (long n = 1; 48 * n <= trunc; ++n) {
            QYJet fac = QYJet::constant(MultiQuad(1L), trunc);
            fac.add_term({static_cast<int>(48 * n), 0, 0}, MultiQuad(-1L));
            f = f * fac;
        }
    }
    return f;
}

QYJet theta_qexp(int index, int z_multiplier, int N) {
    if (z_multiplier != 1 && z_multiplier != 2)
        throw ExactError("z multiplier must be 1 or 2");
    return theta_general(index, z_multiplier, 0, N);
}

QYJet theta_zero_arg(int index, int N) { return theta_general(index, 0, 0, N); }

std::map<std::string, ClassFormData> load_class_form_data(const std::string& text) {
    std::map<std::string, ClassFormData> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        ClassFormData d;
        std::string shape, c, dd;
        if (!(ls >> d.label >> shape >> c >> dd))
            throw DataError("malformed class form data line: " + line);
        d.shape = CycleShape::parse(shape);
        d.C = MultiQuad::parse(c);
        d.D = MultiQuad::parse(dd);
        if (d.shape.total_points() != 24)
            throw DataError("cycle shape of " + d.label + " does not sum to 24");
        if (d.shape.even_cycle_count() > 0 && !d.C.is_zero())
            throw DataError("C_{-g} must vanish for even cycles: " + d.label);
        if (d.shape.cycle_count() != 2 && !d.D.is_zero())
            throw DataError("D_g must vanish unless the fixed space is 2-dimensional: " + d.label);
        out[d.label] = std::move(d);
    }
    return out;
}

FormContext::FormContext(std::map<std::string, ClassFormData> data, int N)
    : data_(std::move(data)), N_(N), work48_(48 * N + 288) {
    const int W = work48_ / 48 + 1;  // q-order with margin
    QYJet t4 = theta_general(4, 2, 0, W);
    QYJet t3 = theta_general(3, 2, 0, W);
    QYJet t2 = theta_general(2, 2, 0, W);
    QYJet t1 = theta_general(1, 2, 0, W);
    t4_ratio_ = t4 * theta_zero_arg(4, W).reciprocal();
    t3_ratio_ = t3 * theta_zero_arg(3, W).reciprocal();
    t2_ratio_ = t2 * theta_zero_arg(2, W).reciprocal();
    QYJet eta3 = eta_qexp(2, W);
    eta3 = eta3 * eta3 * eta3;
    t1_over_eta3_ = t1 * eta3.reciprocal();
}

const ClassFormData& FormContext::form_data(const std::string& label) const {
    auto it = data_.find(label);
    if (it == data_.end()) throw DataError("unknown class label '" + label + "'");
    return it->second;
}

QYJet FormContext::finish(QYJet sum, const std::string& what) const {
    if (sum.trunc48() < 48 * N_)
        throw ExactError(what + ": internal truncation fell short; raise the margin");
    QYJet out(48 * N_);
    for (const auto& [k, c] : sum.terms()) {
        if (k.q48 > 48 * N_) break;
        if (k.q48 % 48 != 0 || k.y2 % 2 != 0 || k.v2 % 2 != 0)
            throw ExactError(what + ": residual fractional exponent at q48=" +
                             std::to_string(k.q48) + ", y2=" + std::to_string(k.y2) +
                             ", coefficient " + c.str());
        out.add_term(k, c);
    }
    return out;
}

QYJet FormContext::phi_g(const std::string& label) const {
    const ClassFormData& d = form_data(label);
    const int W = work48_ / 48 + 1;
    const MultiQuad half(Rat(1, 2));

    EtaProduct eg = EtaProduct::from_shape(d.shape);
    EtaProduct emg = eg.minus_g();
    QYJet eg_tau = eg.eval(false, W);
    QYJet eg_half = eg.eval(true, W);
    QYJet emg_tau = emg.eval(false, W);
    QYJet emg_half = emg.eval(true, W);

    QYJet sum = (t4_ratio_ * (eg_half * eg_tau.reciprocal())).scaled(-half);
    sum = sum + (t3_ratio_ * (emg_half * emg_tau.reciprocal())).scaled(half);
    if (!d.C.is_zero()) sum = sum - (t2_ratio_ * emg_tau).scaled(half * d.C);
    if (!d.D.is_zero())
        sum = sum - (t1_over_eta3_ * eg_tau).scaled(half * MultiQuad::i() * d.D);
    return finish(std::move(sum), "phi_" + label);
}

QYJet FormContext::phi_identity() const {
    const int W = work48_ / 48 + 1;
    const MultiQuad half(Rat(1, 2));
    QYJet e_half24 = eta_qexp(1, W);   // eta(tau/2)
    QYJet e_tau24 = eta_qexp(2, W);    // eta(tau)
    QYJet e_2tau24 = eta_qexp(4, W);   // eta(2tau)
    auto pow24 = [](QYJet b) {
        QYJet sq = b * b;          // 2
        QYJet q4 = sq * sq;        // 4
        QYJet q8 = q4 * q4;        // 8
        return q8 * q8 * q8;       // 24
    };
    QYJet A = pow24(e_half24) * pow24(e_tau24).reciprocal();
    QYJet B = pow24(e_tau24) * pow24(e_tau24) *
              (pow24(e_half24) * pow24(e_2tau24)).reciprocal();
    QYJet C = pow24(e_2tau24) * pow24(e_tau24).reciprocal();
    QYJet sum = (t4_ratio_ * A).scaled(-half) + (t3_ratio_ * B).scaled(half) -
                (t2_ratio_ * C).scaled(half * MultiQuad(Int(4096)));
    return finish(std::move(sum), "phi_identity");
}

QYJet FormContext::h_threevar() const {
    const int W = work48_ / 48 + 1;
    const MultiQuad half(Rat(1, 2));
    auto pow24 = [](QYJet b) {
        QYJet sq = b * b;
        QYJet q4 = sq * sq;
        QYJet q8 = q4 * q4;
        return q8 * q8 * q8;
    };
    QYJet e_half24 = pow24(eta_qexp(1, W));
    QYJet e_tau24 = pow24(eta_qexp(2, W));
    QYJet e_2tau24 = pow24(eta_qexp(4, W));
    QYJet A = e_half24 * e_tau24.reciprocal();
    QYJet B = e_tau24 * e_tau24 * (e_half24 * e_2tau24).reciprocal();
    QYJet C = e_2tau24 * e_tau24.reciprocal();
    auto ratio2 = [&](int idx) {
        QYJet zm = theta_general(idx, 1, -1, W);
        QYJet zp = theta_general(idx, 1, 1, W);
        QYJet den = theta_zero_arg(idx, W).reciprocal();
        return zm * zp * den * den;
    };
    QYJet sum = (ratio2(4) * A).scaled(-half) + (ratio2(3) * B).scaled(half) -
                (ratio2(2) * C).scaled(half * MultiQuad(Int(4096)));
    return finish(std::move(sum), "h_threevar");
}

namespace {

// coefficients of (x^k - 1)/(x - 1), optionally divided by (x + 1) for even
// k, evaluated exactly at x = 1 or x = -1
Int cyclotomic_pair_product(int k, bool minus_case) {
    std::vector<Int> poly(static_cast<size_t>(k), 1);  // 1 + x + ... + x^{k-1}
    if (k % 2 == 0) {
        // synthetic division by (x + 1); remainder must vanish
        std::vector<Int> quot(poly.size() - 1, 0);
        Int carry = poly.back();
        for (size_t i = poly.size() - 1; i-- > 0;) {
            quot[i] = carry;
            carry = poly[i] - carry;
        }
        if (carry != 0) throw ExactError("cyclotomic division failed");
        poly = std::move(quot);
    }
    // minus case evaluates at 1, plus case at -1
    Int x = minus_case ? 1 : -1;
    Int acc = 0;
    for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
    return acc;
}

}  // namespace

CdMagnitude cd_magnitude_check(const ClassFormData& data) {
    const CycleShape& sh = data.shape;
    const int ones = sh.cycle_count();             // multiplicity of eigenvalue +1
    const int minus_ones = sh.even_cycle_count();  // multiplicity of eigenvalue -1
    if (ones % 2 != 0 || minus_ones % 2 != 0)
        throw ExactError("eigenvalues +-1 cannot be paired for shape " + sh.str());
    CdMagnitude r;
    // |C|^2: (1,1) pairs give 4, (-1,-1) pairs give 0, complex pairs give
    // the cyclotomic norms
    if (minus_ones > 0) {
        r.c_squared = 0;
    } else {
        r.c_squared = boost::multiprecision::pow(Int(2), static_cast<unsigned>(ones));
        for (const auto& [k, m] : sh.factors())
            for (int i = 0; i < m; ++i) r.c_squared *= cyclotomic_pair_product(k, false);
    }
    // |D|^2: any (1,1) pair beyond the designated one kills it; (-1,-1)
    // pairs give 4
    if (ones > 2) {
        r.d_squared = 0;
    } else {
        r.d_squared = boost::multiprecision::pow(Int(4), static_cast<unsigned>(minus_ones / 2));
        for (const auto& [k, m] : sh.factors())
            for (int i = 0; i < m; ++i) r.d_squared *= cyclotomic_pair_product(k, true);
    }
    Int c2 = data.C.norm2().as_integer();
    Int d2 = data.D.norm2().as_integer();
    r.pass = (r.c_squared == c2) && (r.d_squared == d2);
    return r;
}

}  // namespace m24rh::jacobi
