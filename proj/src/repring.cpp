#include "m24rh/repring.hpp"

namespace m24rh::repring {

namespace {

ClassFunction values_of(const CharacterTable& t, const std::array<Int, kNumClasses>& mult) {
    ClassFunction f;
    for (int i = 0; i < kNumClasses; ++i) {
        if (mult[static_cast<size_t>(i)] == 0) continue;
        f = f + t.irreducible(i).scaled(MultiQuad(mult[static_cast<size_t>(i)]));
    }
    return f;
}

}  // namespace

VirtualCharacter VirtualCharacter::zero(const CharacterTable& t) {
    VirtualCharacter v;
    v.t_ = &t;
    v.mult_.emplace();
    return v;
}

VirtualCharacter VirtualCharacter::irreducible(const CharacterTable& t, int i) {
    std::array<Int, kNumClasses> m{};
    m.at(static_cast<size_t>(i)) = 1;
    return from_multiplicities(t, std::move(m));
}

VirtualCharacter VirtualCharacter::from_multiplicities(const CharacterTable& t,
                                                       std::array<Int, kNumClasses> m) {
    VirtualCharacter v;
    v.t_ = &t;
    v.values_ = values_of(t, m);
    v.mult_ = std::move(m);
    return v;
}

VirtualCharacter VirtualCharacter::from_values_lazy(const CharacterTable& t, ClassFunction values) {
    VirtualCharacter v;
    v.t_ = &t;
    v.values_ = std::move(values);
    return v;
}

const std::array<Int, kNumClasses>& VirtualCharacter::multiplicities() const {
    if (!mult_) {
        bool integral = false;
        auto d = table().decompose(values_, &integral);
        if (!integral) throw DataError("class function does not lie in the integral representation ring");
        std::array<Int, kNumClasses> m;
        for (int i = 0; i < kNumClasses; ++i) m[static_cast<size_t>(i)] = d[static_cast<size_t>(i)].as_integer();
        mult_ = std::move(m);
    }
    return *mult_;
}

VirtualCharacter VirtualCharacter::from_values(const CharacterTable& t, ClassFunction values) {
    VirtualCharacter v = from_values_lazy(t, std::move(values));
    v.multiplicities();  // force the integrality check
    return v;
}

const CharacterTable& VirtualCharacter::table() const {
    if (!t_) throw DataError("virtual character without a table");
    return *t_;
}

VirtualCharacter VirtualCharacter::operator+(const VirtualCharacter& o) const {
    VirtualCharacter v;
    v.t_ = t_ ? t_ : o.t_;
    if (mult_ && o.mult_) {
        std::array<Int, kNumClasses> m;
        for (int i = 0; i < kNumClasses; ++i)
            m[static_cast<size_t>(i)] = (*mult_)[static_cast<size_t>(i)] + (*o.mult_)[static_cast<size_t>(i)];
        v.mult_ = std::move(m);
    }
    v.values_ = values_ + o.values_;
    return v;
}

VirtualCharacter VirtualCharacter::operator-(const VirtualCharacter& o) const {
    VirtualCharacter v;
    v.t_ = t_ ? t_ : o.t_;
    if (mult_ && o.mult_) {
        std::array<Int, kNumClasses> m;
        for (int i = 0; i < kNumClasses; ++i)
            m[static_cast<size_t>(i)] = (*mult_)[static_cast<size_t>(i)] - (*o.mult_)[static_cast<size_t>(i)];
        v.mult_ = std::move(m);
    }
    v.values_ = values_ - o.values_;
    return v;
}

VirtualCharacter VirtualCharacter::operator-() const {
    VirtualCharacter v;
    v.t_ = t_;
    if (mult_) {
        std::array<Int, kNumClasses> m;
        for (int i = 0; i < kNumClasses; ++i) m[static_cast<size_t>(i)] = -(*mult_)[static_cast<size_t>(i)];
        v.mult_ = std::move(m);
    }
    v.values_ = -values_;
    return v;
}

VirtualCharacter VirtualCharacter::operator*(const VirtualCharacter& o) const {
    return from_values_lazy(table(), values_ * o.values_);
}

VirtualCharacter adams(const VirtualCharacter& U, int k) {
    const CharacterTable& t = U.table();
    ClassFunction pulled;
    for (int c = 0; c < kNumClasses; ++c) pulled.at(c) = U.values().at(t.power_class(c, Int(k)));
    return VirtualCharacter::from_values(t, std::move(pulled));
}

RSeries::RSeries(const CharacterTable& t, int order) : t_(&t), order_(order) {
    coef_.assign(static_cast<size_t>(order) + 1, VirtualCharacter::zero(t));
}

RSeries RSeries::unit(const CharacterTable& t, int order) {
    RSeries f(t, order);
    f.set_coeff(0, VirtualCharacter::trivial(t));
    return f;
}

const VirtualCharacter& RSeries::coeff(int k) const {
    if (k < 0 || k > order_) throw DataError("RSeries coefficient out of range");
    return coef_[static_cast<size_t>(k)];
}

void RSeries::set_coeff(int k, VirtualCharacter v) {
    if (k < 0 || k > order_) throw DataError("RSeries coefficient out of range");
    coef_[static_cast<size_t>(k)] = std::move(v);
}

RSeries RSeries::operator*(const RSeries& o) const {
    int ord = std::min(order_, o.order_);
    RSeries out(*t_, ord);
    for (int k = 0; k <= ord; ++k) {
        ClassFunction acc;
        for (int i = 0; i <= k; ++i) {
            const auto& a = coef_[static_cast<size_t>(i)];
            const auto& b = o.coef_[static_cast<size_t>(k - i)];
            if (a.is_zero() || b.is_zero()) continue;
            acc = acc + a.values() * b.values();
        }
        out.set_coeff(k, VirtualCharacter::from_values_lazy(*t_, std::move(acc)));
    }
    return out;
}

RSeries RSeries::operator+(const RSeries& o) const {
    int ord = std::min(order_, o.order_);
    RSeries out(*t_, ord);
    for (int k = 0; k <= ord; ++k) out.set_coeff(k, coef_[static_cast<size_t>(k)] + o.coef_[static_cast<size_t>(k)]);
    return out;
}

RSeries RSeries::operator-(const RSeries& o) const {
    int ord = std::min(order_, o.order_);
    RSeries out(*t_, ord);
    for (int k = 0; k <= ord; ++k) out.set_coeff(k, coef_[static_cast<size_t>(k)] - o.coef_[static_cast<size_t>(k)]);
    return out;
}

bool RSeries::operator==(const RSeries& o) const {
    int ord = std::min(order_, o.order_);
    for (int k = 0; k <= ord; ++k)
        if (!(coef_[static_cast<size_t>(k)] == o.coef_[static_cast<size_t>(k)])) return false;
    return true;
}

RSeries RSeries::truncated(int order) const {
    RSeries out(*t_, order);
    for (int k = 0; k <= std::min(order, order_); ++k) out.set_coeff(k, coef_[static_cast<size_t>(k)]);
    return out;
}

RSeries RSeries::substituted_negx() const {
    RSeries out = *this;
    for (int k = 1; k <= order_; k += 2) out.set_coeff(k, -coef_[static_cast<size_t>(k)]);
    return out;
}

RSeries RSeries::substituted_power(int n) const {
    if (n < 1) throw DataError("substitution power must be positive");
    RSeries out(*t_, order_ * n);
    for (int k = 0; k <= order_; ++k) out.set_coeff(k * n, coef_[static_cast<size_t>(k)]);
    return out;
}

RSeries RSeries::reciprocal() const {
    if (!(coef_[0] == VirtualCharacter::trivial(*t_)))
        throw DataError("RSeries reciprocal requires unit constant term");
    RSeries out(*t_, order_);
    out.set_coeff(0, VirtualCharacter::trivial(*t_));
    for (int k = 1; k <= order_; ++k) {
        ClassFunction acc;
        for (int i = 1; i <= k; ++i) {
            if (coef_[static_cast<size_t>(i)].is_zero()) continue;
            acc = acc + coef_[static_cast<size_t>(i)].values() * out.coeff(k - i).values();
        }
        out.set_coeff(k, VirtualCharacter::from_values_lazy(*t_, -acc));
    }
    return out;
}

TruncatedSeries<Rat> RSeries::dimensions() const {
    std::vector<Rat> c;
    for (int k = 0; k <= order_; ++k) c.emplace_back(Rat(coef_[static_cast<size_t>(k)].dimension()));
    return TruncatedSeries<Rat>(0, std::move(c), order_);
}

namespace {

// shared recurrence: k*T^k = sum_{i=1}^{k} sign_i psi^i(U) T^{k-i} with
// sign_i = (-1)^{i-1} for Lambda and +1 for S
RSeries power_series_rec(const VirtualCharacter& U, int N, bool alternating) {
    const CharacterTable& t = U.table();
    std::vector<ClassFunction> psi;  // psi^1..psi^N values
    psi.reserve(static_cast<size_t>(N));
    for (int i = 1; i <= N; ++i) {
        ClassFunction p;
        for (int c = 0; c < kNumClasses; ++c) p.at(c) = U.values().at(t.power_class(c, Int(i)));
        psi.push_back(std::move(p));
    }
    std::vector<ClassFunction> coef(static_cast<size_t>(N) + 1);
    coef[0] = ClassFunction::constant(MultiQuad(1L));
    for (int k = 1; k <= N; ++k) {
        ClassFunction acc;
        for (int i = 1; i <= k; ++i) {
            ClassFunction term = psi[static_cast<size_t>(i - 1)] * coef[static_cast<size_t>(k - i)];
            if (alternating && i % 2 == 0) term = -term;
            acc = acc + term;
        }
        coef[static_cast<size_t>(k)] = acc.div_int(Int(k));
    }
    RSeries out(t, N);
    for (int k = 0; k <= N; ++k)
        out.set_coeff(k, VirtualCharacter::from_values(t, std::move(coef[static_cast<size_t>(k)])));
    return out;
}

}  // namespace

RSeries lambda_series(const VirtualCharacter& U, int N) { return power_series_rec(U, N, true); }

RSeries sigma_series(const VirtualCharacter& U, int N) { return power_series_rec(U, N, false); }

std::vector<VirtualCharacter> factor_sigma(const RSeries& f) {
    const CharacterTable& t = f.table();
    const int N = f.order();
    if (!(f.coeff(0) == VirtualCharacter::trivial(t)))
        throw DataError("factor_sigma requires unit constant term");
    RSeries g = f;
    std::vector<VirtualCharacter> out;
    out.reserve(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        VirtualCharacter Un = g.coeff(n);
        out.push_back(Un);
        if (!Un.is_zero())
            g = g * sigma_series(-Un, N / n).substituted_power(n).truncated(N);
    }
    return out;
}

std::vector<VirtualCharacter> factor_alternating(const RSeries& f) {
    auto Uprime = factor_sigma(f.substituted_negx());
    for (size_t i = 0; i < Uprime.size(); ++i)
        if (i % 2 == 0) Uprime[i] = -Uprime[i];  // odd n = i+1 flips sign
    return Uprime;
}

RSeries sigma_product(const CharacterTable& t, const std::vector<VirtualCharacter>& U, int N) {
    RSeries g = RSeries::unit(t, N);
    for (size_t i = 0; i < U.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        if (n > N) break;
        if (U[i].is_zero()) continue;
        g = g * sigma_series(U[i], N / n).substituted_power(n).truncated(N);
    }
    return g;
}

RSeries alternating_product(const CharacterTable& t, const std::vector<VirtualCharacter>& U, int N) {
    RSeries g = RSeries::unit(t, N);
    for (size_t i = 0; i < U.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        if (n > N) break;
        if (U[i].is_zero()) continue;
        RSeries fac = (n % 2 == 1) ? lambda_series(U[i], N / n) : sigma_series(U[i], N / n);
        g = g * fac.substituted_power(n).truncated(N);
    }
    return g;
}

}  // namespace m24rh::repring
