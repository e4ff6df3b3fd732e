#include "m24rh/exactnum.hpp"

#include <cctype>
#include <sstream>

namespace m24rh {

namespace {
// squares of the four generators, by bit position
constexpr int kSquares[4] = {-1, 7, 15, 23};

std::string basis_token(int mask) {
    static const char* names[4] = {"i", "s7", "s15", "s23"};
    std::string out;
    for (int b = 0; b < 4; ++b) {
        if (mask & (1 << b)) {
            if (!out.empty()) out += "*";
            out += names[b];
        }
    }
    return out;
}
}  // namespace

MultiQuad MultiQuad::unit(int mask) {
    if (mask < 0 || mask >= kDim) throw ExactError("MultiQuad basis mask out of range");
    MultiQuad m;
    m.c_[static_cast<size_t>(mask)] = 1;
    return m;
}

MultiQuad MultiQuad::b(int n) {
    int mask;
    switch (n) {
        case 7: mask = 2; break;
        case 15: mask = 4; break;
        case 23: mask = 8; break;
        default: throw ExactError("b(n) defined for n in {7,15,23}");
    }
    MultiQuad m;
    m.c_[0] = Rat(-1, 2);
    m.c_[static_cast<size_t>(mask | 1)] = Rat(1, 2);  // i * sqrt(n)
    return m;
}

MultiQuad MultiQuad::operator+(const MultiQuad& o) const {
    MultiQuad r;
    for (int k = 0; k < kDim; ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

MultiQuad MultiQuad::operator-(const MultiQuad& o) const {
    MultiQuad r;
    for (int k = 0; k < kDim; ++k) r.c_[k] = c_[k] - o.c_[k];
    return r;
}

MultiQuad MultiQuad::operator-() const {
    MultiQuad r;
    for (int k = 0; k < kDim; ++k) r.c_[k] = -c_[k];
    return r;
}

MultiQuad MultiQuad::operator*(const MultiQuad& o) const {
    // Fast path: purely rational factors dominate in series work.
    if (is_rational()) {
        if (c_[0] == 0) return MultiQuad();
        MultiQuad r;
        for (int k = 0; k < kDim; ++k)
            if (o.c_[k] != 0) r.c_[k] = c_[0] * o.c_[k];
        return r;
    }
    if (o.is_rational()) return o * *this;
    MultiQuad r;
    for (int s = 0; s < kDim; ++s) {
        if (c_[s] == 0) continue;
        for (int t = 0; t < kDim; ++t) {
            if (o.c_[t] == 0) continue;
            Rat f = c_[s] * o.c_[t];
            int common = s & t;
            for (int b = 0; b < 4; ++b)
                if (common & (1 << b)) f *= kSquares[b];
            r.c_[s ^ t] += f;
        }
    }
    return r;
}

MultiQuad MultiQuad::conj() const {
    MultiQuad r;
    for (int k = 0; k < kDim; ++k) r.c_[k] = (k & 1) ? -c_[k] : c_[k];
    return r;
}

MultiQuad MultiQuad::automorph(int flip_mask) const {
    MultiQuad r;
    for (int k = 0; k < kDim; ++k) {
        int common = k & flip_mask;
        int parity = 0;
        for (int b = 0; b < 4; ++b) parity ^= (common >> b) & 1;
        r.c_[k] = parity ? -c_[k] : c_[k];
    }
    return r;
}

MultiQuad MultiQuad::inverse() const {
    if (is_zero()) throw ExactError("inverse of zero");
    if (is_rational()) return MultiQuad(Rat(1) / c_[0]);
    // product of the 15 nontrivial Galois conjugates; z * that = the norm,
    // a nonzero rational
    MultiQuad prod(1L);
    for (int t = 1; t < kDim; ++t) prod *= automorph(t);
    MultiQuad norm = *this * prod;
    if (!norm.is_rational() || norm.rational_part() == 0)
        throw ExactError("field norm failed to be a nonzero rational");
    return prod.div_rat(norm.rational_part());
}

MultiQuad MultiQuad::div_int(const Int& k) const {
    if (k == 0) throw ExactError("division by zero");
    MultiQuad r;
    for (int m = 0; m < kDim; ++m) r.c_[m] = c_[m] / Rat(k);
    return r;
}

MultiQuad MultiQuad::div_rat(const Rat& k) const {
    if (k == 0) throw ExactError("division by zero");
    MultiQuad r;
    for (int m = 0; m < kDim; ++m) r.c_[m] = c_[m] / k;
    return r;
}

bool MultiQuad::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool MultiQuad::is_rational() const {
    for (int k = 1; k < kDim; ++k)
        if (c_[k] != 0) return false;
    return true;
}

bool MultiQuad::is_rational_integer() const {
    return is_rational() && rat_is_int(c_[0]);
}

Rat MultiQuad::as_rational() const {
    if (!is_rational()) throw ExactError("MultiQuad value is irrational: " + str());
    return c_[0];
}

Int MultiQuad::as_integer() const {
    Rat r = as_rational();
    if (!rat_is_int(r)) throw ExactError("MultiQuad value is not an integer: " + str());
    return rat_num(r);
}

double MultiQuad::to_double() const {
    static const double roots[4] = {0.0, 2.6457513110645907, 3.872983346207417, 4.795831523312719};
    double re = 0.0;
    // imaginary part dropped; callers only render real magnitudes this way
    for (int k = 0; k < kDim; ++k) {
        if (c_[k] == 0 || (k & 1)) continue;
        double f = c_[k].convert_to<double>();
        for (int b = 1; b < 4; ++b)
            if (k & (1 << b)) f *= roots[b];
        re += f;
    }
    return re;
}

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (!rat_is_int(r)) os << "/" << rat_den(r);
    return os.str();
}

std::string MultiQuad::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::string out = "(";
    bool first = true;
    for (int k = 0; k < kDim; ++k) {
        if (c_[k] == 0) continue;
        Rat v = c_[k];
        if (first) {
            if (v < 0) { out += "-"; v = -v; }
        } else {
            out += (v < 0) ? " - " : " + ";
            if (v < 0) v = -v;
        }
        first = false;
        std::string tok = basis_token(k);
        if (tok.empty()) {
            out += rat_str(v);
        } else if (v == 1) {
            out += tok;
        } else {
            out += rat_str(v) + "*" + tok;
        }
    }
    out += ")";
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip() { while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p; }
    bool eat(char c) {
        skip();
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }

    MultiQuad expr() {
        skip();
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        MultiQuad acc = term();
        if (neg) acc = -acc;
        for (;;) {
            skip();
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MultiQuad term() {
        MultiQuad acc = factor();
        while (eat('*')) acc *= factor();
        return acc;
    }

    MultiQuad factor() {
        skip();
        if (eat('(')) {
            MultiQuad inner = expr();
            if (!eat(')')) throw ExactError("MultiQuad parse: missing ')'");
            return inner;
        }
        if (p < s.size() && (std::isdigit(static_cast<unsigned char>(s[p])))) return rational();
        for (const auto& [name, mask] : {std::pair<const char*, int>{"s15", 4},
                                         {"s23", 8},
                                         {"s7", 2},
                                         {"i", 1}}) {
            size_t n = std::string(name).size();
            if (s.compare(p, n, name) == 0) {
                p += n;
                return MultiQuad::unit(mask);
            }
        }
        throw ExactError("MultiQuad parse: unexpected input at '" + s.substr(p) + "'");
    }

    MultiQuad rational() {
        size_t start = p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        Int num(s.substr(start, p - start));
        if (eat('/')) {
            skip();
            size_t d0 = p;
            while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
            if (d0 == p) throw ExactError("MultiQuad parse: expected denominator");
            Int den(s.substr(d0, p - d0));
            return MultiQuad(Rat(num, den));
        }
        return MultiQuad(num);
    }
};

}  // namespace

MultiQuad MultiQuad::parse(const std::string& text) {
    Parser pr(text);
    MultiQuad v = pr.expr();
    pr.skip();
    if (pr.p != text.size()) throw ExactError("MultiQuad parse: trailing input in '" + text + "'");
    return v;
}

}  // namespace m24rh
