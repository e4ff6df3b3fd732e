#include "m24rh/m24.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace m24rh {

CycleShape::CycleShape(std::vector<std::pair<int, int>> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
    for (const auto& [k, m] : factors_)
        if (k <= 0 || m <= 0) throw DataError("cycle shape with nonpositive entry");
}

CycleShape CycleShape::parse(const std::string& text) {
    std::vector<std::pair<int, int>> fac;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '.')) {
        if (part.empty()) throw DataError("bad cycle shape '" + text + "'");
        auto caret = part.find('^');
        int k = std::stoi(part.substr(0, caret));
        int m = caret == std::string::npos ? 1 : std::stoi(part.substr(caret + 1));
        fac.emplace_back(k, m);
    }
    if (fac.empty()) throw DataError("empty cycle shape");
    return CycleShape(std::move(fac));
}

int CycleShape::total_points() const {
    int s = 0;
    for (const auto& [k, m] : factors_) s += k * m;
    return s;
}

int CycleShape::cycle_count() const {
    int s = 0;
    for (const auto& [k, m] : factors_) s += m;
    return s;
}

int CycleShape::fixed_points() const {
    for (const auto& [k, m] : factors_)
        if (k == 1) return m;
    return 0;
}

int CycleShape::even_cycle_count() const {
    int s = 0;
    for (const auto& [k, m] : factors_)
        if (k % 2 == 0) s += m;
    return s;
}

int CycleShape::order() const {
    int l = 1;
    for (const auto& [k, m] : factors_) l = std::lcm(l, k);
    return l;
}

std::string CycleShape::str() const {
    std::string out;
    for (const auto& [k, m] : factors_) {
        if (!out.empty()) out += ".";
        out += std::to_string(k);
        if (m > 1) out += "^" + std::to_string(m);
    }
    return out;
}

ClassFunction ClassFunction::constant(const MultiQuad& x) {
    std::array<MultiQuad, kNumClasses> v;
    v.fill(x);
    return ClassFunction(std::move(v));
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
    ClassFunction r = *this;
    for (int c = 0; c < kNumClasses; ++c) r.v_[static_cast<size_t>(c)] += o.v_[static_cast<size_t>(c)];
    return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const {
    ClassFunction r = *this;
    for (int c = 0; c < kNumClasses; ++c) r.v_[static_cast<size_t>(c)] -= o.v_[static_cast<size_t>(c)];
    return r;
}

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
    ClassFunction r = *this;
    for (int c = 0; c < kNumClasses; ++c) r.v_[static_cast<size_t>(c)] *= o.v_[static_cast<size_t>(c)];
    return r;
}

ClassFunction ClassFunction::operator-() const {
    ClassFunction r;
    for (int c = 0; c < kNumClasses; ++c) r.v_[static_cast<size_t>(c)] = -v_[static_cast<size_t>(c)];
    return r;
}

ClassFunction ClassFunction::conj() const {
    ClassFunction r;
    for (int c = 0; c < kNumClasses; ++c) r.v_[static_cast<size_t>(c)] = v_[static_cast<size_t>(c)].conj();
    return r;
}

ClassFunction ClassFunction::div_int(const Int& k) const {
    ClassFunction r;
    for (int c = 0; c < kNumClasses; ++c) r.v_[static_cast<size_t>(c)] = v_[static_cast<size_t>(c)].div_int(k);
    return r;
}

ClassFunction ClassFunction::scaled(const MultiQuad& x) const {
    ClassFunction r;
    for (int c = 0; c < kNumClasses; ++c) r.v_[static_cast<size_t>(c)] = v_[static_cast<size_t>(c)] * x;
    return r;
}

bool ClassFunction::is_zero() const {
    for (int c = 0; c < kNumClasses; ++c)
        if (!v_[static_cast<size_t>(c)].is_zero()) return false;
    return true;
}

ClassFunction ring_inv(const ClassFunction& f) {
    std::array<MultiQuad, kNumClasses> out;
    for (int c = 0; c < kNumClasses; ++c) out[static_cast<size_t>(c)] = f.at(c).inverse();
    return ClassFunction(std::move(out));
}

namespace {

// character-table entry tokens: integers or [sign][mult]b{7,15,23}[*]
MultiQuad parse_table_entry(const std::string& tok) {
    std::string t = tok;
    bool conj = false;
    if (!t.empty() && t.back() == '*') {
        conj = true;
        t.pop_back();
    }
    long sign = 1;
    if (!t.empty() && t[0] == '-') { sign = -1; t = t.substr(1); }
    else if (!t.empty() && t[0] == '+') t = t.substr(1);
    for (int n : {7, 15, 23}) {
        std::string key = "b" + std::to_string(n);
        if (t.size() >= key.size() && t.compare(t.size() - key.size(), key.size(), key) == 0) {
            std::string mult = t.substr(0, t.size() - key.size());
            long m = mult.empty() ? 1 : std::stol(mult);
            MultiQuad v = MultiQuad::b(n);
            if (conj) v = v.conj();
            return MultiQuad(sign * m) * v;
        }
    }
    if (conj) throw DataError("conjugate marker on integer entry '" + tok + "'");
    return MultiQuad(Int(std::string(sign < 0 ? "-" : "") + t));
}

}  // namespace

CharacterTable CharacterTable::load(const std::string& text) {
    std::map<std::string, std::vector<std::string>> rows;
    std::vector<std::string> chi_order;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (rows.count(key)) throw DataError("duplicate row '" + key + "'");
        rows[key] = std::move(toks);
        if (key.rfind("chi", 0) == 0) chi_order.push_back(key);
    }
    auto need = [&](const std::string& key) -> const std::vector<std::string>& {
        auto it = rows.find(key);
        if (it == rows.end()) throw DataError("missing row '" + key + "'");
        if (it->second.size() != kNumClasses && key.rfind("chi", 0) != 0)
            throw DataError("row '" + key + "' does not have 26 entries");
        return it->second;
    };

    CharacterTable tab;
    const auto& labels = need("classes");
    const auto& orders = need("orders");
    const auto& shapes = need("shapes");
    for (int c = 0; c < kNumClasses; ++c) {
        ConjClass cc;
        cc.label = labels[static_cast<size_t>(c)];
        cc.element_order = std::stoi(orders[static_cast<size_t>(c)]);
        cc.cycle_shape = CycleShape::parse(shapes[static_cast<size_t>(c)]);
        tab.classes_.push_back(std::move(cc));
        tab.index_[tab.classes_.back().label] = c;
    }
    for (int p : kTablePrimes) {
        const auto& row = need("pow" + std::to_string(p));
        for (int c = 0; c < kNumClasses; ++c) {
            auto it = tab.index_.find(row[static_cast<size_t>(c)]);
            if (it == tab.index_.end())
                throw DataError("pow" + std::to_string(p) + " references unknown class '" +
                                row[static_cast<size_t>(c)] + "'");
            tab.classes_[static_cast<size_t>(c)].power_images[p] = it->second;
        }
    }
    if (chi_order.size() != kNumClasses) throw DataError("expected 26 character rows");
    for (int i = 0; i < kNumClasses; ++i) {
        const auto& row = need("chi" + std::to_string(i + 1));
        if (row.size() != kNumClasses + 1)
            throw DataError("chi" + std::to_string(i + 1) + " must carry fs flag plus 26 entries");
        tab.fs_.push_back(row[0][0]);
        std::array<MultiQuad, kNumClasses> vals;
        for (int c = 0; c < kNumClasses; ++c)
            vals[static_cast<size_t>(c)] = parse_table_entry(row[static_cast<size_t>(c) + 1]);
        tab.irr_.emplace_back(std::move(vals));
    }
    tab.validate();
    return tab;
}

void CharacterTable::validate() {
    // cycle shapes cover 24 points; element orders match the shapes
    for (const auto& cc : classes_) {
        if (cc.cycle_shape.total_points() != 24)
            throw DataError("cycle shape of " + cc.label + " does not sum to 24");
        if (cc.cycle_shape.order() != cc.element_order)
            throw DataError("element order of " + cc.label + " is not the lcm of its cycle shape");
    }
    // centralizer orders by column orthogonality: #C(g) = sum_i |chi_i(g)|^2
    centralizer_.clear();
    for (int c = 0; c < kNumClasses; ++c) {
        MultiQuad s;
        for (int i = 0; i < kNumClasses; ++i) s += irr_[static_cast<size_t>(i)].at(c).norm2();
        if (!s.is_rational_integer())
            throw DataError("column norm at " + classes_[static_cast<size_t>(c)].label +
                            " is not a rational integer");
        centralizer_.push_back(s.as_integer());
    }
    group_order_ = centralizer_[0];
    // class equation: sum #M24/#C(g) = #M24
    Int cls_sum = 0;
    for (const auto& c : centralizer_) {
        if (group_order_ % c != 0)
            throw DataError("class equation: centralizer order does not divide the group order");
        cls_sum += group_order_ / c;
    }
    if (cls_sum != group_order_) throw DataError("class equation failed");
    // row orthogonality
    for (int i = 0; i < kNumClasses; ++i)
        for (int j = i; j < kNumClasses; ++j) {
            MultiQuad ip = inner_product(irr_[static_cast<size_t>(i)], irr_[static_cast<size_t>(j)]);
            MultiQuad expect = MultiQuad(i == j ? 1 : 0);
            if (ip != expect)
                throw DataError("row orthogonality <chi_" + std::to_string(i + 1) + ", chi_" +
                                std::to_string(j + 1) + "> = " + ip.str());
        }
    // column orthogonality for distinct columns
    for (int c = 0; c < kNumClasses; ++c)
        for (int d = c + 1; d < kNumClasses; ++d) {
            MultiQuad s;
            for (int i = 0; i < kNumClasses; ++i)
                s += irr_[static_cast<size_t>(i)].at(c) * irr_[static_cast<size_t>(i)].at(d).conj();
            if (!s.is_zero())
                throw DataError("column orthogonality " + classes_[static_cast<size_t>(c)].label +
                                " vs " + classes_[static_cast<size_t>(d)].label + " = " + s.str());
        }
    // prime power maps respect order arithmetic
    for (const auto& cc : classes_)
        for (const auto& [p, target] : cc.power_images) {
            int want = cc.element_order / std::gcd(cc.element_order, p);
            if (classes_[static_cast<size_t>(target)].element_order != want)
                throw DataError("power map [g^" + std::to_string(p) + "] order mismatch at " + cc.label);
        }
    // permutation character: chi_1 + chi_2 counts fixed points
    for (int c = 0; c < kNumClasses; ++c) {
        MultiQuad perm = irr_[0].at(c) + irr_[1].at(c);
        if (perm != MultiQuad(static_cast<long>(classes_[static_cast<size_t>(c)].cycle_shape.fixed_points())))
            throw DataError("chi_1+chi_2 fixed-point count failed at " + classes_[static_cast<size_t>(c)].label);
    }
    // cache the decomposition kernel #[c] * conj(chi_i(c)); the single
    // division by #G happens once per inner product
    decomp_.clear();
    for (int i = 0; i < kNumClasses; ++i) {
        ClassFunction w;
        for (int c = 0; c < kNumClasses; ++c)
            w.at(c) = irr_[static_cast<size_t>(i)].at(c).conj() *
                      MultiQuad(Int(group_order_ / centralizer_[static_cast<size_t>(c)]));
        decomp_.push_back(std::move(w));
    }
    // fixed subspace of the 24-dim representation is >= 2-dimensional
    for (const auto& cc : classes_)
        if (cc.cycle_shape.cycle_count() < 2)
            throw DataError("class " + cc.label + " has fewer than 2 cycles");
}

int CharacterTable::class_index(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw DataError("unknown class label '" + label + "'");
    return it->second;
}

int CharacterTable::power_class(int ci, const Int& k) const {
    const int o = cls(ci).element_order;
    Int kk = k % o;
    if (kk < 0) kk += o;
    if (kk == 0) return class_index("1A");
    int cur = ci;
    long rest = kk.convert_to<long>();
    for (int p : kTablePrimes) {
        while (rest % p == 0) {
            cur = classes_[static_cast<size_t>(cur)].power_images.at(p);
            rest /= p;
        }
    }
    if (rest == 1) return cur;
    // Residual factor coprime to every table prime (13, 17 or 19 after
    // reduction): express it as a product of table primes mod the order.
    int o2 = cls(cur).element_order;
    rest %= o2;
    if (rest == 1) return cur;
    std::map<long, std::vector<int>> seen{{1, {}}};
    std::deque<long> queue{1};
    while (!queue.empty()) {
        long r = queue.front();
        queue.pop_front();
        if (r == rest) break;
        for (int p : kTablePrimes) {
            long r2 = (r * p) % o2;
            if (!seen.count(r2)) {
                auto path = seen[r];
                path.push_back(p);
                seen[r2] = std::move(path);
                queue.push_back(r2);
            }
        }
    }
    auto it = seen.find(rest);
    if (it == seen.end())
        throw DataError("power map: residue not reachable from table primes");
    for (int p : it->second) cur = classes_[static_cast<size_t>(cur)].power_images.at(p);
    return cur;
}

MultiQuad CharacterTable::inner_product(const ClassFunction& f, const ClassFunction& h) const {
    MultiQuad s;
    for (int c = 0; c < kNumClasses; ++c)
        s += (f.at(c) * h.at(c).conj()).div_int(centralizer_[static_cast<size_t>(c)]);
    return s;
}

std::array<MultiQuad, kNumClasses> CharacterTable::decompose(const ClassFunction& f,
                                                             bool* all_integral) const {
    std::array<MultiQuad, kNumClasses> out;
    bool ok = true;
    for (int i = 0; i < kNumClasses; ++i) {
        MultiQuad s;
        const ClassFunction& w = decomp_[static_cast<size_t>(i)];
        for (int c = 0; c < kNumClasses; ++c) s += f.at(c) * w.at(c);
        s = s.div_int(group_order_);
        ok = ok && s.is_rational_integer();
        out[static_cast<size_t>(i)] = std::move(s);
    }
    if (all_integral) *all_integral = ok;
    return out;
}

}  // namespace m24rh
