#include <doctest.h>

#include "m24rh/data.hpp"
#include "m24rh/jacobi.hpp"
#include "m24rh/rho.hpp"

using namespace m24rh;
namespace ja = m24rh::jacobi;

namespace {

const CharacterTable& table() { return data::builtin_table(); }

std::map<std::string, ja::ClassFormData> forms() {
    return ja::load_class_form_data(data::embedded_class_form_data());
}

// Euler pentagonal-number oracle: prod (1-q^n) = sum_k (-1)^k q^{k(3k-1)/2}
std::map<int, long> pentagonal_coeffs(int N) {
    std::map<int, long> c;
    for (long k = -200; k <= 200; ++k) {
        long e = k * (3 * k - 1) / 2;
        if (e >= 0 && e <= N) c[static_cast<int>(e)] += (k % 2 == 0) ? 1 : -1;
    }
    return c;
}

}  // namespace

TEST_CASE("eta expansions against the pentagonal oracle") {
    const int N = 10;
    ja::QYJet eta = ja::eta_qexp(2, N);  // eta(tau)
    auto pent = pentagonal_coeffs(N - 1);
    for (const auto& [e, c] : pent) {
        INFO("exponent " << e);
        CHECK(eta.coeff({48 * e + 2, 0, 0}) == MultiQuad(c));
    }
    // scale 2 is the q -> q^2 substitution of scale 1
    ja::QYJet eta2 = ja::eta_qexp(4, N);
    for (const auto& [k, c] : eta.terms()) {
        if (2 * k.q48 <= 48 * N) CHECK(eta2.coeff({2 * k.q48, 0, 0}) == c);
    }
    // half scale lands on the 1/48 grid with leading q^{1/48}
    ja::QYJet etah = ja::eta_qexp(1, 2);
    CHECK(etah.valuation_bound() == 1);
    CHECK(etah.coeff({1, 0, 0}) == MultiQuad(1L));
    CHECK_THROWS_AS(ja::eta_qexp(0, 2), ExactError);
}

TEST_CASE("eta products from cycle shapes") {
    const int N = 3;
    auto fs = forms();
    CHECK(ja::EtaProduct::from_shape(fs.at("2A").shape).factors() ==
          std::map<int, int>({{1, 8}, {2, 8}}));
    CHECK(ja::eta_g(fs.at("2A").shape, false, N)
              .equal_up_to(ja::EtaProduct::from_shape(fs.at("2A").shape).eval(false, N), 48 * N));
    CHECK_THROWS_AS(ja::eta_g(CycleShape::parse("1^3"), false, 2), ExactError);
    // 1A: eta(tau)^24 has leading q^1
    ja::QYJet e1a = ja::eta_g(fs.at("1A").shape, false, N);
    CHECK(e1a.valuation_bound() == 48);
    CHECK(e1a.coeff({48, 0, 0}) == MultiQuad(1L));
    CHECK(e1a.coeff({96, 0, 0}) == MultiQuad(-24L));
    // 23A: eta(tau) eta(23tau)
    ja::QYJet e23 = ja::EtaProduct::from_shape(fs.at("23A").shape).eval(false, N);
    CHECK(e23.valuation_bound() == 48);
    // half evaluation has leading q^{1/2}
    ja::QYJet e2a = ja::EtaProduct::from_shape(fs.at("2A").shape).eval(true, N);
    CHECK(e2a.valuation_bound() == 24);

    // the minus rule
    ja::EtaProduct m2b = ja::EtaProduct::from_shape(fs.at("2B").shape).minus_g();
    CHECK(m2b.factors() == std::map<int, int>({{2, 12}}));
    ja::EtaProduct m3b = ja::EtaProduct::from_shape(fs.at("3B").shape).minus_g();
    CHECK(m3b.factors() == std::map<int, int>({{3, -8}, {6, 8}}));
    ja::EtaProduct m1a = ja::EtaProduct::from_shape(fs.at("1A").shape).minus_g();
    CHECK(m1a.factors() == std::map<int, int>({{1, -24}, {2, 24}}));
    // eta_{-1A} = eta(2tau)^24/eta(tau)^24 directly
    ja::QYJet lhs = ja::eta_minus_g(fs.at("1A").shape, false, N);
    ja::QYJet rhs = ja::eta_qexp(4, N + 3);
    for (int i = 0; i < 23; ++i) rhs = rhs * ja::eta_qexp(4, N + 3);
    ja::QYJet den = ja::eta_qexp(2, N + 3);
    for (int i = 0; i < 23; ++i) den = den * ja::eta_qexp(2, N + 3);
    rhs = rhs * den.reciprocal();
    CHECK(lhs.equal_up_to(rhs, 48 * N));
}

TEST_CASE("theta expansions") {
    ja::QYJet t3 = ja::theta_qexp(3, 2, 2);
    CHECK(t3.coeff({0, 0, 0}) == MultiQuad(1L));
    CHECK(t3.coeff({24, 4, 0}) == MultiQuad(1L));
    CHECK(t3.coeff({24, -4, 0}) == MultiQuad(1L));
    ja::QYJet t4 = ja::theta_qexp(4, 2, 2);
    CHECK(t4.coeff({24, 4, 0}) == MultiQuad(-1L));
    CHECK(t4.coeff({24, -4, 0}) == MultiQuad(-1L));
    // theta_1(tau, z) vanishes identically at y = 1
    ja::QYJet t1 = ja::theta_qexp(1, 1, 3);
    ja::QYJet at_one(t1.trunc48());
    for (const auto& [k, c] : t1.terms()) at_one.add_term({k.q48, 0, 0}, c);
    CHECK(at_one.known_zero());
    // theta_2(tau,0) = 2 q^{1/8} (1 + ...)
    ja::QYJet t20 = ja::theta_zero_arg(2, 3);
    CHECK(t20.valuation_bound() == 6);
    CHECK(t20.coeff({6, 0, 0}) == MultiQuad(2L));
    CHECK(ja::theta_zero_arg(1, 3).known_zero());
}

TEST_CASE("phi_g constant terms and symmetries") {
    const auto& t = table();
    ja::FormContext ctx(forms(), 3);
    for (const std::string lbl : {"1A", "2A", "23A", "12B", "3B"}) {
        ja::QYJet phi = ctx.phi_g(lbl);
        CHECK(phi.integral_exponents());
        Int r1 = rho::rho1(t, t.class_index(lbl));
        ja::QYJet q0 = phi.q0_slice();
        CHECK(q0.coeff({0, -4, 0}) == MultiQuad(1L));
        CHECK(q0.coeff({0, 4, 0}) == MultiQuad(1L));
        CHECK(q0.coeff({0, 0, 0}) == MultiQuad(r1));
        bool even = phi.substitute_y_inverse().equal_up_to(phi, phi.trunc48());
        CHECK(even == ctx.form_data(lbl).D.is_zero());
    }
    CHECK(ctx.phi_identity().equal_up_to(ctx.phi_g("1A"), 48 * 3));
    CHECK_THROWS_AS(ctx.phi_g("99Z"), DataError);
}

TEST_CASE("h_threevar and specializations") {
    ja::FormContext ctx(forms(), 3);
    ja::QYJet H = ctx.h_threevar();
    ja::QYJet h0 = H.q0_slice();
    CHECK(h0.coeff({0, -2, -2}) == MultiQuad(1L));
    CHECK(h0.coeff({0, 2, -2}) == MultiQuad(1L));
    CHECK(h0.coeff({0, 0, 0}) == MultiQuad(20L));
    CHECK(h0.coeff({0, -2, 2}) == MultiQuad(1L));
    CHECK(h0.coeff({0, 2, 2}) == MultiQuad(1L));
    CHECK(H.specialize_v_to_y().equal_up_to(ctx.phi_identity(), 48 * 3));
    ja::QYJet v1 = H.specialize_v_to_one().q0_slice();
    CHECK(v1.coeff({0, -2, 0}) == MultiQuad(2L));
    CHECK(v1.coeff({0, 0, 0}) == MultiQuad(20L));
    CHECK(v1.coeff({0, 2, 0}) == MultiQuad(2L));
}

TEST_CASE("cd magnitudes") {
    auto fs = forms();
    auto m1a = ja::cd_magnitude_check(fs.at("1A"));
    CHECK(m1a.c_squared == Int(16777216));
    CHECK(m1a.d_squared == Int(0));
    CHECK(m1a.pass);
    auto m21 = ja::cd_magnitude_check(fs.at("21A"));
    CHECK(m21.d_squared == Int(63));
    CHECK(m21.pass);
    auto m2b = ja::cd_magnitude_check(fs.at("2B"));
    CHECK(m2b.c_squared == Int(0));
    CHECK(m2b.pass);
    auto m23 = ja::cd_magnitude_check(fs.at("23A"));
    CHECK(m23.d_squared == Int(23));
    CHECK(m23.pass);
    for (const auto& [lbl, d] : fs) {
        INFO(lbl);
        CHECK(ja::cd_magnitude_check(d).pass);
    }
}

TEST_CASE("class form data validation") {
    CHECK_THROWS_AS(ja::load_class_form_data("2B 2^12 5 0\n"), DataError);   // C must vanish
    CHECK_THROWS_AS(ja::load_class_form_data("1A 1^24 4096 i\n"), DataError);  // D must vanish
    CHECK_THROWS_AS(ja::load_class_form_data("1A 1^23 4096 0\n"), DataError);  // bad shape
}
