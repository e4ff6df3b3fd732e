#include <doctest.h>

#include <numeric>

#include "m24rh/data.hpp"
#include "m24rh/m24.hpp"

using namespace m24rh;

namespace {
const CharacterTable& table() { return data::builtin_table(); }
}  // namespace

TEST_CASE("cycle shapes") {
    CycleShape s = CycleShape::parse("1^2.2.4.8^2");
    CHECK(s.total_points() == 24);
    CHECK(s.order() == 8);
    CHECK(s.cycle_count() == 6);
    CHECK(s.fixed_points() == 2);
    CHECK(s.even_cycle_count() == 4);
    CHECK(s.str() == "1^2.2.4.8^2");
    CHECK(CycleShape::parse("1.23").total_points() == 24);
}

TEST_CASE("loading and derived data") {
    const auto& t = table();
    CHECK(t.group_order() == Int(244823040));
    CHECK(t.centralizer_order(t.class_index("1A")) == Int(244823040));
    CHECK(t.centralizer_order(t.class_index("23A")) == Int(23));
    CHECK(t.irreducible(1).at(t.class_index("2A")) == MultiQuad(7L));
    CHECK(t.irreducible_degree(6) == Int(252));
    CHECK(t.fs_indicator(0) == '+');
    CHECK(t.fs_indicator(2) == 'o');
    CHECK_THROWS_AS(t.class_index("99Z"), DataError);
}

TEST_CASE("the loader rejects corrupted tables") {
    std::string text = data::embedded_character_table();
    // chi2(2A) = 7 -> 8 breaks orthogonality
    auto pos = text.find("chi2 + 23 7");
    REQUIRE(pos != std::string::npos);
    std::string bad = text;
    bad.replace(pos, 11, "chi2 + 23 8");
    CHECK_THROWS_AS(CharacterTable::load(bad), DataError);
    // truncated file
    CHECK_THROWS_AS(CharacterTable::load(text.substr(0, text.size() / 2)), DataError);
}

TEST_CASE("power classes") {
    const auto& t = table();
    CHECK(t.power_class(t.class_index("12A"), Int(5)) == t.class_index("12A"));
    CHECK(t.power_class(t.class_index("2A"), Int(2)) == t.class_index("1A"));
    CHECK(t.power_class(t.class_index("21A"), Int(10)) == t.class_index("21B"));
    // order arithmetic for all classes and many exponents
    for (int c = 0; c < kNumClasses; ++c) {
        int o = t.cls(c).element_order;
        for (int k = 1; k <= 2 * o + 3; ++k) {
            int tc = t.power_class(c, Int(k));
            CHECK(t.cls(tc).element_order == o / std::gcd(o, k));
        }
    }
    // residues 13, 17, 19 exercise the coprime-residual path
    CHECK(t.cls(t.power_class(t.class_index("23A"), Int(13))).element_order == 23);
    CHECK(t.cls(t.power_class(t.class_index("21A"), Int(17))).element_order == 21);
    CHECK(t.cls(t.power_class(t.class_index("15A"), Int(13))).element_order == 15);
}

TEST_CASE("inner products and decomposition") {
    const auto& t = table();
    CHECK(t.inner_product(t.irreducible(6), t.irreducible(6)) == MultiQuad(1L));
    CHECK(t.inner_product(t.irreducible(0), t.irreducible(1)) == MultiQuad());
    CHECK(t.inner_product(t.irreducible(0), t.irreducible(0)) == MultiQuad(1L));
    ClassFunction f = t.irreducible(2) + t.irreducible(3);
    bool integral = false;
    auto d = t.decompose(f, &integral);
    CHECK(integral);
    for (int i = 0; i < kNumClasses; ++i)
        CHECK(d[static_cast<size_t>(i)] == MultiQuad(i == 2 || i == 3 ? 1L : 0L));
}

TEST_CASE("permutation fixed points") {
    const auto& t = table();
    CHECK(t.perm_fixed_points(t.class_index("2A")) == 8);
    CHECK(t.perm_fixed_points(t.class_index("1A")) == 24);
    CHECK(t.perm_fixed_points(t.class_index("23A")) == 1);
    for (int c = 0; c < kNumClasses; ++c) {
        MultiQuad perm = t.irreducible(0).at(c) + t.irreducible(1).at(c);
        CHECK(perm == MultiQuad(static_cast<long>(t.perm_fixed_points(c))));
    }
}
