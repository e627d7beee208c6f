#include "g2az/dualtable.hpp"

#include <doctest.h>

using namespace g2az;

TEST_CASE("module labels") {
    StandardModuleLabel a = parse_module_label("(t_e, e_{a^v + b^v}, 1)");
    REQUIRE(a.parts.size() == 1);
    CHECK(a.parts[0].semisimple == "t_e");
    CHECK(a.parts[0].nilpotent == "e_{a^v+b^v}");
    CHECK(a.parts[0].rep == "1");
    CHECK(parse_module_label("(t_e,e_{a^v+b^v},1)") == a);
    StandardModuleLabel p = parse_module_label("((t_a, 0, 1), (t_a, e_{a1}, 1))");
    CHECK(p.parts.size() == 2);
    CHECK(parse_module_label(p.str()) == p);
    CHECK_THROWS_AS(parse_module_label("(t_a, 0)"), Error);
}

TEST_CASE("lookups") {
    DualTable t = DualTable::load_default();
    SignedModule a = t.lookup_dual("(t_a, e_{a1}, 1)", "intermediate-a");
    CHECK(a.sign == -1);
    CHECK(a.label == parse_module_label("(t_a, 0, 1)"));

    SignedModule b = t.lookup_dual("(t_e, e_{a^v + b^v}, 1)", "unit-half-g2");
    CHECK(b.sign == 1);
    CHECK(b.label == parse_module_label("(t_e, e_{a^v + b^v}, 1)"));

    SignedModule c = t.lookup_dual("((t_a, 0, 1), (t_a, e_{a1}, 1))", "quadratic-ramified-so4");
    CHECK(c.label == parse_module_label("((t_a, e_{a1}, 1), (t_a, 0, 1))"));

    SignedModule d = t.lookup_dual("(t_a, e_{a^v} + e_{b^v}, 1)", "unit-three-half-g2");
    CHECK(d.label == parse_module_label("(t_a, 0, 1)"));

    CHECK_THROWS_AS(t.lookup_dual("(t_z, 0, 1)", "unit-half-g2"), Error);
    CHECK_THROWS_AS(t.block("no-such-block"), Error);
}

TEST_CASE("lookup is an involution on every row") {
    DualTable t = DualTable::load_default();
    std::size_t rows = 0;
    for (const auto& b : t.blocks())
        for (const auto& r : b.rows) {
            SignedModule x = t.lookup_dual(r.hecke_left, b.name);
            SignedModule y = t.lookup_dual(x.label, b.name);
            CHECK(y.label == r.hecke_left);
            CHECK(x.sign * y.sign == 1);
            ++rows;
        }
    CHECK(rows > 0);
}

TEST_CASE("cross check against the duality engine") {
    DualTable t = DualTable::load_default();
    ConsistencyReport rep = t.cross_check();
    CHECK_FALSE(rep.items.empty());
    for (const auto& it : rep.items) CHECK_MESSAGE(it.ok, it.what << " " << it.detail);
}

TEST_CASE("unitarity flags are closed under duality in verified blocks") {
    DualTable t = DualTable::load_default();
    for (const auto& b : t.blocks()) {
        if (!b.verified) continue;
        for (const auto& r : b.rows) CHECK(r.left.unitary == r.right.unitary);
    }
}
